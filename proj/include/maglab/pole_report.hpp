#pragma once

#include <complex>
#include <string>
#include <vector>

#include "maglab/expansion.hpp"

namespace maglab {

struct PoleEntry {
    Complex location;
    Complex residue;
};

struct PoleReport {
    std::vector<PoleEntry> entries;  // sorted by (Re, Im), locations distinct
    double strip_min = 0.0;          // Re-range the report covers
    double strip_max = 0.0;
    // Lattice points skipped because the residue vanishes (zero coefficient or
    // a reciprocal-Gamma zero); kept so a reconstruction can re-insert them.
    std::vector<Complex> omitted;
    std::string method;
};

// Poles of B(z) predicted by the large-R expansion of m: locations z = gamma - j,
// residues a_j / Gamma(-gamma + j). Zero residues are omitted but logged.
PoleReport residues_from_expansion(const Expansion& m_expansion);

// Inverse direction: a_j = residue(gamma - j) * Gamma(-gamma + j).
// Throws OffLattice when a pole is not on gamma - N.
Expansion expansion_from_residues(const PoleReport& report, double gamma);

std::string pole_report_to_json(const PoleReport& report);

}  // namespace maglab
