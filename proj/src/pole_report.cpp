#include "maglab/pole_report.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "maglab/errors.hpp"
#include "maglab/gamma.hpp"

namespace maglab {

PoleReport residues_from_expansion(const Expansion& m_expansion) {
    PoleReport report;
    double gamma = m_expansion.gamma;
    int order = m_expansion.order();
    report.strip_min = gamma - order - 0.5;
    report.strip_max = std::max(gamma + 0.5, 0.0);
    report.method = "residues_from_expansion";
    for (int j = 0; j <= order; ++j) {
        Complex location(gamma - j, 0.0);
        Complex residue = m_expansion.coeffs[j] * recip_gamma(Complex(-gamma + j, 0.0));
        if (std::abs(residue) == 0.0) {
            report.omitted.push_back(location);
            continue;
        }
        report.entries.push_back({location, residue});
    }
    return report;
}

Expansion expansion_from_residues(const PoleReport& report, double gamma) {
    int max_j = -1;
    for (const PoleEntry& entry : report.entries) {
        double j_real = gamma - entry.location.real();
        long j = std::lround(j_real);
        if (std::abs(entry.location.imag()) > 1e-9 || j < 0 ||
            std::abs(j_real - j) > 1e-9) {
            throw OffLattice("expansion_from_residues: pole not on the lattice gamma - N");
        }
        max_j = std::max(max_j, static_cast<int>(j));
    }
    Expansion e;
    e.gamma = gamma;
    e.coeffs.assign(static_cast<size_t>(std::max(max_j, 0)) + 1, Complex(0.0));
    if (report.entries.empty()) {
        e.coeffs.assign(1, Complex(0.0));
        return e;
    }
    for (const PoleEntry& entry : report.entries) {
        long j = std::lround(gamma - entry.location.real());
        Complex factor = gamma_fn(Complex(-gamma + j, 0.0));
        e.coeffs[static_cast<size_t>(j)] = entry.residue * factor;
    }
    return e;
}

std::string pole_report_to_json(const PoleReport& report) {
    nlohmann::ordered_json obj;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const PoleEntry& entry : report.entries) {
        entries.push_back({{"re", entry.location.real()},
                           {"im", entry.location.imag()},
                           {"res_re", entry.residue.real()},
                           {"res_im", entry.residue.imag()}});
    }
    obj["entries"] = std::move(entries);
    obj["strip"] = {report.strip_min, report.strip_max};
    nlohmann::ordered_json omitted = nlohmann::ordered_json::array();
    for (const Complex& z : report.omitted) {
        omitted.push_back({{"re", z.real()}, {"im", z.imag()}});
    }
    obj["omitted"] = std::move(omitted);
    obj["method"] = report.method;
    return obj.dump(2);
}

}  // namespace maglab
