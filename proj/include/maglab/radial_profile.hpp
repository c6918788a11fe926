#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "maglab/rational.hpp"

namespace maglab {

struct Atom {
    double location;
    double mass;
};

// Atoms omitted beyond the stored list, all following a geometric pattern:
// location_{K+1+i} = location_K * location_ratio^{i+1}, same for masses.
// `mass` is the exact total of the omitted masses.
struct GeometricTail {
    double location_ratio;
    double mass_ratio;
    double mass;
};

namespace detail {
struct MCache {
    std::mutex mu;
    std::unordered_map<double, std::pair<double, double>> values;  // R -> (m, error)
};
}  // namespace detail

// Distribution of the distance from a basepoint of a homogeneous metric
// measure space: an absolutely continuous part on [0, support_end] with
// declared endpoint exponents, plus finitely many atoms, plus an optional
// geometric tail of omitted atoms. Immutable after construction.
struct RadialProfile {
    std::function<double(double)> density;  // empty when purely atomic
    double support_end = 0.0;
    double left_exponent = 0.0;   // density ~ t^left_exponent at 0
    double right_exponent = 0.0;  // density ~ (support_end - t)^right_exponent
    std::vector<Atom> atoms;      // locations strictly decreasing when generated from a scale hierarchy
    double tail_mass = 0.0;
    std::optional<GeometricTail> tail;
    double total_mass = 0.0;
    std::optional<int> dim;
    std::optional<double> vol;
    // m(R) ~ R^{m_decay_exponent} for large R; nullopt means faster than any power.
    std::optional<double> m_decay_exponent;
    std::string name;

    std::shared_ptr<detail::MCache> cache = std::make_shared<detail::MCache>();

    bool has_density() const { return static_cast<bool>(density); }
    bool is_normalized(double tol = 1e-9) const;

    // Checks the mass bookkeeping: integral of the density plus atom and tail
    // masses must reproduce total_mass to 1e-10.
    void validate() const;
};

enum class SphereMetric { Chordal, Geodesic };

// Distance profile of the unit n-sphere, n >= 1.
// Geodesic: density sin^{n-1}(theta) on [0, pi]. Chordal (Euclidean):
// density t^{n-1} (1 - t^2/4)^{(n-2)/2} on [0, 2]. Normalized profiles carry
// total mass 1; unnormalized ones carry the surface volume of S^n.
RadialProfile sphere_profile(int n, SphereMetric metric, bool normalized = true);

// Surface volume of the unit n-sphere.
double sphere_volume(int n);

// Distance profile of the p-adic integers under the p-adic norm with Haar
// probability measure: atoms at p^{-k} with mass (p^{-k} - p^{-k-1}).
// kmax is extended until the omitted tail mass p^{-kmax-1} <= tail_tol.
// Throws NotPrime.
RadialProfile padic_profile(long p, int kmax = 0, double tail_tol = 1e-13);

// Exact rational atoms (location, mass) of the p-adic profile for k = 0..kmax.
std::vector<std::pair<Rational, Rational>> padic_atoms_exact(long p, int kmax);

// Calibration space: a single atom at distance 1 with mass 1, so that
// m(R) = e^{-R} and the Mellin transform of m is the Gamma function.
RadialProfile two_point_homogeneous_profile();

// Builtin selector mini-grammar shared with the CLI:
//   sphere:n=<int>:metric=<chordal|geodesic>:normalized=<bool>
//   padic:p=<prime>
//   twopoint
// Throws ParseError.
RadialProfile parse_radial_selector(const std::string& selector);

}  // namespace maglab
