#pragma once

#include <complex>
#include <vector>

#include "maglab/gtable.hpp"
#include "maglab/radial_profile.hpp"
#include "maglab/rational.hpp"

namespace maglab {

using Complex = std::complex<double>;

// Floating asymptotic expansion f(R) ~ sum_j coeffs[j] R^{gamma - j}.
struct Expansion {
    double gamma = 0.0;
    std::vector<Complex> coeffs;
    // Set when a principal-branch choice was made for a non-real leading
    // coefficient raised to a non-integer power.
    bool branch_flagged = false;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
    Complex leading() const { return coeffs.empty() ? Complex(0) : coeffs.front(); }
};

// Exact expansion: the leading coefficient is kept symbolically as
// base^exponent so that fractional powers round-trip exactly; the remaining
// coefficients are stored as exact ratios to the leading one (ratios[0] = 1).
struct ExactExpansion {
    Rational gamma = 0;
    Rational base = 1;      // nonzero
    Rational exponent = 1;  // leading coefficient = base^exponent
    std::vector<Rational> ratios;

    static ExactExpansion from_coeffs(const Rational& gamma, std::vector<Rational> coeffs);

    int order() const { return static_cast<int>(ratios.size()) - 1; }
    // Folds integer exponents into the base so equal expansions compare equal.
    void canonicalize();
    // Plain coefficients; requires a canonicalized integer exponent.
    std::vector<Rational> coeffs() const;
    double leading_double() const;
    Expansion to_floating() const;

    bool operator==(const ExactExpansion& other) const = default;
};

// Coefficients of f^nu from the coefficients of f (leading coefficient
// nonzero). The new exponent is gamma * nu and the new coefficients are
// a_0^nu g_j(nu, a_1/a_0, ..., a_j/a_0).
Expansion power_expansion(const Expansion& e, double nu);
ExactExpansion power_expansion(const ExactExpansion& e, const Rational& nu);

// Re-centers a power family: given the expansion of f^{nu_prime}, returns the
// expansion of f^{nu_prime + delta} (a power by (nu_prime+delta)/nu_prime).
Expansion shift_nu(const Expansion& alpha, double nu_prime, double delta);
ExactExpansion shift_nu(const ExactExpansion& alpha, const Rational& nu_prime,
                        const Rational& delta);

// Conversions between the magnitude expansion (coefficients of M = m^{-1})
// and the expansion of the nu-family member m^nu, inverse to each other:
//   alpha(nu) = power(c, -nu),   c = power(alpha(nu), -1/nu).
Expansion magnitude_to_alpha(const Expansion& c, double nu);
ExactExpansion magnitude_to_alpha(const ExactExpansion& c, const Rational& nu);
Expansion alpha_to_magnitude(const Expansion& alpha, double nu);
ExactExpansion alpha_to_magnitude(const ExactExpansion& alpha, const Rational& nu);

// Taylor coefficients of m at R = 0: B_j = ((-1)^j / j!) * j-th moment of the
// profile. B_0 is the total mass.
std::vector<double> taylor_coeffs(const RadialProfile& profile, int max_j, double tol = 1e-12);

// JSON serialization (gamma, coeffs as {re, im}; exact variant with rational
// strings).
std::string expansion_to_json(const Expansion& e);
std::string exact_expansion_to_json(const ExactExpansion& e);

}  // namespace maglab
