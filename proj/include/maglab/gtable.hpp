#pragma once

#include <complex>
#include <vector>

#include "maglab/errors.hpp"
#include "maglab/rational.hpp"

namespace maglab {

// Polynomial in nu with exact rational coefficients, ascending degree.
using NuPolynomial = std::vector<Rational>;

// One partition term of g_j: the multiplicities (k_1, ..., k_j) with
// sum l*k_l = j, and the nu-polynomial
//   nu (nu-1) ... (nu - sum k_l + 1) / prod k_l! .
struct GEntry {
    std::vector<int> partition;
    NuPolynomial coeff;
};

// Coefficients g_j of the formal power (1 + sum_l t_l x^l)^nu = sum_j g_j x^j,
// indexed by j <= max_j.
struct GTable {
    int max_j = -1;
    std::vector<std::vector<GEntry>> rows;
};

GTable gj_table(int max_j);

namespace detail {

template <class T>
T from_rational(const Rational& r);

template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }

template <>
inline double from_rational<double>(const Rational& r) { return to_double(r); }

template <>
inline std::complex<double> from_rational<std::complex<double>>(const Rational& r) {
    return {to_double(r), 0.0};
}

}  // namespace detail

template <class T>
T eval_nu_polynomial(const NuPolynomial& poly, const T& nu) {
    T acc = T(0);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
        acc = acc * nu + detail::from_rational<T>(*it);
    }
    return acc;
}

// g_j(nu, t_1, ..., t_j). Requires j <= table.max_j and t.size() >= j.
template <class T>
T eval_g(const GTable& table, int j, const T& nu, const std::vector<T>& t) {
    if (j < 0 || j > table.max_j) {
        throw OrderExceeded("eval_g: j exceeds table order");
    }
    if (static_cast<int>(t.size()) < j) {
        throw OrderExceeded("eval_g: not enough t arguments");
    }
    T sum = T(0);
    for (const GEntry& entry : table.rows[j]) {
        T term = eval_nu_polynomial(entry.coeff, nu);
        for (size_t l = 0; l < entry.partition.size(); ++l) {
            for (int rep = 0; rep < entry.partition[l]; ++rep) term = term * t[l];
        }
        sum = sum + term;
    }
    return sum;
}

// All of g_0..g_J at a fixed nu by the power-series recurrence
//   j g_j = sum_{l=1..j} ((nu+1) l - j) t_l g_{j-l},
// an independent route kept as a cross-check of the partition table.
template <class T>
std::vector<T> g_values_series(const T& nu, const std::vector<T>& t, int max_j) {
    std::vector<T> g(static_cast<size_t>(max_j) + 1, T(0));
    g[0] = T(1);
    for (int j = 1; j <= max_j; ++j) {
        T acc = T(0);
        for (int l = 1; l <= j; ++l) {
            T tl = l <= static_cast<int>(t.size()) ? t[l - 1] : T(0);
            acc = acc + ((nu + T(1)) * T(l) - T(j)) * tl * g[j - l];
        }
        g[j] = acc / T(j);
    }
    return g;
}

}  // namespace maglab
