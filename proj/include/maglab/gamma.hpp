#pragma once

#include <complex>

namespace maglab {

using Complex = std::complex<double>;

// Principal-branch log of the Gamma function. Relative accuracy of
// exp(log_gamma(z)) is better than 1e-12 on -20 <= Re z <= 50, |Im z| <= 50.
// Throws PoleArgument within 1e-14 of a non-positive integer.
Complex log_gamma(Complex z);

// Entire reciprocal 1/Gamma(z); returns exactly 0 at non-positive integers.
Complex recip_gamma(Complex z);

// Gamma(z) = exp(log_gamma(z)). Convenience wrapper.
Complex gamma_fn(Complex z);

// a^nu for a > 0 via exp(nu * log a) with the real log.
// Throws NonPositiveBase for a <= 0.
Complex principal_pow(double a, Complex nu);

// Principal branch z^nu for complex z != 0.
Complex principal_pow(Complex z, Complex nu);

namespace detail {

// sin(pi z) with the real part reduced modulo 2 first; accurate for
// z near integers and stable for large |Im z|.
Complex sin_pi(Complex z);

// (-1)^j * Gamma(1+z) * sin(pi(z-j)) / (pi(z-j)): the entire function
// recip_gamma(-z)/(j - z), finite at z = j where it equals (-1)^j j!.
Complex recip_gamma_ratio(Complex z, int j);

}  // namespace detail

}  // namespace maglab
