#include "maglab/gamma.hpp"

#include <cmath>
#include <limits>

#include "maglab/errors.hpp"

namespace maglab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kLogTwoPiHalf = 0.918938533204672741780329736405617640;  // log(2*pi)/2

// Stirling series coefficients B_{2k} / (2k (2k-1)).
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
};

// Asymptotic region: the K=8 Stirling tail is below 1e-19 for |z| >= 12.
constexpr double kStirlingThreshold = 12.0;

bool is_nonpositive_integer(Complex z, double tol) {
    if (std::abs(z.imag()) > tol) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

// log Gamma for Re z >= 0.5 by upward recurrence into the Stirling region.
Complex log_gamma_positive(Complex z) {
    Complex shift_log = 0.0;
    while (std::abs(z) < kStirlingThreshold) {
        shift_log += std::log(z);
        z += 1.0;
    }
    Complex inv = 1.0 / z;
    Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;
    for (double c : kStirling) {
        series += c * power;
        power *= inv2;
    }
    return (z - 0.5) * std::log(z) - z + kLogTwoPiHalf + series - shift_log;
}

// log sin(pi z) for the reduced argument |Re z| <= 1/2, stable in Im z.
Complex log_sin_pi_reduced(Complex z) {
    Complex w = kPi * z;
    if (std::abs(w.imag()) <= 1.0) {
        return std::log(std::sin(w));
    }
    // sin w = -(i/2) e^{-iw} (1 - e^{2iw})  for Im w > 0, and conjugate below.
    const Complex i(0.0, 1.0);
    if (w.imag() > 0) {
        return -i * w + Complex(-std::log(2.0), kPi / 2.0) + std::log(1.0 - std::exp(2.0 * i * w));
    }
    return i * w + Complex(-std::log(2.0), -kPi / 2.0) + std::log(1.0 - std::exp(-2.0 * i * w));
}

}  // namespace

namespace detail {

Complex sin_pi(Complex z) {
    double n = std::round(z.real());
    Complex reduced(z.real() - n, z.imag());
    Complex s = std::sin(kPi * reduced);
    long long parity = static_cast<long long>(n) & 1;
    return parity ? -s : s;
}

Complex recip_gamma_ratio(Complex z, int j) {
    Complex delta = z - static_cast<double>(j);
    Complex sinc;
    if (std::abs(delta) < 1e-4) {
        Complex u = kPi * delta;
        Complex u2 = u * u;
        sinc = 1.0 - u2 / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0));
    } else {
        sinc = sin_pi(delta) / (kPi * delta);
    }
    Complex value = gamma_fn(1.0 + z) * sinc;
    return (j & 1) ? -value : value;
}

}  // namespace detail

Complex log_gamma(Complex z) {
    if (is_nonpositive_integer(z, 1e-14)) {
        throw PoleArgument("log_gamma: argument is a non-positive integer pole");
    }
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw EvaluationFailure("log_gamma: non-finite argument");
    }
    if (z.real() >= 0.5) {
        return log_gamma_positive(z);
    }
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z),
    // with the real part of z reduced inside log_sin_pi for accuracy.
    double n = std::round(z.real());
    Complex reduced(z.real() - n, z.imag());
    Complex log_sin = log_sin_pi_reduced(reduced);
    long long parity = static_cast<long long>(n) & 1;
    if (parity) log_sin += Complex(0.0, kPi);  // sign flip folded into the log
    return std::log(kPi) - log_sin - log_gamma_positive(1.0 - z);
}

Complex gamma_fn(Complex z) { return std::exp(log_gamma(z)); }

Complex recip_gamma(Complex z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real())) {
        return Complex(0.0, 0.0);
    }
    if (z.real() >= 0.5) {
        return std::exp(-log_gamma_positive(z));
    }
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi, entire in z.
    return detail::sin_pi(z) * std::exp(log_gamma_positive(1.0 - z)) / kPi;
}

Complex principal_pow(double a, Complex nu) {
    if (!(a > 0.0)) {
        throw NonPositiveBase("principal_pow: base must be positive");
    }
    return std::exp(nu * std::log(a));
}

Complex principal_pow(Complex z, Complex nu) {
    if (z == Complex(0.0, 0.0)) {
        throw NonPositiveBase("principal_pow: zero base");
    }
    return std::exp(nu * std::log(z));
}

}  // namespace maglab
