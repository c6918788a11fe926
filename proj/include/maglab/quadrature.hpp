#pragma once

#include <complex>
#include <functional>

namespace maglab {

using Complex = std::complex<double>;
using Integrand = std::function<Complex(double)>;

struct QuadratureResult {
    Complex value;
    double error_estimate = 0.0;
    long evaluations = 0;

    double real() const { return value.real(); }
};

// Declared behavior of the integrand at an interval endpoint:
// f(t) ~ c * (t - endpoint)^exponent with exponent > -1.
// Non-integer (or negative) exponents trigger a smoothing substitution.
struct Endpoint {
    double exponent = 0.0;
};

struct IntegrationLimits {
    int max_panels = 4000;
    long max_evaluations = 4'000'000;
};

// Adaptive bisection with a nested Gauss-Legendre 15/31 pair per panel.
// Success contract: error_estimate <= tol * (1 + |value|).
// Throws ToleranceNotMet (carrying the best estimate) on budget exhaustion,
// EvaluationFailure if the integrand returns a non-finite value.
QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol,
                                  Endpoint left = {}, Endpoint right = {},
                                  IntegrationLimits limits = {});

struct DecaySpec {
    enum class Kind { Exponential, Polynomial };
    Kind kind;
    double rate;  // |f| <= C e^{-rate R} resp. C R^{-rate} (rate > 1) for large R

    static DecaySpec exponential(double rate) { return {Kind::Exponential, rate}; }
    static DecaySpec polynomial(double rate) { return {Kind::Polynomial, rate}; }
};

// Integral over [a, infinity) of a decaying integrand. The truncation point is
// pushed out until the class-specific tail bound (with the constant estimated
// from samples) drops below the tolerance; the finite part goes through
// integrate_finite block by block.
// Throws SlowDecay for polynomial rate <= 1.
QuadratureResult integrate_decaying(const Integrand& f, double a, DecaySpec decay, double tol,
                                    Endpoint left = {}, IntegrationLimits limits = {});

// Real-valued conveniences.
double integrate_finite_real(const std::function<double(double)>& f, double a, double b,
                             double tol, Endpoint left = {}, Endpoint right = {});

}  // namespace maglab
