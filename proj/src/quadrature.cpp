#include "maglab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "maglab/errors.hpp"

namespace maglab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Gauss-Legendre nodes/weights on [-1,1], generated once by Newton iteration
// on the Legendre recurrence.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule make_gauss_rule(int m) {
    GaussRule rule;
    rule.nodes.resize(m);
    rule.weights.resize(m);
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= m; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
            double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& rule_low() {
    static const GaussRule r = make_gauss_rule(15);
    return r;
}

const GaussRule& rule_high() {
    static const GaussRule r = make_gauss_rule(31);
    return r;
}

struct Panel {
    double a, b;
    Complex value;
    double error;
};

struct PanelOrder {
    bool operator()(const Panel& lhs, const Panel& rhs) const { return lhs.error < rhs.error; }
};

Panel evaluate_panel(const Integrand& f, double a, double b, long& evaluations) {
    const GaussRule& lo = rule_low();
    const GaussRule& hi = rule_high();
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    Complex q_lo = 0.0, q_hi = 0.0;
    for (size_t i = 0; i < hi.nodes.size(); ++i) {
        Complex v = f(mid + half * hi.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw EvaluationFailure("integrand returned a non-finite value");
        }
        q_hi += hi.weights[i] * v;
    }
    for (size_t i = 0; i < lo.nodes.size(); ++i) {
        Complex v = f(mid + half * lo.nodes[i]);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw EvaluationFailure("integrand returned a non-finite value");
        }
        q_lo += lo.weights[i] * v;
    }
    evaluations += static_cast<long>(lo.nodes.size() + hi.nodes.size());
    q_lo *= half;
    q_hi *= half;
    return Panel{a, b, q_hi, std::abs(q_hi - q_lo)};
}

QuadratureResult adaptive(const Integrand& f, double a, double b, double tol,
                          IntegrationLimits limits) {
    if (a == b) return {Complex(0.0), 0.0, 0};
    long evaluations = 0;
    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> queue;
    queue.push(evaluate_panel(f, a, b, evaluations));
    Complex total = queue.top().value;
    double err_sum = queue.top().error;
    int panels = 1;
    while (err_sum > tol * (1.0 + std::abs(total)) && panels < limits.max_panels &&
           evaluations < limits.max_evaluations) {
        Panel worst = queue.top();
        queue.pop();
        total -= worst.value;
        err_sum -= worst.error;
        double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Interval at rounding resolution; keep its contribution as is.
            total += worst.value;
            err_sum += worst.error;
            break;
        }
        Panel left = evaluate_panel(f, worst.a, mid, evaluations);
        Panel right = evaluate_panel(f, mid, worst.b, evaluations);
        total += left.value + right.value;
        err_sum += left.error + right.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    if (err_sum > tol * (1.0 + std::abs(total))) {
        throw ToleranceNotMet("integrate_finite: panel budget exhausted", total, err_sum);
    }
    return {total, err_sum, evaluations};
}

bool needs_substitution(const Endpoint& e) {
    return e.exponent < 0.0 || e.exponent != std::round(e.exponent);
}

// Smallest k >= 2 with k*(lambda+1) >= 1 and k*lambda integral, so that
// u^{k-1} f(a + u^k) is smooth when f ~ (t-a)^lambda * analytic.
int substitution_order(double lambda) {
    for (int k = 2; k <= 16; ++k) {
        double kl = k * lambda;
        if (std::abs(kl - std::round(kl)) < 1e-12 && k * (lambda + 1.0) >= 1.0 - 1e-12) {
            return k;
        }
    }
    int k = static_cast<int>(std::ceil(3.0 / (lambda + 1.0)));
    return std::clamp(k, 2, 16);
}

QuadratureResult integrate_left_singular(const Integrand& f, double a, double b, double lambda,
                                         double tol, bool flip, IntegrationLimits limits) {
    int k = substitution_order(lambda);
    double u_max = std::pow(b - a, 1.0 / k);
    double power = k * (lambda + 1.0) - 1.0;  // u-exponent of the transformed integrand
    Integrand g = [&f, a, b, k, power, flip](double u) -> Complex {
        if (u == 0.0 && power > 0.0) return Complex(0.0);
        double uk = std::pow(u, k);
        double t = flip ? b - uk : a + uk;
        if (flip && t >= b) t = std::nextafter(b, a);
        if (!flip && t <= a) t = std::nextafter(a, b);
        return static_cast<double>(k) * std::pow(u, k - 1) * f(t);
    };
    return adaptive(g, 0.0, u_max, tol, limits);
}

}  // namespace

QuadratureResult integrate_finite(const Integrand& f, double a, double b, double tol,
                                  Endpoint left, Endpoint right, IntegrationLimits limits) {
    if (b < a) {
        QuadratureResult r = integrate_finite(f, b, a, tol, right, left, limits);
        r.value = -r.value;
        return r;
    }
    if (a == b) return {Complex(0.0), 0.0, 0};
    bool sub_left = needs_substitution(left);
    bool sub_right = needs_substitution(right);
    if (sub_left && sub_right) {
        double mid = 0.5 * (a + b);
        QuadratureResult lo = integrate_left_singular(f, a, mid, left.exponent, tol / 2, false, limits);
        QuadratureResult hi = integrate_left_singular(f, mid, b, right.exponent, tol / 2, true, limits);
        return {lo.value + hi.value, lo.error_estimate + hi.error_estimate,
                lo.evaluations + hi.evaluations};
    }
    if (sub_left) return integrate_left_singular(f, a, b, left.exponent, tol, false, limits);
    if (sub_right) return integrate_left_singular(f, a, b, right.exponent, tol, true, limits);
    return adaptive(f, a, b, tol, limits);
}

QuadratureResult integrate_decaying(const Integrand& f, double a, DecaySpec decay, double tol,
                                    Endpoint left, IntegrationLimits limits) {
    if (decay.kind == DecaySpec::Kind::Polynomial && decay.rate <= 1.0) {
        throw SlowDecay("integrate_decaying: polynomial decay exponent must exceed 1");
    }
    if (decay.kind == DecaySpec::Kind::Exponential && decay.rate <= 0.0) {
        throw SlowDecay("integrate_decaying: exponential decay rate must be positive");
    }

    auto tail_bound = [&](double t) -> double {
        Complex v = f(t);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw EvaluationFailure("integrand returned a non-finite value");
        }
        double mag = std::abs(v);
        // Constant in the decay bound estimated as if it were tight at t.
        double bound = (decay.kind == DecaySpec::Kind::Exponential)
                           ? mag / decay.rate
                           : mag * t / (decay.rate - 1.0);
        return 8.0 * bound;
    };

    double t0 = (decay.kind == DecaySpec::Kind::Exponential)
                    ? std::max(a + 5.0 / decay.rate, 2.0 * std::abs(a) + 1.0)
                    : std::max(4.0 * std::abs(a) + 4.0, a + 4.0);
    QuadratureResult acc = integrate_finite(f, a, t0, tol / 4, left, {}, limits);
    long probes = 2;
    double t = t0;
    double bound = tail_bound(t);
    int blocks = 0;
    while (bound > 0.25 * tol * (1.0 + std::abs(acc.value))) {
        if (++blocks > 64) {
            throw ToleranceNotMet("integrate_decaying: tail bound did not fall below tolerance",
                                  acc.value, acc.error_estimate + bound);
        }
        QuadratureResult block = integrate_finite(f, t, 2.0 * t, tol / 8, {}, {}, limits);
        acc.value += block.value;
        acc.error_estimate += block.error_estimate;
        acc.evaluations += block.evaluations;
        t *= 2.0;
        bound = tail_bound(t);
        ++probes;
    }
    acc.error_estimate += bound;
    acc.evaluations += probes;
    if (acc.error_estimate > tol * (1.0 + std::abs(acc.value))) {
        throw ToleranceNotMet("integrate_decaying: accumulated error above tolerance", acc.value,
                              acc.error_estimate);
    }
    return acc;
}

double integrate_finite_real(const std::function<double(double)>& f, double a, double b,
                             double tol, Endpoint left, Endpoint right) {
    Integrand wrapped = [&f](double t) { return Complex(f(t), 0.0); };
    return integrate_finite(wrapped, a, b, tol, left, right).value.real();
}

}  // namespace maglab
