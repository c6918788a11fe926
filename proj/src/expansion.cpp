#include "maglab/expansion.hpp"

#include <cmath>

#include <json.hpp>

#include "maglab/errors.hpp"
#include "maglab/gamma.hpp"
#include "maglab/quadrature.hpp"

namespace maglab {

namespace {

bool rational_is_integer(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

long rational_to_long(const Rational& r) {
    return boost::multiprecision::numerator(r).convert_to<long>();
}

const GTable& table_for(int j) {
    thread_local GTable table = gj_table(16);
    if (j > table.max_j) table = gj_table(j + 4);
    return table;
}

}  // namespace

ExactExpansion ExactExpansion::from_coeffs(const Rational& gamma, std::vector<Rational> coeffs) {
    if (coeffs.empty() || coeffs.front() == 0) {
        throw ZeroLeadingCoefficient("exact expansion needs a nonzero leading coefficient");
    }
    ExactExpansion e;
    e.gamma = gamma;
    e.base = coeffs.front();
    e.exponent = 1;
    e.ratios.reserve(coeffs.size());
    for (const Rational& c : coeffs) e.ratios.push_back(c / coeffs.front());
    return e;
}

void ExactExpansion::canonicalize() {
    if (rational_is_integer(exponent)) {
        base = rational_pow(base, rational_to_long(exponent));
        exponent = 1;
    }
}

std::vector<Rational> ExactExpansion::coeffs() const {
    ExactExpansion copy = *this;
    copy.canonicalize();
    if (!rational_is_integer(copy.exponent)) {
        throw Error("NotExactlyRepresentable",
                    "expansion leading coefficient is an unresolved fractional power");
    }
    Rational lead = copy.base;  // exponent folded to 1 by canonicalize
    std::vector<Rational> out;
    out.reserve(ratios.size());
    for (const Rational& r : ratios) out.push_back(lead * r);
    return out;
}

double ExactExpansion::leading_double() const {
    return std::pow(to_double(base), to_double(exponent));
}

Expansion ExactExpansion::to_floating() const {
    Expansion e;
    e.gamma = to_double(gamma);
    double lead = leading_double();
    e.coeffs.reserve(ratios.size());
    for (const Rational& r : ratios) e.coeffs.emplace_back(lead * to_double(r), 0.0);
    return e;
}

Expansion power_expansion(const Expansion& e, double nu) {
    if (e.coeffs.empty() || e.coeffs.front() == Complex(0.0)) {
        throw ZeroLeadingCoefficient("power_expansion: leading coefficient must be nonzero");
    }
    Expansion out;
    out.gamma = e.gamma * nu;
    Complex a0 = e.coeffs.front();
    bool nu_integer = nu == std::round(nu);
    if (a0.imag() != 0.0 && !nu_integer) out.branch_flagged = true;

    std::vector<Complex> t(e.coeffs.size() - 1);
    for (size_t l = 1; l < e.coeffs.size(); ++l) t[l - 1] = e.coeffs[l] / a0;
    Complex lead = principal_pow(a0, Complex(nu, 0.0));

    const GTable& table = table_for(e.order());
    out.coeffs.resize(e.coeffs.size());
    for (int j = 0; j <= e.order(); ++j) {
        out.coeffs[j] = lead * eval_g(table, j, Complex(nu, 0.0), t);
    }
    return out;
}

ExactExpansion power_expansion(const ExactExpansion& e, const Rational& nu) {
    if (e.ratios.empty() || e.base == 0) {
        throw ZeroLeadingCoefficient("power_expansion: leading coefficient must be nonzero");
    }
    ExactExpansion out;
    out.gamma = e.gamma * nu;
    out.base = e.base;
    out.exponent = e.exponent * nu;
    std::vector<Rational> t(e.ratios.begin() + 1, e.ratios.end());
    const GTable& table = table_for(e.order());
    out.ratios.resize(e.ratios.size());
    for (int j = 0; j <= e.order(); ++j) {
        out.ratios[j] = eval_g(table, j, nu, t);
    }
    out.canonicalize();
    return out;
}

Expansion shift_nu(const Expansion& alpha, double nu_prime, double delta) {
    if (nu_prime == 0.0) {
        throw Error("SchemaError", "shift_nu: the base family parameter must be nonzero");
    }
    return power_expansion(alpha, (nu_prime + delta) / nu_prime);
}

ExactExpansion shift_nu(const ExactExpansion& alpha, const Rational& nu_prime,
                        const Rational& delta) {
    if (nu_prime == 0) {
        throw Error("SchemaError", "shift_nu: the base family parameter must be nonzero");
    }
    return power_expansion(alpha, (nu_prime + delta) / nu_prime);
}

Expansion magnitude_to_alpha(const Expansion& c, double nu) { return power_expansion(c, -nu); }

ExactExpansion magnitude_to_alpha(const ExactExpansion& c, const Rational& nu) {
    return power_expansion(c, -nu);
}

Expansion alpha_to_magnitude(const Expansion& alpha, double nu) {
    if (nu == 0.0) throw Error("SchemaError", "alpha_to_magnitude: nu must be nonzero");
    return power_expansion(alpha, -1.0 / nu);
}

ExactExpansion alpha_to_magnitude(const ExactExpansion& alpha, const Rational& nu) {
    if (nu == 0) throw Error("SchemaError", "alpha_to_magnitude: nu must be nonzero");
    return power_expansion(alpha, Rational(-1) / nu);
}

std::vector<double> taylor_coeffs(const RadialProfile& profile, int max_j, double tol) {
    if (max_j < 0) throw OrderExceeded("taylor_coeffs: order must be non-negative");
    std::vector<double> out(static_cast<size_t>(max_j) + 1);
    double factorial_j = 1.0;
    for (int j = 0; j <= max_j; ++j) {
        if (j > 0) factorial_j *= j;
        double moment;
        if (j == 0) {
            moment = profile.total_mass;  // bookkeeping is exact at order zero
        } else {
            moment = 0.0;
            for (const Atom& atom : profile.atoms) {
                moment += atom.mass * std::pow(atom.location, j);
            }
            if (profile.has_density()) {
                auto f = [&profile, j](double t) { return profile.density(t) * std::pow(t, j); };
                moment += integrate_finite_real(f, 0.0, profile.support_end, tol,
                                                {profile.left_exponent + j},
                                                {profile.right_exponent});
            }
        }
        out[j] = ((j % 2 == 0) ? 1.0 : -1.0) * moment / factorial_j;
    }
    return out;
}

std::string expansion_to_json(const Expansion& e) {
    nlohmann::ordered_json obj;
    obj["gamma"] = e.gamma;
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Complex& c : e.coeffs) {
        coeffs.push_back({{"re", c.real()}, {"im", c.imag()}});
    }
    obj["coeffs"] = std::move(coeffs);
    if (e.branch_flagged) obj["branch_flagged"] = true;
    return obj.dump(2);
}

std::string exact_expansion_to_json(const ExactExpansion& e) {
    nlohmann::ordered_json obj;
    obj["gamma"] = format_rational(e.gamma);
    obj["leading_base"] = format_rational(e.base);
    obj["leading_exponent"] = format_rational(e.exponent);
    nlohmann::ordered_json ratios = nlohmann::ordered_json::array();
    for (const Rational& r : e.ratios) ratios.push_back(format_rational(r));
    obj["ratios"] = std::move(ratios);
    return obj.dump(2);
}

}  // namespace maglab
