#include "maglab/radial_profile.hpp"

#include <cmath>
#include <sstream>

#include "maglab/errors.hpp"
#include "maglab/quadrature.hpp"

namespace maglab {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

bool RadialProfile::is_normalized(double tol) const {
    return std::abs(total_mass - 1.0) <= tol;
}

void RadialProfile::validate() const {
    double mass = tail_mass;
    for (const Atom& a : atoms) {
        if (!(a.location > 0.0) || !(a.mass > 0.0)) {
            throw Error("SchemaError", "profile atoms need positive location and mass");
        }
        mass += a.mass;
    }
    if (has_density()) {
        mass += integrate_finite_real(density, 0.0, support_end, 1e-12, {left_exponent},
                                      {right_exponent});
    }
    if (std::abs(mass - total_mass) > 1e-10 * (1.0 + std::abs(total_mass))) {
        throw Error("SchemaError", "profile mass does not add up to total_mass");
    }
}

double sphere_volume(int n) {
    // 2 pi^{(n+1)/2} / Gamma((n+1)/2)
    return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / std::exp(std::lgamma(0.5 * (n + 1)));
}

RadialProfile sphere_profile(int n, SphereMetric metric, bool normalized) {
    if (n < 1) throw Error("SchemaError", "sphere_profile: need n >= 1");
    // Z_n = int_0^pi sin^{n-1} = sqrt(pi) Gamma(n/2) / Gamma((n+1)/2)
    double z_n = std::sqrt(kPi) * std::exp(std::lgamma(0.5 * n) - std::lgamma(0.5 * (n + 1)));
    double vol = sphere_volume(n);
    double scale = (normalized ? 1.0 : vol) / z_n;

    RadialProfile profile;
    profile.total_mass = normalized ? 1.0 : vol;
    profile.dim = n;
    profile.vol = vol;
    profile.m_decay_exponent = -static_cast<double>(n);
    if (metric == SphereMetric::Geodesic) {
        profile.support_end = kPi;
        profile.left_exponent = n - 1;
        profile.right_exponent = n - 1;
        profile.density = [n, scale](double theta) {
            return scale * std::pow(std::sin(theta), n - 1);
        };
    } else {
        profile.support_end = 2.0;
        profile.left_exponent = n - 1;
        profile.right_exponent = 0.5 * (n - 2);
        profile.density = [n, scale](double t) {
            return scale * std::pow(t, n - 1) * std::pow(1.0 - 0.25 * t * t, 0.5 * (n - 2));
        };
    }
    std::ostringstream name;
    name << "sphere:n=" << n
         << ":metric=" << (metric == SphereMetric::Chordal ? "chordal" : "geodesic")
         << ":normalized=" << bool_text(normalized);
    profile.name = name.str();
    return profile;
}

std::vector<std::pair<Rational, Rational>> padic_atoms_exact(long p, int kmax) {
    if (!is_prime(p)) throw NotPrime("padic_atoms_exact: p must be prime");
    std::vector<std::pair<Rational, Rational>> atoms;
    BigInt pk = 1;
    for (int k = 0; k <= kmax; ++k) {
        Rational location(1, pk);
        Rational mass(p - 1, pk * p);
        atoms.emplace_back(location, mass);
        pk *= p;
    }
    return atoms;
}

RadialProfile padic_profile(long p, int kmax, double tail_tol) {
    if (!is_prime(p)) throw NotPrime("padic_profile: p must be prime");
    if (kmax < 0) throw Error("SchemaError", "padic_profile: kmax must be non-negative");
    if (!(tail_tol > 0.0)) throw Error("SchemaError", "padic_profile: tail_tol must be positive");
    // Extend until the omitted mass p^{-kmax-1} is below tail_tol.
    double tail = std::pow(static_cast<double>(p), -(kmax + 1.0));
    while (tail > tail_tol && kmax < 4000) {
        ++kmax;
        tail /= p;
    }
    RadialProfile profile;
    profile.total_mass = 1.0;
    profile.tail_mass = tail;
    profile.tail = GeometricTail{1.0 / p, 1.0 / p, tail};
    profile.m_decay_exponent = -1.0;
    for (const auto& [location, mass] : padic_atoms_exact(p, kmax)) {
        profile.atoms.push_back(Atom{to_double(location), to_double(mass)});
    }
    profile.name = "padic:p=" + std::to_string(p);
    return profile;
}

RadialProfile two_point_homogeneous_profile() {
    RadialProfile profile;
    profile.atoms.push_back(Atom{1.0, 1.0});
    profile.total_mass = 1.0;
    profile.name = "twopoint";
    return profile;
}

RadialProfile parse_radial_selector(const std::string& selector) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream stream(selector);
    while (std::getline(stream, token, ':')) parts.push_back(token);
    if (parts.empty()) throw ParseError("empty space selector");

    auto key_value = [](const std::string& part) -> std::pair<std::string, std::string> {
        size_t eq = part.find('=');
        if (eq == std::string::npos) {
            throw ParseError("expected key=value in selector part '" + part + "'");
        }
        return {part.substr(0, eq), part.substr(eq + 1)};
    };

    if (parts[0] == "twopoint") {
        if (parts.size() != 1) throw ParseError("twopoint selector takes no parameters");
        return two_point_homogeneous_profile();
    }
    if (parts[0] == "sphere") {
        int n = -1;
        SphereMetric metric = SphereMetric::Chordal;
        bool normalized = true;
        for (size_t i = 1; i < parts.size(); ++i) {
            auto [key, value] = key_value(parts[i]);
            if (key == "n") {
                try {
                    n = std::stoi(value);
                } catch (const std::exception&) {
                    throw ParseError("bad sphere dimension '" + value + "'");
                }
            } else if (key == "metric") {
                if (value == "chordal") metric = SphereMetric::Chordal;
                else if (value == "geodesic") metric = SphereMetric::Geodesic;
                else throw ParseError("unknown sphere metric '" + value + "'");
            } else if (key == "normalized") {
                if (value == "true") normalized = true;
                else if (value == "false") normalized = false;
                else throw ParseError("normalized must be true or false");
            } else {
                throw ParseError("unknown sphere selector key '" + key + "'");
            }
        }
        if (n < 1) throw ParseError("sphere selector needs n=<int> with n >= 1");
        return sphere_profile(n, metric, normalized);
    }
    if (parts[0] == "padic") {
        long p = -1;
        for (size_t i = 1; i < parts.size(); ++i) {
            auto [key, value] = key_value(parts[i]);
            if (key == "p") {
                try {
                    p = std::stol(value);
                } catch (const std::exception&) {
                    throw ParseError("bad prime '" + value + "'");
                }
            } else {
                throw ParseError("unknown padic selector key '" + key + "'");
            }
        }
        if (p < 2) throw ParseError("padic selector needs p=<prime>");
        return padic_profile(p);
    }
    throw ParseError("unknown space selector '" + parts[0] + "'");
}

}  // namespace maglab
