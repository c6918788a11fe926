#include "maglab/magnitude.hpp"

#include <cmath>

#include "maglab/errors.hpp"
#include "maglab/gamma.hpp"
#include "maglab/quadrature.hpp"

namespace maglab {

LittleMResult little_m_detail(const RadialProfile& profile, double R, double tol) {
    if (!(R > 0.0)) throw Error("SchemaError", "little_m: R must be positive");
    {
        std::lock_guard<std::mutex> lock(profile.cache->mu);
        auto it = profile.cache->values.find(R);
        if (it != profile.cache->values.end() && it->second.second <= tol * (1.0 + it->second.first)) {
            return {it->second.first, it->second.second};
        }
    }
    double value = 0.0;
    double error = 0.0;
    for (const Atom& atom : profile.atoms) {
        value += atom.mass * std::exp(-R * atom.location);
    }
    // Omitted atoms all sit closer to 0, so e^{-R t} <= 1 bounds their sum.
    error += profile.tail_mass;
    if (profile.has_density()) {
        Integrand integrand = [&profile, R](double t) -> Complex {
            return profile.density(t) * std::exp(-R * t);
        };
        QuadratureResult q = integrate_finite(integrand, 0.0, profile.support_end, tol,
                                              {profile.left_exponent}, {profile.right_exponent});
        value += q.value.real();
        error += q.error_estimate;
    }
    {
        std::lock_guard<std::mutex> lock(profile.cache->mu);
        profile.cache->values[R] = {value, error};
    }
    return {value, error};
}

double little_m(const RadialProfile& profile, double R, double tol) {
    return little_m_detail(profile, R, tol).value;
}

Complex mag_nu_radial(const RadialProfile& profile, double R, Complex nu) {
    double lambda = little_m(profile, R);
    return profile.total_mass * principal_pow(lambda, nu);
}

double magnitude_radial(const RadialProfile& profile, double R) {
    if (!profile.is_normalized()) {
        throw NotNormalized("magnitude_radial: profile must have total mass 1");
    }
    return 1.0 / little_m(profile, R);
}

namespace {

Eigen::MatrixXd symmetrized_kernel(const FiniteMetricSpace& space, double R) {
    int n = space.size();
    Eigen::VectorXd sqrt_mu = space.measure.array().sqrt();
    Eigen::MatrixXd s(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            s(i, j) = sqrt_mu[i] * sqrt_mu[j] * std::exp(-R * space.dist(i, j));
        }
    }
    return s;
}

}  // namespace

WeightVector finite_weight(const FiniteMetricSpace& space, double R) {
    if (!(R > 0.0)) throw Error("SchemaError", "finite_weight: R must be positive");
    int n = space.size();
    Eigen::MatrixXd s = symmetrized_kernel(space, R);
    Eigen::VectorXd sqrt_mu = space.measure.array().sqrt();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(s);
    double max_abs = eigen.eigenvalues().cwiseAbs().maxCoeff();
    double min_abs = eigen.eigenvalues().cwiseAbs().minCoeff();
    double condition = min_abs > 0.0 ? max_abs / min_abs : std::numeric_limits<double>::infinity();
    if (!(min_abs > 1e-15 * max_abs)) {
        throw SingularKernel("finite_weight: kernel numerically singular", condition);
    }

    // S y = sqrt_mu, w = y / sqrt_mu, with one step of iterative refinement.
    Eigen::LDLT<Eigen::MatrixXd> ldlt(s);
    Eigen::VectorXd rhs = sqrt_mu;
    Eigen::VectorXd y = ldlt.solve(rhs);
    y += ldlt.solve(rhs - s * y);
    Eigen::VectorXd w = y.array() / sqrt_mu.array();

    // Residual of the original weight equation.
    double residual = 0.0;
    for (int i = 0; i < n; ++i) {
        double row = 0.0;
        for (int j = 0; j < n; ++j) {
            row += std::exp(-R * space.dist(i, j)) * w[j] * space.measure[j];
        }
        residual = std::max(residual, std::abs(row - 1.0));
    }
    if (condition > 1e12) {
        throw SingularKernel("finite_weight: kernel condition above 1e12", condition);
    }
    return WeightVector{std::move(w), R, residual, condition};
}

double finite_magnitude(const FiniteMetricSpace& space, double R) {
    return finite_weight(space, R).weights.sum();
}

KernelSpectrum finite_spectrum(const FiniteMetricSpace& space, double R) {
    if (!(R > 0.0)) throw Error("SchemaError", "finite_spectrum: R must be positive");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigen(symmetrized_kernel(space, R));
    // Eigen returns ascending order; flip to descending.
    Eigen::VectorXd values = eigen.eigenvalues().reverse();
    Eigen::MatrixXd basis = eigen.eigenvectors().rowwise().reverse().eval();
    Eigen::VectorXd v = space.measure.array().sqrt();
    Eigen::VectorXd projections = (basis.transpose() * v).array().square();
    return KernelSpectrum{std::move(values), std::move(basis), std::move(projections), R};
}

Complex finite_mag_nu(const KernelSpectrum& spectrum, Complex nu) {
    int n = static_cast<int>(spectrum.eigenvalues.size());
    double max_eig = spectrum.eigenvalues.cwiseAbs().maxCoeff();
    bool integer_nu = nu.imag() == 0.0 && nu.real() == std::round(nu.real());

    if (!integer_nu) {
        double min_eig = spectrum.eigenvalues.minCoeff();
        if (!(min_eig > 1e-12 * max_eig)) {
            throw NotPositiveDefinite(
                "finite_mag_nu: non-integer powers need a positive definite kernel", min_eig);
        }
    } else if (nu.real() < 0.0) {
        double min_abs = spectrum.eigenvalues.cwiseAbs().minCoeff();
        if (!(min_abs > 1e-14 * max_eig)) {
            throw SingularKernel("finite_mag_nu: zero eigenvalue with negative power",
                                 min_abs > 0 ? max_eig / min_abs
                                             : std::numeric_limits<double>::infinity());
        }
    }

    // v = D^{1/2} 1 in the eigenbasis: v^T S^nu v = sum_i lambda_i^nu (q_i . v)^2.
    Complex result = 0.0;
    for (int i = 0; i < n; ++i) {
        double coeff = spectrum.v_projection_sq[i];
        double lambda = spectrum.eigenvalues[i];
        Complex power;
        if (integer_nu) {
            power = std::pow(Complex(lambda, 0.0), static_cast<int>(std::lround(nu.real())));
        } else {
            power = principal_pow(lambda, nu);
        }
        result += power * coeff;
    }
    return result;
}

Complex finite_mag_nu(const FiniteMetricSpace& space, double R, Complex nu) {
    return finite_mag_nu(finite_spectrum(space, R), nu);
}

Eigen::MatrixXd spectrum_power(const KernelSpectrum& spectrum, double nu) {
    Eigen::VectorXd powered(spectrum.eigenvalues.size());
    for (int i = 0; i < spectrum.eigenvalues.size(); ++i) {
        double lambda = spectrum.eigenvalues[i];
        if (lambda <= 0.0 && nu != std::round(nu)) {
            throw NotPositiveDefinite("spectrum_power: non-integer power of non-positive spectrum",
                                      lambda);
        }
        powered[i] = std::pow(lambda, nu);
    }
    return spectrum.basis * powered.asDiagonal() * spectrum.basis.transpose();
}

}  // namespace maglab
