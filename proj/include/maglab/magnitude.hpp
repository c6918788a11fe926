#pragma once

#include <Eigen/Dense>
#include <complex>

#include "maglab/finite_space.hpp"
#include "maglab/radial_profile.hpp"

namespace maglab {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Radial (homogeneous) spaces. All operations work on the one-dimensional
// distance profile: lambda(R) = sum_k m_k e^{-R t_k} + int e^{-R t} rho(t) dt
// is the basepoint integral of e^{-R d}; for a normalized profile this is the
// function m_X(R) itself.
// ---------------------------------------------------------------------------

struct LittleMResult {
    double value;
    double error;  // quadrature error + omitted-tail bound
};

LittleMResult little_m_detail(const RadialProfile& profile, double R, double tol = 1e-11);

// m(R) for the profile; strictly decreasing in R with m(0+) = total_mass.
double little_m(const RadialProfile& profile, double R, double tol = 1e-11);

// M(R, nu) = total_mass * m(R)^nu (the complex-power family evaluated through
// the basepoint integral; for total_mass = 1 this is exactly m_X(R)^nu).
Complex mag_nu_radial(const RadialProfile& profile, double R, Complex nu);

// Magnitude function 1 / m(R); requires a normalized profile.
double magnitude_radial(const RadialProfile& profile, double R);

// ---------------------------------------------------------------------------
// Finite spaces. The kernel matrix is E_{xy} = e^{-R d(x,y)}; all spectral
// computations go through the measure-symmetrized form
// S = D^{1/2} E D^{1/2}, D = diag(measure), which models the L^2(mu) inner
// product as a symmetric eigenproblem.
// ---------------------------------------------------------------------------

struct WeightVector {
    Eigen::VectorXd weights;
    double R;
    double residual;   // max_x |sum_y e^{-R d(x,y)} w(y) mu(y) - 1|
    double condition;  // estimate for the symmetrized kernel
};

struct KernelSpectrum {
    Eigen::VectorXd eigenvalues;      // descending
    Eigen::MatrixXd basis;            // orthonormal columns, matching order
    Eigen::VectorXd v_projection_sq;  // (q_i . D^{1/2} 1)^2 per eigenvector
    double R;
};

// Solves sum_y e^{-R d(x,y)} w(y) mu(y) = 1 for all x.
// Throws SingularKernel (with a condition estimate) for near-singular kernels.
WeightVector finite_weight(const FiniteMetricSpace& space, double R);

// Magnitude: sum of the weight vector (times nothing; weights already carry
// the measure convention above).
double finite_magnitude(const FiniteMetricSpace& space, double R);

// Eigendecomposition of S = D^{1/2} E D^{1/2}.
KernelSpectrum finite_spectrum(const FiniteMetricSpace& space, double R);

// <S^nu v, v> with v = D^{1/2} 1. Non-integer powers require a positive
// definite kernel (NotPositiveDefinite carries the minimal eigenvalue);
// nu = -1 with a vanishing eigenvalue raises SingularKernel.
Complex finite_mag_nu(const FiniteMetricSpace& space, double R, Complex nu);
Complex finite_mag_nu(const KernelSpectrum& spectrum, Complex nu);

// S^nu as a matrix, for semigroup-property checks.
Eigen::MatrixXd spectrum_power(const KernelSpectrum& spectrum, double nu);

}  // namespace maglab
