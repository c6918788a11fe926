#pragma once

#include <complex>

#include "maglab/expansion.hpp"
#include "maglab/radial_profile.hpp"

namespace maglab {

using Complex = std::complex<double>;

// B(z) = sum_k m_k t_k^z + int t^z rho(t) dt evaluated inside the a-priori
// convergence strip. Omitted geometric-tail atoms contribute a rigorous bound;
// if that bound (or a density endpoint) prevents meeting the tolerance the
// call throws OutsideStrip and the continuation path applies instead.
Complex beta_direct(const RadialProfile& profile, Complex z, double tol = 1e-10);

// Closed form for the unit n-sphere with the chordal (Euclidean) metric:
//   2^{z+n} pi^{-1/2} Gamma((z+n)/2) Gamma((n+1)/2) / Gamma(z/2 + n).
// Known to differ from the normalized-measure profile values by a constant
// factor per dimension; pole locations and residue ratios are unaffected.
// Throws PoleArgument on the genuine pole lattice.
Complex beta_sphere_closed(int n, Complex z);

// Closed form for the p-adic integers: (p - 1) / (p - p^{-z}); simple poles
// exactly at -1 + (2 pi i / log p) Z with residue (p-1)/(p log p).
Complex beta_padic_closed(long p, Complex z);

// Exact large-R expansion of m(R) for sphere profiles (both metrics), from
// the Taylor series of the profile density at t = 0. Coefficients at odd
// offsets vanish; used to drive the Mellin continuation deeply.
Expansion sphere_m_expansion(int n, SphereMetric metric, bool normalized, int order);

}  // namespace maglab
