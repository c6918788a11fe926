#pragma once

#include <complex>
#include <functional>

namespace maglab {

using Complex = std::complex<double>;
using ComplexFunction = std::function<Complex(Complex)>;

// Residue of f at z0 by the trapezoidal contour sum on a circle of the given
// radius, exponentially convergent for f analytic on the punctured disc.
// Throws EvaluationFailure if f returns a non-finite value on the contour.
Complex contour_residue(const ComplexFunction& f, Complex z0, double radius = 0.1,
                        int nodes = 64);

}  // namespace maglab
