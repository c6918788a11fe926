#include "maglab/contour.hpp"

#include <cmath>
#include <stdexcept>

#include "maglab/errors.hpp"

namespace maglab {

Complex contour_residue(const ComplexFunction& f, Complex z0, double radius, int nodes) {
    if (radius <= 0.0) throw std::invalid_argument("contour_residue: radius must be positive");
    if (nodes < 4) throw std::invalid_argument("contour_residue: need at least 4 nodes");
    constexpr double kTwoPi = 6.283185307179586476925286766559005768;
    Complex sum = 0.0;
    for (int k = 0; k < nodes; ++k) {
        double theta = kTwoPi * k / nodes;
        Complex dir(std::cos(theta), std::sin(theta));
        Complex v = f(z0 + radius * dir);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw EvaluationFailure("contour_residue: function not finite on the contour");
        }
        sum += v * dir;
    }
    return sum * (radius / nodes);
}

}  // namespace maglab
