#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>

namespace maglab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::complex<double> to_complex(const Rational& r) {
    return {to_double(r), 0.0};
}

// Parses "3/4", "-2", "0.25", "1e-3" into an exact rational.
// Throws ParseError on malformed input.
Rational parse_rational(const std::string& text);

// Canonical text form: "p" or "p/q" with q > 1.
std::string format_rational(const Rational& r);

// r^e for integer e (e < 0 requires r != 0).
Rational rational_pow(const Rational& r, long e);

// Exact n! as a big integer.
BigInt factorial(unsigned n);

}  // namespace maglab
