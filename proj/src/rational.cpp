#include "maglab/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "maglab/errors.hpp"

namespace maglab {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

Rational parse_decimal(const std::string& text) {
    // [digits][.digits][e[+-]digits]
    std::string mantissa = text;
    long exponent10 = 0;
    size_t epos = mantissa.find_first_of("eE");
    if (epos != std::string::npos) {
        std::string exp_part = mantissa.substr(epos + 1);
        mantissa = mantissa.substr(0, epos);
        if (exp_part.empty()) throw ParseError("malformed exponent in '" + text + "'");
        char* end = nullptr;
        exponent10 = std::strtol(exp_part.c_str(), &end, 10);
        if (end == nullptr || *end != '\0') {
            throw ParseError("malformed exponent in '" + text + "'");
        }
    }
    size_t dot = mantissa.find('.');
    std::string digits = mantissa;
    if (dot != std::string::npos) {
        digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
        exponent10 -= static_cast<long>(mantissa.size() - dot - 1);
    }
    if (digits.empty()) digits = "0";
    if (!all_digits(digits)) throw ParseError("malformed number '" + text + "'");
    Rational value{BigInt(digits), 1};
    BigInt shift = 1;
    for (long i = 0; i < std::labs(exponent10); ++i) shift *= 10;
    if (exponent10 >= 0) {
        value *= Rational(shift, 1);
    } else {
        value /= Rational(shift, 1);
    }
    return value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = text;
    // trim
    size_t first = s.find_first_not_of(" \t");
    size_t last = s.find_last_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty number");
    s = s.substr(first, last - first + 1);

    bool negative = false;
    if (s[0] == '+' || s[0] == '-') {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    if (s.empty()) throw ParseError("malformed number '" + text + "'");

    Rational value;
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw ParseError("malformed fraction '" + text + "'");
        }
        BigInt d(den);
        if (d == 0) throw ParseError("zero denominator in '" + text + "'");
        value = Rational(BigInt(num), d);
    } else {
        value = parse_decimal(s);
    }
    return negative ? -value : value;
}

std::string format_rational(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational rational_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw Error("ZeroLeadingCoefficient", "0 cannot be raised to a negative power");
    Rational base = e > 0 ? r : Rational(1) / r;
    long n = std::labs(e);
    Rational result(1);
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace maglab
