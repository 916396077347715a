#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gapenergy {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt rat_floor(const BigRat& x) {
    BigInt num = numerator(x), den = denominator(x);  // den > 0
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline BigInt rat_ceil(const BigRat& x) { return -rat_floor(-x); }

// nearest integer, ties toward +inf
inline BigInt rat_round(const BigRat& x) { return rat_floor(x + BigRat(1, 2)); }

inline BigRat rat_abs(const BigRat& x) { return x < 0 ? BigRat(-x) : x; }

inline BigRat rat_pow(const BigRat& x, int e) {
    if (e == 0) return BigRat(1);
    if (e < 0) {
        if (x == 0) throw std::invalid_argument("rat_pow: zero base with negative exponent");
        return BigRat(1) / rat_pow(x, -e);
    }
    BigRat base = x, acc(1);
    int n = e;
    while (n > 0) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

inline double rat_to_double(const BigRat& x) { return x.convert_to<double>(); }

inline BigRat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite");
    BigRat r;
    int exp2 = 0;
    double m = std::frexp(x, &exp2);  // x = m * 2^exp2, |m| in [0.5, 1)
    // 53 doublings make the mantissa integral
    long long mant = static_cast<long long>(std::ldexp(m, 53));
    exp2 -= 53;
    r = BigRat(mant);
    if (exp2 > 0)
        r *= rat_pow(BigRat(2), exp2);
    else if (exp2 < 0)
        r /= rat_pow(BigRat(2), -exp2);
    return r;
}

// some rational r > 0 with r^m >= x, within a small factor of x^(1/m)
inline BigRat rat_root_upper(const BigRat& x, int m) {
    if (x <= 0 || m <= 0) throw std::invalid_argument("rat_root_upper: needs x > 0, m > 0");
    double guess = std::pow(rat_to_double(x), 1.0 / m);
    BigRat r = rat_from_double(guess * (1.0 + 1e-9) + 1e-300);
    if (r <= 0) r = BigRat(1, 1000000);
    const BigRat grow(1025, 1024);
    while (rat_pow(r, m) < x) r *= grow;
    return r;
}

// "a/b" or "a"; denominator must be positive
inline BigRat parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(s));
        BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("parse_rational: nonpositive denominator");
        return BigRat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: bad rational '" + s + "'");
    }
}

inline std::string rat_str(const BigRat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace gapenergy
