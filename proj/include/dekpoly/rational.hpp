#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

#include "errors.hpp"

namespace dekpoly {

// Arbitrary-precision integers and rationals. mpq keeps every value in
// canonical form: gcd(num, den) = 1 and den > 0.
using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const BigInt& z) { return z.sign(); }

inline Rational rat(long long num, long long den = 1) {
    if (den == 0) throw DivisionError("rational with zero denominator");
    return Rational(num, den);
}

// Accepts "num", "num/den", and plain decimal strings like "-1.25".
inline Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw DivisionError("rational with zero denominator");
            return Rational(num) / Rational(den);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string digits = text.substr(0, dot) + text.substr(dot + 1);
            BigInt num(digits);
            BigInt den(1);
            for (size_t i = dot + 1; i < text.size(); ++i) den *= 10;
            return Rational(num) / Rational(den);
        }
        return Rational(BigInt(text));
    } catch (const std::exception& e) {
        throw ConfigError("cannot parse rational '" + text + "': " + e.what());
    }
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// (k)!! for odd k >= -1; double_factorial(-1) = 1 by convention.
inline BigInt double_factorial(long long k) {
    BigInt r = 1;
    for (long long m = k; m >= 2; m -= 2) r *= m;
    return r;
}

inline BigInt factorial(long long n) {
    BigInt r = 1;
    for (long long m = 2; m <= n; ++m) r *= m;
    return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

} // namespace dekpoly
