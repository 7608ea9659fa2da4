#pragma once

#include <string>

#include "bigfloat.hpp"
#include "complexof.hpp"
#include "quadext.hpp"
#include "rational.hpp"

namespace dekpoly {

// Uniform hooks the generic pipelines need from a coefficient field:
// constants, exactness, zero tests, and embedding into BigFloat for the
// numeric verifications.
template <class F>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long long v) { return Rational(v); }
    static Rational from_rational(const Rational& q) { return q; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static std::string name() { return "rational"; }
    static BigFloat to_bigfloat(const Rational& x, long precision_bits) {
        return BigFloat::from_rational(x, precision_bits);
    }
};

template <>
struct scalar_traits<QuadExt> {
    static constexpr bool exact = true;
    static QuadExt zero() { return QuadExt(); }
    static QuadExt one() { return QuadExt(Rational(1)); }
    static QuadExt from_int(long long v) { return QuadExt(Rational(v)); }
    static QuadExt from_rational(const Rational& q) { return QuadExt(q); }
    static bool is_zero(const QuadExt& x) { return x.is_zero(); }
    static std::string name() { return "quadext"; }
    static BigFloat to_bigfloat(const QuadExt& x, long precision_bits) {
        return x.to_bigfloat(precision_bits);
    }
};

template <>
struct scalar_traits<BigFloat> {
    static constexpr bool exact = false;
    // Constants are minted at the minimum precision; every arithmetic result
    // takes the maximum operand precision, so these never narrow a value.
    static BigFloat zero() { return BigFloat(BigFloat::min_precision); }
    static BigFloat one() { return BigFloat::from_int(1, BigFloat::min_precision); }
    static BigFloat from_int(long long v) { return BigFloat::from_int(v, BigFloat::min_precision); }
    static BigFloat from_rational(const Rational& q) {
        return BigFloat::from_rational(q, BigFloat::default_precision);
    }
    static bool is_zero(const BigFloat& x) { return x.is_zero(); }
    static std::string name() { return "bigfloat"; }
    static BigFloat to_bigfloat(const BigFloat& x, long precision_bits) {
        return x.prec() >= precision_bits ? x : x.with_prec(precision_bits);
    }
};

template <class F>
struct scalar_traits<ComplexOf<F>> {
    using R = scalar_traits<F>;
    static constexpr bool exact = R::exact;
    static ComplexOf<F> zero() { return ComplexOf<F>(R::zero(), R::zero()); }
    static ComplexOf<F> one() { return ComplexOf<F>(R::one(), R::zero()); }
    static ComplexOf<F> from_int(long long v) { return ComplexOf<F>(R::from_int(v), R::zero()); }
    static ComplexOf<F> from_rational(const Rational& q) {
        return ComplexOf<F>(R::from_rational(q), R::zero());
    }
    static bool is_zero(const ComplexOf<F>& x) { return R::is_zero(x.re) && R::is_zero(x.im); }
    static std::string name() { return "complex<" + R::name() + ">"; }
};

template <class F>
ComplexOf<F> imaginary_unit() {
    return ComplexOf<F>(scalar_traits<F>::zero(), scalar_traits<F>::one());
}

// |z| as BigFloat, usable for any real field and for complex over it.
template <class F>
BigFloat abs_bigfloat(const F& x, long precision_bits) {
    return abs(scalar_traits<F>::to_bigfloat(x, precision_bits));
}

template <class F>
BigFloat abs_bigfloat(const ComplexOf<F>& z, long precision_bits) {
    BigFloat r = scalar_traits<F>::to_bigfloat(z.re, precision_bits);
    BigFloat i = scalar_traits<F>::to_bigfloat(z.im, precision_bits);
    return sqrt(r * r + i * i);
}

inline std::string to_string(const BigFloat& x) { return x.to_string(); }

template <class F>
std::string to_string(const ComplexOf<F>& z) {
    using dekpoly::to_string;
    return "(" + to_string(z.re) + ", " + to_string(z.im) + "i)";
}

} // namespace dekpoly
