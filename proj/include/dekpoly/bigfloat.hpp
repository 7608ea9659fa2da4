#pragma once

#include <mpfr.h>

#include <climits>
#include <string>
#include <utility>

#include "errors.hpp"
#include "rational.hpp"

namespace dekpoly {

// Radix-2 floating point with an explicit per-value precision. All operations
// round to nearest at the result precision, which is the maximum of the
// operand precisions, so mixing precisions never silently truncates.
class BigFloat {
public:
    static constexpr long default_precision = 256;
    static constexpr long min_precision = 64;

    explicit BigFloat(long precision_bits = default_precision) {
        check_precision(precision_bits);
        mpfr_init2(v_, precision_bits);
        mpfr_set_zero(v_, 1);
    }

    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }

    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }

    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }

    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }

    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_int(long long value, long precision_bits = default_precision) {
        BigFloat r(precision_bits);
        mpfr_set_sj(r.v_, value, MPFR_RNDN);
        return r;
    }

    static BigFloat from_bigint(const BigInt& value, long precision_bits = default_precision) {
        BigFloat r(precision_bits);
        mpfr_set_z(r.v_, value.backend().data(), MPFR_RNDN);
        return r;
    }

    static BigFloat from_rational(const Rational& q, long precision_bits = default_precision) {
        BigFloat r(precision_bits);
        mpfr_set_q(r.v_, q.backend().data(), MPFR_RNDN);
        return r;
    }

    // Accepts ordinary decimal notation, with or without exponent.
    static BigFloat from_string(const std::string& text, long precision_bits = default_precision) {
        BigFloat r(precision_bits);
        if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw ConfigError("cannot parse decimal '" + text + "'");
        return r;
    }

    static BigFloat pi(long precision_bits) {
        BigFloat r(precision_bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    long prec() const { return mpfr_get_prec(v_); }

    BigFloat with_prec(long precision_bits) const {
        BigFloat r(precision_bits);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Binary exponent of the value; only meaningful for nonzero values.
    long exponent() const { return is_zero() ? LONG_MIN : mpfr_get_exp(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Scientific decimal string. digits = 0 means full precision plus guard.
    std::string to_string(size_t digits = 0) const {
        if (is_zero()) return "0";
        if (digits == 0) digits = static_cast<size_t>(prec() * 0.30103) + 3;
        mpfr_exp_t e;
        char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
        std::string m(raw);
        mpfr_free_str(raw);
        std::string s;
        size_t first = 0;
        if (m[0] == '-') { s += '-'; first = 1; }
        s += m.substr(first, 1);
        if (m.size() > first + 1) s += "." + m.substr(first + 1);
        s += "e" + std::to_string(static_cast<long long>(e) - 1);
        return s;
    }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        if (b.is_zero()) throw DivisionError("BigFloat division by zero");
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }

    BigFloat operator-() const {
        BigFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
    BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& a) {
        if (a.sign() < 0) throw Error("BigFloat sqrt of negative value");
        BigFloat r(a.prec());
        mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_exp(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat erfc(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_erfc(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cos(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_cos(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sin(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_sin(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat cosh(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_cosh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat tanh(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_tanh(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    // a * 2^k, exact.
    friend BigFloat ldexp2(const BigFloat& a, long k) {
        BigFloat r(a.prec());
        mpfr_mul_2si(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }

private:
    static void check_precision(long precision_bits) {
        if (precision_bits < min_precision)
            throw ConfigError("precision_bits must be >= 64, got " + std::to_string(precision_bits));
    }
    static long join(const BigFloat& a, const BigFloat& b) {
        return a.prec() > b.prec() ? a.prec() : b.prec();
    }

    mpfr_t v_;
};

// 2^-k at the given working precision, the standard tolerance shape used by
// the numeric verifications.
inline BigFloat pow2(long k, long precision_bits) {
    return ldexp2(BigFloat::from_int(1, precision_bits), k);
}

// 10^-k as a BigFloat, for tolerances stated in decimal.
inline BigFloat pow10_neg(long k, long precision_bits) {
    BigFloat t = BigFloat::from_int(10, precision_bits);
    BigFloat r = BigFloat::from_int(1, precision_bits);
    for (long i = 0; i < k; ++i) r /= t;
    return r;
}

} // namespace dekpoly
