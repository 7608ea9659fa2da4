#pragma once

#include <string>

#include "bigfloat.hpp"
#include "errors.hpp"
#include "rational.hpp"

namespace dekpoly {

// Element a + b*sqrt(d) of a real quadratic extension of the rationals.
// d is a square-free positive integer fixed per value; a value with b = 0 is
// plain rational and carries d = 0 so that rationals from different contexts
// mix freely. Operations on two genuinely irrational values require equal d.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
    QuadExt(Rational a, Rational b, int d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        normalize();
    }

    static QuadExt sqrt_of(int d) { return QuadExt(Rational(0), Rational(1), d); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int d() const { return d_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    // Field norm N(a + b sqrt d) = a^2 - d b^2; multiplicative, and zero only
    // at zero because sqrt(d) is irrational.
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    // Galois conjugate sqrt(d) -> -sqrt(d). Distinct from complex conjugation,
    // which is the identity on this real field.
    QuadExt galois_conj() const { return QuadExt(a_, -b_, d_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        int d = join(x, y, "+");
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        int d = join(x, y, "-");
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        int d = join(x, y, "*");
        return QuadExt(x.a_ * y.a_ + Rational(d) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw DivisionError("QuadExt division by zero");
        int d = join(x, y, "/");
        Rational n = y.norm();
        QuadExt xc = x * y.galois_conj_with_d(d);
        return QuadExt(xc.a_ / n, xc.b_ / n, d);
    }

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    // Exact sign: b sqrt(d) has sign(b), and when a, b oppose, compare a^2
    // against d b^2.
    int sgn() const {
        int sa = dekpoly::sign(a_), sb = dekpoly::sign(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        int cmp = dekpoly::sign(a_ * a_ - Rational(d_) * b_ * b_);
        return cmp == 0 ? 0 : (cmp > 0 ? sa : sb);
    }

    bool is_positive() const { return sgn() > 0; }

    BigFloat to_bigfloat(long precision_bits) const {
        BigFloat va = BigFloat::from_rational(a_, precision_bits);
        if (b_ == 0) return va;
        BigFloat vb = BigFloat::from_rational(b_, precision_bits);
        return va + vb * sqrt(BigFloat::from_int(d_, precision_bits));
    }

    std::string str() const {
        if (b_ == 0) return to_string(a_);
        std::string root = "sqrt" + std::to_string(d_);
        std::string bs = to_string(b_ < 0 ? -b_ : b_);
        if (bs.find('/') != std::string::npos) bs = "(" + bs + ")";
        std::string tail = (bs == "1") ? root : bs + "*" + root;
        if (a_ == 0) return (b_ < 0 ? "-" : "") + tail;
        return to_string(a_) + (b_ < 0 ? " - " : " + ") + tail;
    }

private:
    void normalize() {
        if (b_ == 0) d_ = 0;
        else if (d_ <= 0) throw FieldError("QuadExt requires a positive square-free d");
    }
    // Unified d of two operands; rationals adopt the other side's field.
    static int join(const QuadExt& x, const QuadExt& y, const char* op) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
        throw FieldError(std::string("QuadExt '") + op + "' across different radicands: d=" +
                         std::to_string(x.d_) + " vs d=" + std::to_string(y.d_));
    }
    QuadExt galois_conj_with_d(int d) const {
        return b_ == 0 ? *this : QuadExt(a_, -b_, d);
    }

    Rational a_, b_;
    int d_;
};

inline int sign(const QuadExt& x) { return x.sgn(); }
inline std::string to_string(const QuadExt& x) { return x.str(); }

} // namespace dekpoly
