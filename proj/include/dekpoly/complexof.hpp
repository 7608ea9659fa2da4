#pragma once

#include <string>
#include <utility>

#include "errors.hpp"

namespace dekpoly {

// Complex numbers over an arbitrary real scalar field F. std::complex is
// specified for built-in floating types only, so the field-generic pipelines
// (Gaussian rationals, Q(sqrt d)(i), high-precision floats) use this instead.
template <class F>
struct ComplexOf {
    F re{};
    F im{};

    ComplexOf() = default;
    ComplexOf(F r) : re(std::move(r)), im() {}
    ComplexOf(F r, F i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexOf i(const F& one) { return ComplexOf(one - one, one); }

    ComplexOf conj() const { return ComplexOf(re, -im); }

    friend ComplexOf operator+(const ComplexOf& x, const ComplexOf& y) {
        return ComplexOf(x.re + y.re, x.im + y.im);
    }
    friend ComplexOf operator-(const ComplexOf& x, const ComplexOf& y) {
        return ComplexOf(x.re - y.re, x.im - y.im);
    }
    friend ComplexOf operator*(const ComplexOf& x, const ComplexOf& y) {
        return ComplexOf(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
    }
    friend ComplexOf operator/(const ComplexOf& x, const ComplexOf& y) {
        F n = y.re * y.re + y.im * y.im;
        ComplexOf t = x * y.conj();
        return ComplexOf(t.re / n, t.im / n);
    }

    ComplexOf operator-() const { return ComplexOf(-re, -im); }

    ComplexOf& operator+=(const ComplexOf& o) { return *this = *this + o; }
    ComplexOf& operator-=(const ComplexOf& o) { return *this = *this - o; }
    ComplexOf& operator*=(const ComplexOf& o) { return *this = *this * o; }
    ComplexOf& operator/=(const ComplexOf& o) { return *this = *this / o; }

    friend bool operator==(const ComplexOf& x, const ComplexOf& y) {
        return x.re == y.re && x.im == y.im;
    }
    friend bool operator!=(const ComplexOf& x, const ComplexOf& y) { return !(x == y); }
};

template <class F>
ComplexOf<F> conj(const ComplexOf<F>& z) { return z.conj(); }

} // namespace dekpoly
