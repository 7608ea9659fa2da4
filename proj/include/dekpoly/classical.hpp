#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace dekpoly {

// x^k by repeated squaring in any multiplicative monoid.
template <class T>
T generic_pow(T base, unsigned long k, T one) {
    T acc = std::move(one);
    while (k) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

enum class FamilyKind { hermite, chebyshev1, custom };

inline std::string family_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::hermite: return "hermite";
        case FamilyKind::chebyshev1: return "chebyshev1";
        default: return "custom";
    }
}

// A symmetric monic orthogonal family given by its three-term recurrence
//   P_0 = 1,  P_1 = x,  x P_n = P_{n+1} + a_n P_{n-1},  a_n != 0.
// The polynomial cache grows on demand; growth is serialized by a mutex and
// lookups return copies so cache reallocation cannot invalidate callers.
template <class F>
class ClassicalFamily {
public:
    static ClassicalFamily hermite() {
        return ClassicalFamily(FamilyKind::hermite, [](int n) {
            return scalar_traits<F>::from_int(n);
        });
    }

    // Monic Chebyshev, first kind: a_1 = 1/2, a_n = 1/4 afterwards.
    static ClassicalFamily chebyshev1() {
        return ClassicalFamily(FamilyKind::chebyshev1, [](int n) {
            return scalar_traits<F>::from_rational(n == 1 ? Rational(1, 2) : Rational(1, 4));
        });
    }

    static ClassicalFamily custom(std::vector<F> a_values) {
        return ClassicalFamily(FamilyKind::custom, [vals = std::move(a_values)](int n) {
            if (n < 1 || static_cast<size_t>(n) > vals.size())
                throw ConfigError("custom family: a_" + std::to_string(n) +
                                  " beyond the supplied coefficient list");
            return vals[n - 1];
        });
    }

    // Copy shares no state; the cache snapshot is taken under the source lock.
    ClassicalFamily(const ClassicalFamily& other) : kind_(other.kind_), a_(other.a_) {
        std::lock_guard<std::mutex> lock(other.mutex_);
        cache_ = other.cache_;
    }
    ClassicalFamily& operator=(const ClassicalFamily&) = delete;

    FamilyKind kind() const { return kind_; }

    F a(int n) const {
        if (n < 1) throw ConfigError("recurrence coefficient a_n needs n >= 1");
        F v = a_(n);
        if (scalar_traits<F>::is_zero(v))
            throw ConfigError("recurrence coefficient a_" + std::to_string(n) + " is zero");
        return v;
    }

    Polynomial<F> P(int n) const {
        if (n < 0) throw ConfigError("polynomial index must be nonnegative");
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(cache_.size()) <= n) {
            int m = static_cast<int>(cache_.size()) - 1; // have P_0..P_m
            const auto& pm = cache_[m];
            const auto& pm1 = cache_[m - 1];
            cache_.push_back(Polynomial<F>::x() * pm - pm1 * a_(m));
        }
        return cache_[n];
    }

private:
    ClassicalFamily(FamilyKind kind, std::function<F(int)> a)
        : kind_(kind), a_(std::move(a)) {
        cache_.push_back(Polynomial<F>::constant(scalar_traits<F>::one()));
        cache_.push_back(Polynomial<F>::x());
    }

    FamilyKind kind_;
    std::function<F(int)> a_;
    mutable std::vector<Polynomial<F>> cache_;
    mutable std::mutex mutex_;
};

// Classical Chebyshev polynomials over the rationals (integer coefficients).
inline Polynomial<Rational> chebyshev_T(int n) {
    Polynomial<Rational> t0 = Polynomial<Rational>::constant(Rational(1));
    if (n == 0) return t0;
    Polynomial<Rational> t1 = Polynomial<Rational>::x();
    Polynomial<Rational> two_x = Rational(2) * Polynomial<Rational>::x();
    for (int k = 1; k < n; ++k) {
        Polynomial<Rational> t2 = two_x * t1 - t0;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    return t1;
}

inline Polynomial<Rational> chebyshev_U(int n) {
    if (n < 0) return Polynomial<Rational>(); // U_{-1} = 0
    Polynomial<Rational> u0 = Polynomial<Rational>::constant(Rational(1));
    if (n == 0) return u0;
    Polynomial<Rational> two_x = Rational(2) * Polynomial<Rational>::x();
    Polynomial<Rational> u1 = two_x;
    for (int k = 1; k < n; ++k) {
        Polynomial<Rational> u2 = two_x * u1 - u0;
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    return u1;
}

// Monic first-kind Chebyshev: T_0, and T_n / 2^(n-1) for n >= 1.
inline Polynomial<Rational> chebyshev_T_monic(int n) {
    if (n == 0) return chebyshev_T(0);
    Rational scale = Rational(1) / Rational(generic_pow(BigInt(2), n - 1, BigInt(1)));
    return scale * chebyshev_T(n);
}

// Exact Chebyshev values at the imaginary unit, in Q(sqrt 2)(i):
//   T_n(i) = (z+^n + z-^n)/2,  U_n(i) = (z+^(n+1) - z-^(n+1)) / (2 sqrt2 i),
// where z+- = i (1 +- sqrt2) are the two roots of w^2 - 2iw - 1.
namespace detail {

inline ComplexOf<QuadExt> cheb_zplus() {
    return ComplexOf<QuadExt>(QuadExt(), QuadExt(Rational(1), Rational(1), 2));
}
inline ComplexOf<QuadExt> cheb_zminus() {
    return ComplexOf<QuadExt>(QuadExt(), QuadExt(Rational(1), Rational(-1), 2));
}

} // namespace detail

inline ComplexOf<QuadExt> cheb_T_at_i(long n) {
    using C = ComplexOf<QuadExt>;
    C one(QuadExt(Rational(1)));
    C zp = generic_pow(detail::cheb_zplus(), static_cast<unsigned long>(n), one);
    C zm = generic_pow(detail::cheb_zminus(), static_cast<unsigned long>(n), one);
    return (zp + zm) * C(QuadExt(Rational(1, 2)));
}

inline ComplexOf<QuadExt> cheb_U_at_i(long n) {
    using C = ComplexOf<QuadExt>;
    if (n < 0) return C(QuadExt());
    C one(QuadExt(Rational(1)));
    C zp = generic_pow(detail::cheb_zplus(), static_cast<unsigned long>(n + 1), one);
    C zm = generic_pow(detail::cheb_zminus(), static_cast<unsigned long>(n + 1), one);
    C denom(QuadExt(), QuadExt(Rational(0), Rational(2), 2)); // 2 sqrt2 i
    return (zp - zm) / denom;
}

} // namespace dekpoly
