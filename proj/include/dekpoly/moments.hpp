#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "classical.hpp"
#include "poly_gcd.hpp"

namespace dekpoly {

// ---------------------------------------------------------------------------
// The constrained polynomial basis: psi_0 = 1 and, for k >= 1,
//   psi_k = x^(k+2) + ((k+2)/k) x^k,
// the unique monic basis (up to the constant) of { p : p'(i) = p'(-i) = 0 }
// with one element per degree gap.
// ---------------------------------------------------------------------------
template <class F>
Polynomial<F> psi_basis(int k) {
    using T = scalar_traits<F>;
    if (k < 0) throw ConfigError("psi basis index must be nonnegative");
    if (k == 0) return Polynomial<F>::constant(T::one());
    return Polynomial<F>::monomial(k + 2, T::one()) +
           Polynomial<F>::monomial(k, T::from_rational(Rational(k + 2, k)));
}

// Derivative functionals p |-> p'(i), p |-> p'(-i).
template <class F>
ComplexOf<F> deriv_at_i(const Polynomial<F>& p) {
    return eval_at_i(derivative(p));
}
template <class F>
ComplexOf<F> deriv_at_minus_i(const Polynomial<F>& p) {
    return eval_at_minus_i(derivative(p));
}

// i^m as an exact rational-complex value.
inline ComplexOf<Rational> i_power(long m) {
    long r = ((m % 4) + 4) % 4;
    switch (r) {
        case 0: return ComplexOf<Rational>(Rational(1), Rational(0));
        case 1: return ComplexOf<Rational>(Rational(0), Rational(1));
        case 2: return ComplexOf<Rational>(Rational(-1), Rational(0));
        default: return ComplexOf<Rational>(Rational(0), Rational(-1));
    }
}

// ---------------------------------------------------------------------------
// Base constants of the Gaussian weight w(x) = e^(-x^2/2):
//   gaussian_mass  = integral w            = sqrt(2 pi)
//   lambda0        = integral w/(1+x^2)    = pi e^(1/2) erfc(1/sqrt2)
//   nu0            = integral w/(1+x^2)^2  = sqrt(2 pi)/2   (closed form)
// Every moment of w, w/(1+x^2), w/(1+x^2)^2 against monomials lies in the
// rational module spanned by {sqrt(2 pi), lambda0}; nu0's lambda0-component
// cancels exactly.
// ---------------------------------------------------------------------------
inline BigFloat sqrt_two_pi(unsigned prec) {
    return sqrt(BigFloat::from_int(2, prec) * BigFloat::pi(prec));
}

inline BigFloat gauss_lambda0(unsigned prec) {
    BigFloat half = BigFloat::from_rational(Rational(1, 2), prec);
    BigFloat inv_sqrt2 = sqrt(half);
    return BigFloat::pi(prec) * exp(half) * erfc(inv_sqrt2);
}

// A value a*sqrt(2 pi) + b*lambda0 with rational a, b.
struct GaussModuleValue {
    Rational a; // coefficient of sqrt(2 pi)
    Rational b; // coefficient of lambda0

    GaussModuleValue() : a(0), b(0) {}
    GaussModuleValue(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool is_zero() const { return a == 0 && b == 0; }

    friend GaussModuleValue operator+(const GaussModuleValue& x, const GaussModuleValue& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend GaussModuleValue operator-(const GaussModuleValue& x, const GaussModuleValue& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend GaussModuleValue operator-(const GaussModuleValue& x) { return {-x.a, -x.b}; }
    friend GaussModuleValue operator*(const Rational& s, const GaussModuleValue& x) {
        return {s * x.a, s * x.b};
    }
    friend GaussModuleValue operator*(const GaussModuleValue& x, const Rational& s) {
        return s * x;
    }
    friend bool operator==(const GaussModuleValue& x, const GaussModuleValue& y) {
        return x.a == y.a && x.b == y.b;
    }

    BigFloat to_bigfloat(unsigned prec) const {
        return BigFloat::from_rational(a, prec) * sqrt_two_pi(prec) +
               BigFloat::from_rational(b, prec) * gauss_lambda0(prec);
    }
};

// ---------------------------------------------------------------------------
// Exact moment engine for the Gaussian weight.  Values live in the
// {sqrt(2 pi), lambda0} module; division is defined exactly when the ratio
// is rational (componentwise proportional), which the construction theory
// guarantees wherever the engine is asked to divide.
// ---------------------------------------------------------------------------
class GaussExactMoments {
public:
    using field_type = Rational;
    using value_type = GaussModuleValue;
    static constexpr bool exact = true;

    GaussExactMoments() = default;
    GaussExactMoments(const GaussExactMoments& other) {
        std::lock_guard<std::mutex> lock(other.mutex_);
        lam_ = other.lam_;
        nu_ = other.nu_;
    }
    GaussExactMoments& operator=(const GaussExactMoments&) = delete;

    // mu_k = integral x^k w: (k-1)!! sqrt(2 pi) for even k, 0 for odd k.
    value_type plain_moment(int k) const {
        if (k < 0) throw ConfigError("moment index must be nonnegative");
        if (k % 2 == 1) return {};
        return {Rational(double_factorial(k - 1)), Rational(0)};
    }

    // lambda_k = integral x^k w/(1+x^2); nu_k = integral x^k w/(1+x^2)^2.
    value_type lambda_moment(int k) const {
        if (k % 2 == 1) return {};
        std::lock_guard<std::mutex> lock(mutex_);
        extend_locked(k);
        return lam_[k / 2];
    }
    value_type nu_moment(int k) const {
        if (k % 2 == 1) return {};
        std::lock_guard<std::mutex> lock(mutex_);
        extend_locked(k);
        return nu_[k / 2];
    }

    value_type mu_plain(const Polynomial<Rational>& p) const {
        value_type acc;
        for (int k = 0; k <= p.degree(); k += 2) acc = acc + p.coeff(k) * plain_moment(k);
        return acc;
    }
    value_type mu_tilde(const Polynomial<Rational>& p) const {
        value_type acc;
        for (int k = 0; k <= p.degree(); k += 2) acc = acc + p.coeff(k) * nu_moment(k);
        return acc;
    }

    // num/den as an exact rational; throws DegenerateError if den = 0 and
    // FieldError if the ratio falls outside the rationals.
    static Rational ratio(const value_type& num, const value_type& den) {
        if (den.is_zero()) {
            if (num.is_zero()) throw DegenerateError(-1, "0/0 module ratio");
            throw DegenerateError(-1, "division by zero module value");
        }
        Rational r = den.a != 0 ? num.a / den.a : num.b / den.b;
        if (num.a != r * den.a || num.b != r * den.b)
            throw FieldError("module ratio is not rational");
        return r;
    }

    static bool value_exact_zero(const value_type& v) { return v.is_zero(); }
    BigFloat value_numeric(const value_type& v, unsigned prec) const {
        return v.to_bigfloat(prec);
    }

    // Determinant-table entry for the biorthogonality matrix: rows with
    // j >= 2 are mu_tilde(x^l psi_(j-2)) normalized by nu0 = sqrt(2 pi)/2.
    // Entries are degree <= 1 polynomials in L := lambda0 / sqrt(2 pi).
    using delta_entry_type = Polynomial<ComplexOf<Rational>>;

    delta_entry_type delta_entry(int j, int l) const {
        if (j < 2) throw ConfigError("delta_entry handles rows j >= 2");
        value_type v = mu_tilde(Polynomial<Rational>::monomial(l, Rational(1)) *
                                psi_basis<Rational>(j - 2));
        // divide by nu0 = (1/2, 0): doubles both components
        using C = ComplexOf<Rational>;
        Polynomial<C> out = Polynomial<C>::constant(C(2 * v.a));
        return out + Polynomial<C>::monomial(1, C(2 * v.b));
    }
    static delta_entry_type embed(const ComplexOf<Rational>& z) {
        return Polynomial<ComplexOf<Rational>>::constant(z);
    }

private:
    void extend_locked(int k) const {
        if (lam_.empty()) {
            lam_.push_back({Rational(0), Rational(1)}); // lambda0
            nu_.push_back({Rational(1, 2), Rational(0)}); // nu0 = sqrt(2 pi)/2
        }
        while (static_cast<int>(lam_.size()) <= k / 2) {
            int m = static_cast<int>(lam_.size()) * 2; // next even index
            lam_.push_back(plain_moment(m - 2) - lam_[m / 2 - 1]);
            nu_.push_back(lam_[m / 2 - 1] - nu_[m / 2 - 1]);
        }
    }

    mutable std::vector<value_type> lam_, nu_;
    mutable std::mutex mutex_;
};

// ---------------------------------------------------------------------------
// Exact moment engine for the Chebyshev weight 1/sqrt(1-x^2) on [-1, 1].
// All values carry an implicit factor of pi (returned with pi factored out):
//   integral T_0 = pi, integral T_k = 0 (k >= 1), and the modified moments
//   I_k = (1/pi) integral T_k/(1+x^2)^2 lie in Q(sqrt 2):
//     I_k = ((3 sqrt2 + 2k)/8) T_k(i) - i ((3 + k sqrt2)/4) U_(k-1)(i)
// for even k (odd k vanish by symmetry).
// ---------------------------------------------------------------------------
class ChebExactMoments {
public:
    using field_type = QuadExt;
    using value_type = QuadExt; // in units of pi
    static constexpr bool exact = true;

    ChebExactMoments() = default;
    ChebExactMoments(const ChebExactMoments& other) {
        std::lock_guard<std::mutex> lock(other.mutex_);
        cache_ = other.cache_;
    }
    ChebExactMoments& operator=(const ChebExactMoments&) = delete;

    // Exact expansion of p in the T-basis (classical, non-monic T_k).
    static std::vector<QuadExt> to_T_basis(const Polynomial<QuadExt>& p) {
        std::vector<QuadExt> t;
        for (int k = p.degree(); k >= 0; --k) {
            // t <- x * t + coeff(k) * T_0
            std::vector<QuadExt> nt(t.size() + 1, QuadExt());
            for (size_t j = 0; j < t.size(); ++j) {
                if (t[j].is_zero()) continue;
                if (j == 0) {
                    nt[1] = nt[1] + t[0];
                } else {
                    QuadExt half = t[j] * QuadExt(Rational(1, 2));
                    nt[j + 1] = nt[j + 1] + half;
                    nt[j - 1] = nt[j - 1] + half;
                }
            }
            if (nt.empty()) nt.push_back(QuadExt());
            nt[0] = nt[0] + p.coeff(k);
            t = std::move(nt);
        }
        return t;
    }

    // I_k (pi-units); zero for odd k.
    QuadExt modified_moment_T(int k) const {
        if (k < 0) throw ConfigError("moment index must be nonnegative");
        if (k % 2 == 1) return QuadExt();
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(cache_.size()) <= k / 2) {
            int n = static_cast<int>(cache_.size()) * 2;
            cache_.push_back(compute_I(n));
        }
        return cache_[k / 2];
    }

    value_type mu_plain(const Polynomial<QuadExt>& p) const {
        auto t = to_T_basis(p);
        return t.empty() ? QuadExt() : t[0];
    }
    value_type mu_tilde(const Polynomial<QuadExt>& p) const {
        auto t = to_T_basis(p);
        QuadExt acc;
        for (size_t k = 0; k < t.size(); k += 2)
            acc = acc + t[k] * modified_moment_T(static_cast<int>(k));
        return acc;
    }

    static QuadExt ratio(const value_type& num, const value_type& den) {
        if (den.is_zero()) {
            if (num.is_zero()) throw DegenerateError(-1, "0/0 moment ratio");
            throw DegenerateError(-1, "division by zero moment value");
        }
        return num / den;
    }

    static bool value_exact_zero(const value_type& v) { return v.is_zero(); }
    // Values carry a pi factor; reinstate it for magnitude reporting.
    BigFloat value_numeric(const value_type& v, unsigned prec) const {
        return v.to_bigfloat(prec) * BigFloat::pi(prec);
    }

    using delta_entry_type = ComplexOf<QuadExt>;

    delta_entry_type delta_entry(int j, int l) const {
        if (j < 2) throw ConfigError("delta_entry handles rows j >= 2");
        QuadExt v = mu_tilde(Polynomial<QuadExt>::monomial(l, QuadExt(Rational(1))) *
                             psi_basis<QuadExt>(j - 2));
        QuadExt nu0 = modified_moment_T(0); // pi cancels in the ratio
        return ComplexOf<QuadExt>(v / nu0);
    }
    static delta_entry_type embed(const ComplexOf<Rational>& z) {
        return ComplexOf<QuadExt>(QuadExt(z.re), QuadExt(z.im));
    }

private:
    static QuadExt compute_I(int n) {
        using C = ComplexOf<QuadExt>;
        C tni = cheb_T_at_i(n);
        C uni = cheb_U_at_i(n - 1);
        QuadExt c1(Rational(n, 4), Rational(3, 8), 2);       // (3 sqrt2 + 2n)/8
        QuadExt c2(Rational(3, 4), Rational(n, 4), 2);       // (3 + n sqrt2)/4
        C minus_i(QuadExt(), QuadExt(Rational(-1)));
        C val = C(c1) * tni + minus_i * C(c2) * uni;
        if (!val.im.is_zero())
            throw FieldError("Chebyshev modified moment acquired an imaginary part");
        return val.re;
    }

    mutable std::vector<QuadExt> cache_;
    mutable std::mutex mutex_;
};

// ---------------------------------------------------------------------------
// Numeric moment engine for any symmetric monic family.  Plain moments come
// from iterating the recurrence on the coefficient vector of x^k in the
// P-basis (mu_k / mu_0 is the P_0-coefficient); the two modified layers
// follow the downward-stable recursions
//   lambda_k = mu_(k-2) - lambda_(k-2),   nu_k = lambda_(k-2) - nu_(k-2).
// Base constants mu_0, lambda_0, nu_0 are supplied (Gaussian: computed).
// ---------------------------------------------------------------------------
class NumericMomentEngine {
public:
    using field_type = BigFloat;
    using value_type = BigFloat;
    static constexpr bool exact = false;

    static NumericMomentEngine gaussian(unsigned prec) {
        unsigned wp = prec + 64;
        return NumericMomentEngine(ClassicalFamily<BigFloat>::hermite(), sqrt_two_pi(wp),
                                   gauss_lambda0(wp),
                                   ldexp2(sqrt_two_pi(wp), -1), prec);
    }

    NumericMomentEngine(ClassicalFamily<BigFloat> fam, BigFloat mu0, BigFloat lam0,
                        BigFloat nu0, unsigned prec)
        : fam_(std::move(fam)), prec_(prec), work_prec_(prec + 64) {
        mu_.push_back(mu0.with_prec(work_prec_));
        lam_.push_back(lam0.with_prec(work_prec_));
        nu_.push_back(nu0.with_prec(work_prec_));
        coeffs_.push_back(BigFloat::from_int(1, work_prec_)); // x^0 = P_0
        moment_index_ = 0;
    }

    NumericMomentEngine(const NumericMomentEngine& other)
        : fam_(other.fam_), prec_(other.prec_), work_prec_(other.work_prec_) {
        std::lock_guard<std::mutex> lock(other.mutex_);
        mu_ = other.mu_;
        lam_ = other.lam_;
        nu_ = other.nu_;
        coeffs_ = other.coeffs_;
        moment_index_ = other.moment_index_;
    }
    NumericMomentEngine& operator=(const NumericMomentEngine&) = delete;

    unsigned precision() const { return prec_; }

    BigFloat plain_moment(int k) const {
        if (k < 0) throw ConfigError("moment index must be nonnegative");
        if (k % 2 == 1) return BigFloat::from_int(0, prec_);
        std::lock_guard<std::mutex> lock(mutex_);
        extend_plain_locked(k);
        return mu_[k / 2].with_prec(prec_);
    }
    BigFloat lambda_moment(int k) const {
        if (k % 2 == 1) return BigFloat::from_int(0, prec_);
        std::lock_guard<std::mutex> lock(mutex_);
        extend_modified_locked(k);
        return lam_[k / 2].with_prec(prec_);
    }
    BigFloat nu_moment(int k) const {
        if (k % 2 == 1) return BigFloat::from_int(0, prec_);
        std::lock_guard<std::mutex> lock(mutex_);
        extend_modified_locked(k);
        return nu_[k / 2].with_prec(prec_);
    }

    BigFloat mu_plain(const Polynomial<BigFloat>& p) const {
        BigFloat acc = BigFloat::from_int(0, work_prec_);
        for (int k = 0; k <= p.degree(); k += 2)
            acc = acc + p.coeff(k).with_prec(work_prec_) * plain_moment_work(k);
        return acc.with_prec(prec_);
    }
    BigFloat mu_tilde(const Polynomial<BigFloat>& p) const {
        BigFloat acc = BigFloat::from_int(0, work_prec_);
        for (int k = 0; k <= p.degree(); k += 2)
            acc = acc + p.coeff(k).with_prec(work_prec_) * nu_moment_work(k);
        return acc.with_prec(prec_);
    }

    // num/den with degeneracy detection at relative threshold 2^(-prec/4).
    BigFloat ratio(const BigFloat& num, const BigFloat& den) const {
        BigFloat scale = abs(num);
        BigFloat one = BigFloat::from_int(1, prec_);
        if (scale < one) scale = one;
        BigFloat tol = ldexp2(scale, -static_cast<long>(prec_ / 4));
        if (abs(den) <= tol)
            throw DegenerateError(-1, "near-zero denominator in moment ratio");
        return num / den;
    }

    static bool value_exact_zero(const value_type& v) { return v.is_zero(); }
    BigFloat value_numeric(const value_type& v, unsigned) const { return v; }

    using delta_entry_type = ComplexOf<BigFloat>;

    delta_entry_type delta_entry(int j, int l) const {
        if (j < 2) throw ConfigError("delta_entry handles rows j >= 2");
        BigFloat one = BigFloat::from_int(1, prec_);
        BigFloat v = mu_tilde(Polynomial<BigFloat>::monomial(l, one) *
                              psi_basis<BigFloat>(j - 2));
        BigFloat nu0;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            nu0 = nu_[0].with_prec(prec_);
        }
        return ComplexOf<BigFloat>(v / nu0, BigFloat::from_int(0, prec_));
    }
    delta_entry_type embed(const ComplexOf<Rational>& z) const {
        return ComplexOf<BigFloat>(BigFloat::from_rational(z.re, prec_),
                                   BigFloat::from_rational(z.im, prec_));
    }

private:
    BigFloat plain_moment_work(int k) const {
        if (k % 2 == 1) return BigFloat::from_int(0, work_prec_);
        std::lock_guard<std::mutex> lock(mutex_);
        extend_plain_locked(k);
        return mu_[k / 2];
    }
    BigFloat nu_moment_work(int k) const {
        if (k % 2 == 1) return BigFloat::from_int(0, work_prec_);
        std::lock_guard<std::mutex> lock(mutex_);
        extend_modified_locked(k);
        return nu_[k / 2];
    }

    // Advance the x^k-in-P-basis coefficient vector one step:
    //   c'_n = c_(n-1) + a_(n+1) c_(n+1).
    void extend_plain_locked(int k) const {
        while (moment_index_ < k) {
            std::vector<BigFloat> next(coeffs_.size() + 1, BigFloat::from_int(0, work_prec_));
            for (size_t n = 0; n < next.size(); ++n) {
                BigFloat v = BigFloat::from_int(0, work_prec_);
                if (n >= 1) v = v + coeffs_[n - 1];
                if (n + 1 < coeffs_.size())
                    v = v + fam_.a(static_cast<int>(n) + 1).with_prec(work_prec_) * coeffs_[n + 1];
                next[n] = v;
            }
            coeffs_ = std::move(next);
            ++moment_index_;
            if (moment_index_ % 2 == 0)
                mu_.push_back(coeffs_[0] * mu_[0]);
        }
    }
    void extend_modified_locked(int k) const {
        extend_plain_locked(k);
        while (static_cast<int>(lam_.size()) <= k / 2) {
            int m = static_cast<int>(lam_.size()) * 2;
            lam_.push_back(mu_[m / 2 - 1] - lam_[m / 2 - 1]);
            nu_.push_back(lam_[m / 2 - 1] - nu_[m / 2 - 1]);
        }
    }

    ClassicalFamily<BigFloat> fam_;
    unsigned prec_, work_prec_;
    mutable std::vector<BigFloat> mu_, lam_, nu_;
    mutable std::vector<BigFloat> coeffs_;
    mutable int moment_index_ = 0;
    mutable std::mutex mutex_;
};

// ---------------------------------------------------------------------------
// Biorthogonality functionals.  c^(0)(p) = p'(i), c^(1)(p) = p'(-i),
// c^(j)(p) = mu_tilde(p * psi_(j-2)) for j >= 2 (unnormalized).
// ---------------------------------------------------------------------------
template <class Engine>
typename Engine::value_type biortho_moment(const Engine& eng, int j,
                                           const Polynomial<typename Engine::field_type>& p) {
    if (j < 2) throw ConfigError("biortho_moment handles functionals j >= 2");
    return eng.mu_tilde(p * psi_basis<typename Engine::field_type>(j - 2));
}

// ---------------------------------------------------------------------------
// Delta_k = (-1)^k det [ chat^(m)(x^l) ]_{m,l=0..k-1}, where rows 0 and 1 are
// the derivative functionals and rows m >= 2 are the moment functionals
// normalized by nu0.  Nonvanishing for all k certifies unique solvability of
// the interpolation systems.
// ---------------------------------------------------------------------------
namespace detail {

// Fraction-free Bareiss determinant; Div(num, den) must divide exactly.
template <class E, class IsZero, class Div>
E det_bareiss(std::vector<std::vector<E>> m, const E& one, IsZero is_zero, Div div) {
    const size_t k = m.size();
    if (k == 0) return one;
    int sgn = 1;
    E prev = one;
    for (size_t p = 0; p + 1 < k; ++p) {
        if (is_zero(m[p][p])) {
            size_t swap_row = p + 1;
            while (swap_row < k && is_zero(m[swap_row][p])) ++swap_row;
            if (swap_row == k) {
                return one - one; // zero
            }
            std::swap(m[p], m[swap_row]);
            sgn = -sgn;
        }
        for (size_t i = p + 1; i < k; ++i)
            for (size_t j = p + 1; j < k; ++j)
                m[i][j] = div(m[p][p] * m[i][j] - m[i][p] * m[p][j], prev);
        prev = m[p][p];
    }
    E d = m[k - 1][k - 1];
    return sgn > 0 ? d : (one - one) - d;
}

// Row j applied to the monomial x^l, in the engine's determinant-entry
// algebra: j=0 -> derivative at i, j=1 -> derivative at -i, j>=2 -> the
// nu0-normalized moment functional.
template <class Engine>
typename Engine::delta_entry_type biortho_entry(const Engine& eng, int j, int l) {
    if (j < 0 || l < 0) throw ConfigError("biortho_entry needs j, l >= 0");
    if (j == 0) {
        // d/dx x^l at i: l * i^(l-1)
        ComplexOf<Rational> v = l == 0 ? ComplexOf<Rational>(Rational(0))
                                       : Rational(l) * i_power(l - 1);
        return eng.embed(v);
    }
    if (j == 1) {
        // d/dx x^l at -i: l * (-i)^(l-1) = l * conj(i^(l-1))
        ComplexOf<Rational> v = l == 0 ? ComplexOf<Rational>(Rational(0))
                                       : Rational(l) * i_power(l - 1).conj();
        return eng.embed(v);
    }
    return eng.delta_entry(j, l);
}

template <class Engine>
bool entry_is_zero(const typename Engine::delta_entry_type& e) {
    using E = typename Engine::delta_entry_type;
    if constexpr (std::is_same_v<E, Polynomial<ComplexOf<Rational>>>) {
        return e.degree() < 0;
    } else {
        return e.re.is_zero() && e.im.is_zero();
    }
}

// Determinant over the entry algebra: fraction-free Bareiss for the exact
// engines, pivoted Gaussian elimination for the numeric one.
template <class Engine>
typename Engine::delta_entry_type delta_det(
    const Engine& eng, std::vector<std::vector<typename Engine::delta_entry_type>> m) {
    using E = typename Engine::delta_entry_type;
    E one = eng.embed(ComplexOf<Rational>(Rational(1)));
    if constexpr (Engine::exact) {
        if constexpr (std::is_same_v<E, Polynomial<ComplexOf<Rational>>>) {
            return det_bareiss(
                std::move(m), one, [](const E& e) { return e.degree() < 0; },
                [](const E& num, const E& den) { return exact_divide(num, den); });
        } else {
            return det_bareiss(
                std::move(m), one,
                [](const E& e) { return e.re.is_zero() && e.im.is_zero(); },
                [](const E& num, const E& den) { return num / den; });
        }
    } else {
        // Numeric: plain Gaussian elimination with partial pivoting.
        int sgn = 1;
        const size_t n = m.size();
        for (size_t p = 0; p + 1 < n; ++p) {
            size_t best = p;
            BigFloat best_abs = abs_bigfloat(m[p][p], 64);
            for (size_t r = p + 1; r < n; ++r) {
                BigFloat a = abs_bigfloat(m[r][p], 64);
                if (best_abs < a) { best = r; best_abs = a; }
            }
            if (best != p) { std::swap(m[p], m[best]); sgn = -sgn; }
            if (m[p][p].re.is_zero() && m[p][p].im.is_zero()) return one - one;
            for (size_t r = p + 1; r < n; ++r) {
                E f = m[r][p] / m[p][p];
                for (size_t c = p; c < n; ++c) m[r][c] = m[r][c] - f * m[p][c];
            }
        }
        E d = one;
        for (size_t p = 0; p < n; ++p) d = d * m[p][p];
        return sgn > 0 ? d : one - one - d;
    }
}

// Ratio of two determinant entries, collapsed back to the engine's real
// base field.  Exact engines insist the quotient lands in the field; the
// numeric engine keeps the real part (the imaginary part is roundoff).
template <class Engine>
typename Engine::field_type entry_ratio(const typename Engine::delta_entry_type& num,
                                        const typename Engine::delta_entry_type& den) {
    using F = typename Engine::field_type;
    using E = typename Engine::delta_entry_type;
    if constexpr (std::is_same_v<E, Polynomial<ComplexOf<Rational>>>) {
        E q = exact_divide(num, den);
        if (q.degree() > 0)
            throw FieldError("biorthogonal coefficient does not lie in the base field");
        ComplexOf<Rational> z =
            q.degree() < 0 ? ComplexOf<Rational>(Rational(0)) : q.coeff(0);
        if (!(z.im == Rational(0)))
            throw FieldError("biorthogonal coefficient has a nonzero imaginary part");
        return z.re;
    } else {
        auto q = num / den;
        if constexpr (Engine::exact) {
            if (!scalar_traits<F>::is_zero(q.im))
                throw FieldError("biorthogonal coefficient has a nonzero imaginary part");
        }
        return q.re;
    }
}

} // namespace detail

template <class Engine>
typename Engine::delta_entry_type delta_k(const Engine& eng, int k) {
    using E = typename Engine::delta_entry_type;
    if (k < 1) throw ConfigError("delta_k needs k >= 1");
    std::vector<std::vector<E>> m(k);
    for (int row = 0; row < k; ++row) {
        m[row].reserve(k);
        for (int l = 0; l < k; ++l) m[row].push_back(detail::biortho_entry(eng, row, l));
    }
    E det = detail::delta_det(eng, std::move(m));
    // Delta_k carries the sign (-1)^k.
    if (k % 2 == 1) {
        E one = eng.embed(ComplexOf<Rational>(Rational(1)));
        det = one - one - det;
    }
    return det;
}

// ---------------------------------------------------------------------------
// Full biorthogonality functional, by linearity over biortho_entry: returns
// chat^(j)(p) in the same nu0-normalized units delta_k uses, so a zero here
// is a zero of c^(j)(p) and vice versa.
// ---------------------------------------------------------------------------
template <class Engine>
typename Engine::delta_entry_type biortho_functional(
    const Engine& eng, int j, const Polynomial<typename Engine::field_type>& p) {
    using F = typename Engine::field_type;
    using E = typename Engine::delta_entry_type;
    if (j < 0) throw ConfigError("biortho_functional needs j >= 0");
    E acc = eng.embed(ComplexOf<Rational>(Rational(0)));
    for (int l = 0; l <= p.degree(); ++l) {
        const F& c = p.coeff(l);
        if (scalar_traits<F>::is_zero(c)) continue;
        acc = acc + ComplexOf<F>(c) * detail::biortho_entry(eng, j, l);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Monic degree-k polynomial annihilated by the first k biorthogonality
// functionals.  Built as the cofactor expansion of the moment matrix
// bordered with the monomial row; unique exactly when Delta_k != 0, and a
// vanishing leading cofactor (= +-Delta_k) raises DegenerateError.  The
// numeric engine cannot detect near-singular systems here; callers own the
// Delta_k != 0 precondition there.
// ---------------------------------------------------------------------------
template <class Engine>
Polynomial<typename Engine::field_type> biortho_poly(const Engine& eng, int k) {
    using F = typename Engine::field_type;
    using T = scalar_traits<F>;
    using E = typename Engine::delta_entry_type;
    if (k < 0) throw ConfigError("biortho_poly needs k >= 0");
    if (k == 0) return Polynomial<F>::constant(T::one());
    // Rows j = 0..k-1 applied to columns x^l, l = 0..k.
    std::vector<std::vector<E>> full(k);
    for (int j = 0; j < k; ++j) {
        full[j].reserve(k + 1);
        for (int l = 0; l <= k; ++l) full[j].push_back(detail::biortho_entry(eng, j, l));
    }
    // cof[l] = (-1)^(k+l) * det(matrix with column l removed); the bordered
    // determinant is sum_l cof[l] x^l and its leading coefficient is cof[k].
    std::vector<E> cof;
    cof.reserve(k + 1);
    for (int l = 0; l <= k; ++l) {
        std::vector<std::vector<E>> minor(k);
        for (int j = 0; j < k; ++j) {
            minor[j].reserve(k);
            for (int c = 0; c <= k; ++c)
                if (c != l) minor[j].push_back(full[j][c]);
        }
        E d = detail::delta_det(eng, std::move(minor));
        if ((k + l) % 2 == 1) {
            E one = eng.embed(ComplexOf<Rational>(Rational(1)));
            d = one - one - d;
        }
        cof.push_back(std::move(d));
    }
    if (detail::entry_is_zero<Engine>(cof[k]))
        throw DegenerateError(k, "biortho_poly: Delta_k vanishes at k = " + std::to_string(k));
    std::vector<F> coeffs(static_cast<size_t>(k) + 1, T::zero());
    coeffs[static_cast<size_t>(k)] = T::one();
    for (int l = 0; l < k; ++l)
        coeffs[static_cast<size_t>(l)] = detail::entry_ratio<Engine>(cof[l], cof[k]);
    return Polynomial<F>(std::move(coeffs));
}

} // namespace dekpoly
