#pragma once

#include <string>
#include <vector>

#include "moments.hpp"

namespace dekpoly {

// ---------------------------------------------------------------------------
// The exceptional family attached to a symmetric classical family P_n and a
// moment engine for mu (plain) / mu_tilde (divided by (1+x^2)^2):
//   R_0 = 1,  R_1 = x^3 + 3x,  and for n >= 2
//   R_n = P_(n+2) + A_n P_n + B_n P_(n-2)
// determined by the two linear conditions
//   R_n'(i) = 0   (one real equation by parity)
//   mu_tilde(R_n * w) = 0,  w = 1 for even n, w = x^3 + 3x for odd n.
// Degrees run {0, 3, 4, 5, ...}: degrees 1 and 2 are absent by design.
// ---------------------------------------------------------------------------
template <class Engine>
class DekFamily {
public:
    using F = typename Engine::field_type;
    using V = typename Engine::value_type;

    DekFamily(ClassicalFamily<F> fam, Engine eng)
        : fam_(fam), eng_(eng) {
        using T = scalar_traits<F>;
        R_.push_back(Polynomial<F>::constant(T::one()));
        R_.push_back(psi_basis<F>(1)); // x^3 + 3x, forced by the constraints
        // R_1 = P_3 + A_1 P_1 with P_3 = x^3 - (a_1+a_2) x, so A_1 = 3 + a_1 + a_2;
        // B_1 is not pinned down by degree 1 (P_{-1} does not exist): convention B_1 = 0.
        A_.push_back(T::from_int(3) + fam_.a(1) + fam_.a(2));
        B_.push_back(T::zero());
    }

    DekFamily(const DekFamily& other) : fam_(other.fam_), eng_(other.eng_) {
        std::lock_guard<std::mutex> lock(other.mutex_);
        R_ = other.R_;
        A_ = other.A_;
        B_ = other.B_;
    }
    DekFamily& operator=(const DekFamily&) = delete;

    const ClassicalFamily<F>& source() const { return fam_; }
    const Engine& engine() const { return eng_; }

    Polynomial<F> R(int n) const {
        if (n < 0) throw ConfigError("family index must be nonnegative");
        std::lock_guard<std::mutex> lock(mutex_);
        build_locked(n);
        return R_[n];
    }

    // Mixing coefficients, defined for n >= 1 (B_1 = 0 by convention).
    F A(int n) const {
        if (n < 1) throw ConfigError("A_n is defined for n >= 1");
        std::lock_guard<std::mutex> lock(mutex_);
        build_locked(n);
        return A_[n - 1];
    }
    F B(int n) const {
        if (n < 1) throw ConfigError("B_n is defined for n >= 1");
        std::lock_guard<std::mutex> lock(mutex_);
        build_locked(n);
        return B_[n - 1];
    }

    V norm_sq(int n) const {
        Polynomial<F> r = R(n);
        return eng_.mu_tilde(r * r);
    }
    V pair(int m, int n) const { return eng_.mu_tilde(R(m) * R(n)); }

private:
    // Parity-resolved derivative condition: for the relevant parity one
    // component of P'(i) is identically zero, the other carries the equation.
    static F deriv_component(const Polynomial<F>& p, bool even_n) {
        ComplexOf<F> z = deriv_at_i(p);
        return even_n ? z.im : z.re;
    }

    void build_locked(int n) const {
        while (static_cast<int>(R_.size()) <= n) {
            int m = static_cast<int>(R_.size());
            bool even = (m % 2 == 0);
            Polynomial<F> p2 = fam_.P(m + 2);
            Polynomial<F> p0 = fam_.P(m);
            Polynomial<F> pm = fam_.P(m - 2);
            F u2 = deriv_component(p2, even);
            F u0 = deriv_component(p0, even);
            F um = deriv_component(pm, even);
            Polynomial<F> w = even ? psi_basis<F>(0) : psi_basis<F>(1);
            V t2 = eng_.mu_tilde(p2 * w);
            V t0 = eng_.mu_tilde(p0 * w);
            V tm = eng_.mu_tilde(pm * w);
            V den = u0 * tm - um * t0;
            V num_a = um * t2 - u2 * tm;
            V num_b = u2 * t0 - u0 * t2;
            F a, b;
            try {
                a = eng_.ratio(num_a, den);
                b = eng_.ratio(num_b, den);
            } catch (const DegenerateError& e) {
                throw DegenerateError(m, "family construction degenerates at index " +
                                             std::to_string(m) + ": " + e.what());
            }
            R_.push_back(p2 + a * p0 + b * pm);
            A_.push_back(a);
            B_.push_back(b);
        }
    }

    ClassicalFamily<F> fam_;
    Engine eng_;
    mutable std::vector<Polynomial<F>> R_;
    mutable std::vector<F> A_, B_;
    mutable std::mutex mutex_;
};

// Convenience builders for the two concrete instances.
inline DekFamily<GaussExactMoments> make_gauss_exact_family() {
    return DekFamily<GaussExactMoments>(ClassicalFamily<Rational>::hermite(),
                                        GaussExactMoments());
}
inline DekFamily<ChebExactMoments> make_cheb_exact_family() {
    return DekFamily<ChebExactMoments>(ClassicalFamily<QuadExt>::chebyshev1(),
                                       ChebExactMoments());
}
inline DekFamily<NumericMomentEngine> make_gauss_numeric_family(unsigned prec) {
    return DekFamily<NumericMomentEngine>(ClassicalFamily<BigFloat>::hermite(),
                                          NumericMomentEngine::gaussian(prec));
}
// Chebyshev base constants: mu_0 = pi, lambda_0 = pi/sqrt(2),
// nu_0 = 3 sqrt(2) pi / 8 (the weight 1/sqrt(1-x^2) against 1/(1+x^2)^j).
inline DekFamily<NumericMomentEngine> make_cheb_numeric_family(unsigned prec) {
    unsigned wp = prec + 64;
    BigFloat pi = BigFloat::pi(wp);
    BigFloat sqrt2 = sqrt(BigFloat::from_int(2, wp));
    BigFloat lam0 = pi / sqrt2;
    BigFloat nu0 = BigFloat::from_rational(Rational(3, 8), wp) * sqrt2 * pi;
    return DekFamily<NumericMomentEngine>(
        ClassicalFamily<BigFloat>::chebyshev1(),
        NumericMomentEngine(ClassicalFamily<BigFloat>::chebyshev1(), pi, lam0, nu0, prec));
}

// ---------------------------------------------------------------------------
// Closed forms for the Gaussian instance (probabilists' Hermite He_n).
// All three agree for n >= 1; R_0 = 1.
// ---------------------------------------------------------------------------

// He_(n+2) + 2(n+2) He_n + (n+2)(n-1) He_(n-2)
inline Polynomial<Rational> gauss_dek_closed_form(int n) {
    auto H = ClassicalFamily<Rational>::hermite();
    if (n == 0) return Polynomial<Rational>::constant(Rational(1));
    Polynomial<Rational> r = H.P(n + 2) + Rational(2 * (n + 2)) * H.P(n);
    if (n >= 2) r = r + Rational((n + 2) * (n - 1)) * H.P(n - 2);
    return r;
}

// ((x^2+1) He''_(n+2) - 2x He'_(n+2) + 2 He_(n+2)) / (n(n+1)),
// the expanded 3x3 determinant with rows (x, x^2-1, He), (1, 2x, He'), (0, 2, He'').
inline Polynomial<Rational> gauss_dek_wronskian_form(int n) {
    if (n < 1) throw ConfigError("wronskian form needs n >= 1");
    auto H = ClassicalFamily<Rational>::hermite();
    Polynomial<Rational> he = H.P(n + 2);
    Polynomial<Rational> d1 = derivative(he);
    Polynomial<Rational> d2 = derivative(d1);
    Polynomial<Rational> xsq1 =
        Polynomial<Rational>::monomial(2, Rational(1)) + Polynomial<Rational>::constant(Rational(1));
    Polynomial<Rational> det = xsq1 * d2 - Rational(2) * Polynomial<Rational>::x() * d1 +
                               Rational(2) * he;
    return Rational(1, n * (n + 1)) * det;
}

// (x^3 + 3x) He_(n-1) - (n-1)(x^2+1) He_(n-2)
inline Polynomial<Rational> gauss_dek_product_form(int n) {
    if (n < 1) throw ConfigError("product form needs n >= 1");
    auto H = ClassicalFamily<Rational>::hermite();
    Polynomial<Rational> r = psi_basis<Rational>(1) * H.P(n - 1);
    if (n >= 2) {
        Polynomial<Rational> xsq1 = Polynomial<Rational>::monomial(2, Rational(1)) +
                                    Polynomial<Rational>::constant(Rational(1));
        r = r - Rational(n - 1) * xsq1 * H.P(n - 2);
    }
    return r;
}

// Exact squared norms of the Gaussian instance, as multiples of sqrt(2 pi):
// n = 0: 1/2,  n = 1: 3,  n >= 2: (n+2)(n-1)(n-2)!.
inline Rational gauss_dek_norm_factor(int n) {
    if (n < 0) throw ConfigError("norm index must be nonnegative");
    if (n == 0) return Rational(1, 2);
    if (n == 1) return Rational(3);
    return Rational((n + 2) * (n - 1)) * Rational(factorial(n - 2));
}

// ---------------------------------------------------------------------------
// Identity sweep over the family: structure, derivative constraints,
// orthogonality, nonvanishing norms.  Exact engines demand exact zeros;
// numeric engines compare against tol (absolute for derivative values,
// relative to the geometric mean of norms for orthogonality).
// ---------------------------------------------------------------------------
struct CheckResult {
    std::string name;
    bool ok = true;
    std::string worst;   // magnitude of the worst residual, decimal string
    int at_n = -1, at_m = -1;
};

struct VerifyReport {
    int max_n = 0;
    bool ok = true;
    std::vector<CheckResult> checks;

    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

namespace detail {

inline void fold_residual(CheckResult& c, const BigFloat& mag, bool pass, int n, int m) {
    if (c.worst.empty() || !(mag < BigFloat::from_string(c.worst, 128))) {
        c.worst = mag.to_string(6);
        c.at_n = n;
        c.at_m = m;
    }
    if (!pass) c.ok = false;
}

} // namespace detail

template <class Engine>
VerifyReport dek_verify(const DekFamily<Engine>& fam, int max_n,
                        const BigFloat& tol = BigFloat::from_int(0, 64)) {
    using F = typename Engine::field_type;
    constexpr unsigned report_prec = 128;
    VerifyReport rep;
    rep.max_n = max_n;
    CheckResult structure{"structure", true, "0", -1, -1};
    CheckResult deriv{"derivative-constraint", true, "", -1, -1};
    CheckResult ortho{"orthogonality", true, "", -1, -1};
    CheckResult norms{"norm-nonzero", true, "", -1, -1};

    std::vector<BigFloat> norm_mag;
    const Engine& eng = fam.engine();

    for (int n = 0; n <= max_n; ++n) {
        Polynomial<F> r = fam.R(n);
        int want_deg = n == 0 ? 0 : n + 2;
        bool st = r.degree() == want_deg && r.is_monic() &&
                  r.parity() == (n % 2 == 0 ? Parity::even : Parity::odd);
        if (!st) {
            structure.ok = false;
            structure.at_n = n;
        }

        ComplexOf<F> dp = deriv_at_i(r);
        ComplexOf<F> dm = deriv_at_minus_i(r);
        BigFloat mag = abs_bigfloat(dp, report_prec) + abs_bigfloat(dm, report_prec);
        bool pass;
        if constexpr (Engine::exact) {
            pass = scalar_traits<F>::is_zero(dp.re) && scalar_traits<F>::is_zero(dp.im) &&
                   scalar_traits<F>::is_zero(dm.re) && scalar_traits<F>::is_zero(dm.im);
        } else {
            pass = mag <= tol;
        }
        detail::fold_residual(deriv, mag, pass, n, -1);

        auto nv = fam.norm_sq(n);
        BigFloat nmag = abs(eng.value_numeric(nv, report_prec));
        norm_mag.push_back(nmag);
        bool npass;
        if constexpr (Engine::exact) {
            npass = !eng.value_exact_zero(nv);
        } else {
            npass = nmag > tol;
        }
        if (!npass) {
            norms.ok = false;
            norms.at_n = n;
            norms.worst = nmag.to_string(6);
        }

        for (int m = 0; m < n; ++m) {
            auto pv = fam.pair(m, n);
            BigFloat pmag = abs(eng.value_numeric(pv, report_prec));
            bool ppass;
            if constexpr (Engine::exact) {
                ppass = eng.value_exact_zero(pv);
            } else {
                BigFloat scale = sqrt(norm_mag[m] * norm_mag[n]);
                ppass = pmag <= tol * scale;
            }
            // store the relative magnitude for numeric engines
            BigFloat rel = pmag;
            if constexpr (!Engine::exact) rel = pmag / sqrt(norm_mag[m] * norm_mag[n]);
            detail::fold_residual(ortho, rel, ppass, n, m);
        }
    }
    if (norms.worst.empty()) norms.worst = "0";
    if (deriv.worst.empty()) deriv.worst = "0";
    if (ortho.worst.empty()) ortho.worst = "0";

    rep.checks = {structure, deriv, ortho, norms};
    rep.ok = structure.ok && deriv.ok && ortho.ok && norms.ok;
    return rep;
}

} // namespace dekpoly
