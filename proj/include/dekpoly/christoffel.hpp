#pragma once

#include "dekcore.hpp"

namespace dekpoly {

// phi(x) = (x^2 + 1)^2, the multiplier connecting the two measures:
// phi * mu_tilde = mu.
template <class F>
Polynomial<F> phi_multiplier() {
    using T = scalar_traits<F>;
    return Polynomial<F>::monomial(4, T::one()) +
           Polynomial<F>::monomial(2, T::from_int(2)) +
           Polynomial<F>::constant(T::one());
}

// ---------------------------------------------------------------------------
// The modified Christoffel transform.  From the family R_n:
//   c_n = | R_n(i)  R_(n+1)(i) ; R_n(-i)  R_(n+1)(-i) |   (never zero)
//   S_n = (1 / (c_n phi)) * | R_n(i)  R_(n+1)(i)  R_(n+2)(i)
//                             R_n(-i) R_(n+1)(-i) R_(n+2)(-i)
//                             R_n(x)  R_(n+1)(x)  R_(n+2)(x) |
// which reduces to phi S_n = (c_(n+1)/c_n) R_n + R_(n+2) because the middle
// bottom-row cofactor vanishes by parity.  The inverse transform recovers the
// source family: P_n = S_n + rho_n S_(n-2) with
//   rho_n = -mu(w S_n) / mu(w S_(n-2)),  w = x (odd n), x^2 (even n), n >= 3,
// and rho_1 = rho_2 = 0.  S itself fails to be an OPS; check_S_not_OPS finds
// the first index witnessing that failure.
// ---------------------------------------------------------------------------
template <class Engine>
class Christoffel {
public:
    using F = typename Engine::field_type;
    using V = typename Engine::value_type;
    using C = ComplexOf<F>;

    explicit Christoffel(const DekFamily<Engine>& fam) : fam_(fam) {}

    const DekFamily<Engine>& family() const { return fam_; }

    // c_n; purely imaginary and nonzero for every n.
    C c(int n) const {
        if (n < 0) throw ConfigError("christoffel index must be nonnegative");
        C zn = eval_at_i(fam_.R(n));
        C zn1 = eval_at_i(fam_.R(n + 1));
        C wn = eval_at_minus_i(fam_.R(n));
        C wn1 = eval_at_minus_i(fam_.R(n + 1));
        return zn * wn1 - zn1 * wn;
    }

    // The middle bottom-row cofactor b_n = | R_n(i) R_(n+2)(i) ; R_n(-i) R_(n+2)(-i) |;
    // identically zero because R_n and R_(n+2) share parity.
    C middle_cofactor(int n) const {
        C zn = eval_at_i(fam_.R(n));
        C zn2 = eval_at_i(fam_.R(n + 2));
        C wn = eval_at_minus_i(fam_.R(n));
        C wn2 = eval_at_minus_i(fam_.R(n + 2));
        return zn * wn2 - zn2 * wn;
    }

    // c_(n+1)/c_n as a real scalar (the ratio of two purely imaginary values).
    F c_ratio(int n) const {
        C cn = c(n);
        if (scalar_traits<F>::is_zero(cn.re) && scalar_traits<F>::is_zero(cn.im))
            throw DegenerateError(n, "c_n vanished: the transform is inconsistent");
        C q = c(n + 1) / cn;
        if constexpr (Engine::exact) {
            if (!scalar_traits<F>::is_zero(q.im))
                throw FieldError("c_(n+1)/c_n is not real");
        }
        return q.re;
    }

    // S_n by the determinant route, cross-checked against the reduced form.
    Polynomial<F> S(int n) const {
        if (n < 0) throw ConfigError("transform index must be nonnegative");
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<int>(s_.size()) <= n) s_.push_back(compute_S(static_cast<int>(s_.size())));
        return s_[n];
    }

    F rho(int n) const {
        if (n < 0) throw ConfigError("rho_n is defined for n >= 0");
        if (n <= 2) return scalar_traits<F>::zero();
        Polynomial<F> w = n % 2 == 1 ? Polynomial<F>::x()
                                     : Polynomial<F>::monomial(2, scalar_traits<F>::one());
        const Engine& eng = fam_.engine();
        V num = eng.mu_plain(w * S(n));
        V den = eng.mu_plain(w * S(n - 2));
        try {
            return eng.ratio(-num, den);
        } catch (const DegenerateError&) {
            throw DegenerateError(n, "rho_n denominator vanished at n = " + std::to_string(n));
        }
    }

    // Inverse transform: S_n + rho_n S_(n-2); equals the source P_n.
    Polynomial<F> recover_P(int n) const {
        if (n < 0) throw ConfigError("index must be nonnegative");
        if (n < 2) return S(n);
        return S(n) + rho(n) * S(n - 2);
    }

    // Plain-measure pairing <S_n, R_m>_mu; zero unless m = n or m = n+2.
    V s_r_pairing(int n, int m) const { return fam_.engine().mu_plain(S(n) * fam_.R(m)); }

    // The classical Christoffel coefficient: 4x4 determinant whose second and
    // fourth rows are R'_k(+-i) — identically zero, which is exactly why the
    // classical transform formula collapses for this family.
    C classical_C(int n) const {
        std::vector<std::vector<C>> m(4, std::vector<C>());
        for (int col = 0; col < 4; ++col) {
            Polynomial<F> r = fam_.R(n + col);
            m[0].push_back(eval_at_i(r));
            m[1].push_back(deriv_at_i(r));
            m[2].push_back(eval_at_minus_i(r));
            m[3].push_back(deriv_at_minus_i(r));
        }
        C one(scalar_traits<F>::one());
        return detail::det_bareiss(
            std::move(m), one,
            [](const C& z) {
                return scalar_traits<F>::is_zero(z.re) && scalar_traits<F>::is_zero(z.im);
            },
            [](const C& num, const C& den) { return num / den; });
    }

    // First n >= 1 where x S_n = S_(n+1) + alpha_n S_n + beta_n S_(n-1) has no
    // solution (coefficient matching; alpha from degree n, beta from degree n-1,
    // the rest must then vanish).  first_inconsistent = -1 means consistent
    // throughout the scanned range.
    struct SOpsWitness {
        int first_inconsistent = -1;
        std::string residual;
    };

    SOpsWitness check_S_not_OPS(int max_n, const BigFloat& tol = BigFloat::from_int(0, 64)) const {
        SOpsWitness w;
        for (int n = 1; n <= max_n; ++n) {
            Polynomial<F> lhs = Polynomial<F>::x() * S(n) - S(n + 1);
            F alpha = lhs.coeff(n);
            Polynomial<F> rem = lhs - alpha * S(n);
            F beta = rem.coeff(n - 1);
            Polynomial<F> resid = rem - beta * S(n - 1);
            bool bad;
            if constexpr (Engine::exact) {
                bad = resid.degree() >= 0;
            } else {
                BigFloat mag = BigFloat::from_int(0, 64);
                for (int k = 0; k <= resid.degree(); ++k) {
                    BigFloat a = abs_bigfloat(resid.coeff(k), 128);
                    if (mag < a) mag = a;
                }
                bad = !(mag <= tol);
            }
            if (bad) {
                w.first_inconsistent = n;
                BigFloat mag = BigFloat::from_int(0, 64);
                for (int k = 0; k <= resid.degree(); ++k) {
                    BigFloat a = abs_bigfloat(resid.coeff(k), 128);
                    if (mag < a) mag = a;
                }
                w.residual = mag.to_string(6);
                return w;
            }
        }
        return w;
    }

private:
    Polynomial<F> compute_S(int n) const {
        using T = scalar_traits<F>;
        C cn = c(n);
        if (T::is_zero(cn.re) && T::is_zero(cn.im))
            throw DegenerateError(n, "c_n vanished: the transform is inconsistent");
        C cn1 = c(n + 1);
        C bn = middle_cofactor(n);
        verify_middle_cofactor(bn);

        // Determinant route: expand along the bottom row and divide by c_n phi.
        Polynomial<C> det = complexify(fam_.R(n)) * cn1 - complexify(fam_.R(n + 1)) * bn +
                            complexify(fam_.R(n + 2)) * cn;
        C inv_cn = C(T::one()) / cn;
        Polynomial<C> quot = det * inv_cn;
        Polynomial<F> real_quot = realify(quot);
        Polynomial<F> s_det = exact_divide(real_quot, phi_multiplier<F>());

        // Reduced route: phi S_n = (c_(n+1)/c_n) R_n + R_(n+2).
        Polynomial<F> s_red = exact_divide(c_ratio(n) * fam_.R(n) + fam_.R(n + 2),
                                           phi_multiplier<F>());
        verify_same(s_det, s_red);
        return s_det;
    }

    void verify_middle_cofactor(const C& bn) const {
        using T = scalar_traits<F>;
        if constexpr (Engine::exact) {
            if (!T::is_zero(bn.re) || !T::is_zero(bn.im))
                throw FieldError("middle cofactor b_n is nonzero: parity violated");
        } else {
            // The two products cancel exactly even in floating point; anything
            // else signals a real defect, not roundoff.
            if (!bn.re.is_zero() || !bn.im.is_zero())
                throw FieldError("middle cofactor b_n is nonzero: parity violated");
        }
    }

    static Polynomial<F> realify(const Polynomial<C>& p) {
        using T = scalar_traits<F>;
        std::vector<F> re;
        for (int k = 0; k <= p.degree(); ++k) {
            C z = p.coeff(k);
            if constexpr (Engine::exact) {
                if (!T::is_zero(z.im))
                    throw FieldError("transform polynomial acquired an imaginary part");
            }
            re.push_back(z.re);
        }
        return Polynomial<F>(std::move(re));
    }

    void verify_same(const Polynomial<F>& a, const Polynomial<F>& b) const {
        if constexpr (Engine::exact) {
            if (!(a == b))
                throw FieldError("determinant and reduced transform routes disagree");
        } else {
            int deg = a.degree() > b.degree() ? a.degree() : b.degree();
            BigFloat scale = BigFloat::from_int(1, 128);
            for (int k = 0; k <= deg; ++k) {
                BigFloat m = abs_bigfloat(a.coeff(k), 128);
                if (scale < m) scale = m;
            }
            unsigned prec = fam_.engine().precision();
            BigFloat tol = ldexp2(scale, -static_cast<long>(prec / 2));
            for (int k = 0; k <= deg; ++k) {
                BigFloat d = abs_bigfloat(a.coeff(k) - b.coeff(k), 128);
                if (!(d <= tol))
                    throw FieldError("determinant and reduced transform routes disagree "
                                     "beyond tolerance");
            }
        }
    }

    const DekFamily<Engine>& fam_;
    mutable std::vector<Polynomial<F>> s_;
    mutable std::mutex mutex_;
};

} // namespace dekpoly
