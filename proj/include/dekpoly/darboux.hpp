#pragma once

#include "banded.hpp"
#include "christoffel.hpp"

namespace dekpoly {

// Change-of-basis operator A: row n expresses R_n in the source family,
// R_n = P_(n+2) + A_n P_n + B_n P_(n-2)  (row 0: R_0 = P_0; row 1 has no
// P_(-1) term).  Columns clipped at the truncation edge.
template <class Engine>
BandedOperator<typename Engine::field_type> transform_A(const DekFamily<Engine>& fam,
                                                        int size) {
    using F = typename Engine::field_type;
    using T = scalar_traits<F>;
    BandedOperator<F> a(size, 2, 2);
    if (size > 0) a.set(0, 0, T::one());
    for (int n = 1; n < size; ++n) {
        a.set(n, n, fam.A(n));
        if (n + 2 < size) a.set(n, n + 2, T::one());
        if (n >= 2) a.set(n, n - 2, fam.B(n));
    }
    return a;
}

// Inverse-direction operator B: row n expresses the multiplied kernel
// polynomials back in the constructed family,
//   phi P_n = R_(n+2) + u_n R_n + v_n R_(n-2),   phi = (x^2+1)^2,
// with u_n = c_(n+1)/c_n + rho_n and v_n = rho_n c_(n-1)/c_(n-2).
template <class Engine>
BandedOperator<typename Engine::field_type> transform_B(const Christoffel<Engine>& chr,
                                                        int size) {
    using F = typename Engine::field_type;
    using T = scalar_traits<F>;
    BandedOperator<F> b(size, 2, 2);
    for (int n = 0; n < size; ++n) {
        F rho_n = chr.rho(n);
        b.set(n, n, chr.c_ratio(n) + rho_n);
        if (n + 2 < size) b.set(n, n + 2, T::one());
        if (n >= 2) b.set(n, n - 2, rho_n * chr.c_ratio(n - 2));
    }
    return b;
}

// Outcome of the discrete Darboux factorization check at one truncation size.
struct FactorizationReport {
    int block = 0;        // compared block size N (operators built at N+4)
    bool ba_matches = false;   // leading block of BA equals that of (J^2+I)^2
    bool ab_matches = false;   // (AB R)_n == phi R_n for n < N
    bool band_ok = false;      // BA stays inside offsets [-4, +4]
    BigFloat ba_worst, ab_worst; // entrywise / coefficientwise residuals
    bool ok = false;
};

// Verifies that A and B factor the squared shifted Jacobi operator:
// B A = (J^2 + I)^2 and A B acts as multiplication by phi on the
// constructed family.  Operators are built at size N+4 so the clipped
// bottom rows never touch the compared block.
template <class Engine>
FactorizationReport verify_factorization(const Christoffel<Engine>& chr, int block,
                                         BigFloat tol = BigFloat::from_int(0, 64),
                                         unsigned report_prec = 128) {
    using F = typename Engine::field_type;
    const DekFamily<Engine>& fam = chr.family();
    const int size = block + 4;

    BandedOperator<F> a = transform_A(fam, size);
    BandedOperator<F> b = transform_B(chr, size);
    BandedOperator<F> j = jacobi_operator(fam.source(), size);
    BandedOperator<F> ident = BandedOperator<F>::identity(size);

    BandedOperator<F> ba = b * a;
    BandedOperator<F> jsq = j * j + ident;
    BandedOperator<F> target = jsq * jsq;

    FactorizationReport rep;
    rep.block = block;
    rep.ba_worst = block_max_diff(ba, target, block, report_prec);
    rep.ba_matches = Engine::exact ? block_equal(ba, target, block)
                                   : !(tol < rep.ba_worst);

    // The compared block of BA may only occupy offsets -4..+4.
    rep.band_ok = true;
    for (int n = 0; n < block && rep.band_ok; ++n)
        for (const auto& [m, v] : ba.row(n))
            if (m < n - 4 || m > n + 4) { rep.band_ok = false; break; }

    BandedOperator<F> ab = a * b;
    std::vector<Polynomial<F>> rvec;
    rvec.reserve(size);
    for (int n = 0; n < size; ++n) rvec.push_back(fam.R(n));
    std::vector<Polynomial<F>> image = ab.apply(rvec);
    Polynomial<F> phi = phi_multiplier<F>();

    rep.ab_worst = BigFloat::from_int(0, report_prec);
    bool ab_exact_ok = true;
    for (int n = 0; n < block; ++n) {
        Polynomial<F> diff = image[n] - phi * rvec[n];
        if (!(diff == Polynomial<F>())) ab_exact_ok = false;
        BigFloat d = coeff_scale(diff, report_prec);
        if (rep.ab_worst < d) rep.ab_worst = d;
    }
    rep.ab_matches = Engine::exact ? ab_exact_ok : !(tol < rep.ab_worst);

    rep.ok = rep.ba_matches && rep.ab_matches && rep.band_ok;
    return rep;
}

// Expands psi * R_n in the constructed family:  psi R_n = sum_m coeff[m] R_m.
// Requires psi'(+-i) = 0 (otherwise the product leaves the span of the R_m
// and the expansion does not exist); psi need not be monic.  The returned
// support lies inside [n - deg psi, n + deg psi].
//
// The expansion solves a triangular system against the degree-complete chain
// {R_0, x, x^2, R_1, R_2, ...}: each element is monic of a distinct degree
// (deg R_m = m+2 skips degrees 1 and 2, which the two monomials fill), so
// peeling the leading coefficient at each degree is exact.  Admissible psi
// must leave the x and x^2 coordinates at zero; that is asserted, not assumed.
template <class Engine>
std::map<int, typename Engine::field_type> general_recurrence(
    const DekFamily<Engine>& fam, const Polynomial<typename Engine::field_type>& psi,
    int n) {
    using F = typename Engine::field_type;
    using T = scalar_traits<F>;
    if (n < 0) throw ConfigError("family index must be nonnegative");
    if (psi == Polynomial<F>()) throw InvalidPsiError("zero multiplier");

    // Admissibility: the derivative must vanish at i (real coefficients make
    // the conjugate point automatic; we check both anyway for clarity).
    Polynomial<F> dpsi = derivative(psi);
    BigFloat zero_tol = BigFloat::from_int(0, 64);
    if constexpr (!Engine::exact) {
        long prec = fam.engine().precision();
        BigFloat scale = coeff_scale(psi, prec);
        BigFloat one = BigFloat::from_int(1, prec);
        if (scale < one) scale = one;
        zero_tol = ldexp2(scale, -prec / 2);
    }
    auto near_zero = [&](const ComplexOf<F>& z) {
        if constexpr (Engine::exact)
            return T::is_zero(z.re) && T::is_zero(z.im);
        else
            return !(zero_tol < abs_bigfloat(z, 128));
    };
    if (!near_zero(eval_at_i(dpsi)) || !near_zero(eval_at_minus_i(dpsi)))
        throw InvalidPsiError("multiplier derivative does not vanish at +-i");

    const int k = psi.degree();
    Polynomial<F> rem = psi * fam.R(n);
    // Coordinates against the degree-complete chain, indexed by degree.
    std::map<int, F> by_degree;
    while (rem.degree() >= 0) {
        int d = rem.degree();
        F c = rem.coeff(d);
        Polynomial<F> basis;
        if (d == 1)
            basis = Polynomial<F>::x();
        else if (d == 2)
            basis = Polynomial<F>::monomial(2, T::one());
        else
            basis = fam.R(d == 0 ? 0 : d - 2);
        rem = rem - c * basis;
        by_degree[d] = std::move(c);
        if (rem.degree() >= d)
            throw FieldError("degree did not drop while peeling the expansion");
    }

    auto small = [&](const F& c) {
        if constexpr (Engine::exact)
            return T::is_zero(c);
        else
            return !(zero_tol < abs_bigfloat(c, 128));
    };

    std::map<int, F> coeffs;
    for (auto& [d, c] : by_degree) {
        if (d == 1 || d == 2) {
            if (!small(c))
                throw InvalidPsiError(
                    "product left the constructed span (x or x^2 coordinate "
                    "survived); multiplier is not admissible");
            continue;
        }
        int m = d == 0 ? 0 : d - 2;
        if (m < n - k || m > n + k) {
            if (!small(c))
                throw FieldError("expansion escaped the banded support window");
            continue;
        }
        if (!T::is_zero(c)) coeffs[m] = std::move(c);
    }
    return coeffs;
}

} // namespace dekpoly
