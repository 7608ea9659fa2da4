#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "christoffel.hpp"
#include "poly_gcd.hpp"

namespace dekpoly {

enum class RootMethod { companion, aberth, exact_gcd };

inline std::string root_method_name(RootMethod m) {
    switch (m) {
        case RootMethod::companion: return "companion";
        case RootMethod::aberth: return "aberth";
        case RootMethod::exact_gcd: return "exact_gcd";
    }
    return "?";
}

// Distinct roots of one polynomial with multiplicities.  Sum of
// multiplicities equals the degree; roots are sorted by (re, im).
struct ZeroSet {
    std::string family;   // context stamp, e.g. "hermite"; may be empty
    char kind = 'P';      // 'R' / 'S' for family polynomials, 'P' ad hoc
    int n = -1;           // family index when kind is R or S
    std::vector<ComplexOf<BigFloat>> roots;
    std::vector<int> multiplicities;
    RootMethod method = RootMethod::aberth;
    long precision_bits = 0;
    bool cluster_fallback = false; // multiplicities from clustering, not gcd

    int total_multiplicity() const {
        int t = 0;
        for (int m : multiplicities) t += m;
        return t;
    }
    std::vector<BigFloat> real_roots() const {
        std::vector<BigFloat> out;
        for (const auto& z : roots)
            if (z.im.is_zero()) out.push_back(z.re);
        return out;
    }
};

namespace detail {

using CBF = ComplexOf<BigFloat>;

inline BigFloat cabs(const CBF& z, long prec) {
    return sqrt((z.re * z.re + z.im * z.im).with_prec(prec));
}

// Value and derivative in one Horner pass.
inline std::pair<CBF, CBF> horner2(const std::vector<CBF>& c, const CBF& z) {
    CBF v(BigFloat::from_int(0, z.re.prec()));
    CBF d = v;
    for (size_t k = c.size(); k-- > 0;) {
        d = d * z + v;
        v = v * z + c[k];
    }
    return {v, d};
}

// Deterministic Aberth-Ehrlich sweep for a polynomial expected square-free.
// Starting points sit on the Cauchy-bound circle at asymmetric angles (no
// start lies on the real axis, which avoids symmetric stalls); updates are
// in fixed index order, so runs are reproducible bit for bit.
inline std::vector<CBF> aberth_simple(const Polynomial<BigFloat>& p, long prec,
                                      bool require_converged) {
    const int d = p.degree();
    const long wp = prec + 64 + 4 * d;
    std::vector<CBF> c;
    c.reserve(d + 1);
    for (int k = 0; k <= d; ++k) c.emplace_back(p.coeff(k).with_prec(wp));

    std::vector<CBF> z(d);
    if (d == 1) {
        z[0] = (-c[0]) / c[1];
        return z;
    }

    BigFloat lead = cabs(c[d], wp);
    BigFloat radius = BigFloat::from_int(1, wp);
    for (int k = 0; k < d; ++k) {
        BigFloat b = BigFloat::from_int(1, wp) + cabs(c[k], wp) / lead;
        if (radius < b) radius = b;
    }
    BigFloat two_pi = ldexp2(BigFloat::pi(wp), 1);
    BigFloat offset = BigFloat::pi(wp) * BigFloat::from_int(3, wp) /
                      BigFloat::from_int(2 * d, wp);
    for (int k = 0; k < d; ++k) {
        BigFloat theta = two_pi * BigFloat::from_int(k, wp) / BigFloat::from_int(d, wp) + offset;
        z[k] = CBF(radius * cos(theta), radius * sin(theta));
    }

    const BigFloat one = BigFloat::from_int(1, wp);
    const BigFloat step_tol = ldexp2(one, -(prec + 16));
    const int max_iter = 200 + 10 * d;
    int it = 0;
    std::vector<bool> done(d, false);
    for (; it < max_iter; ++it) {
        bool all_small = true;
        for (int k = 0; k < d; ++k) {
            if (done[k]) continue;
            auto [v, dv] = horner2(c, z[k]);
            if (v.re.is_zero() && v.im.is_zero()) { done[k] = true; continue; }
            CBF w;
            if (dv.re.is_zero() && dv.im.is_zero()) {
                // Exactly critical start: nudge deterministically.
                z[k] = z[k] + CBF(ldexp2(one, -8), ldexp2(one, -9));
                all_small = false;
                continue;
            }
            w = v / dv;
            CBF sum(BigFloat::from_int(0, wp));
            for (int j = 0; j < d; ++j) {
                if (j == k) continue;
                CBF diff = z[k] - z[j];
                sum = sum + CBF(one) / diff;
            }
            CBF denom = CBF(one) - w * sum;
            CBF delta = (denom.re.is_zero() && denom.im.is_zero()) ? w : w / denom;
            z[k] = z[k] - delta;
            BigFloat zs = cabs(z[k], wp);
            if (zs < one) zs = one;
            BigFloat ds = cabs(delta, wp);
            if (ds <= step_tol * zs) done[k] = true;
            else all_small = false;
        }
        if (all_small) break;
    }

    // Newton polish against the same coefficients.
    for (int k = 0; k < d; ++k)
        for (int pass = 0; pass < 3; ++pass) {
            auto [v, dv] = horner2(c, z[k]);
            if ((v.re.is_zero() && v.im.is_zero()) || (dv.re.is_zero() && dv.im.is_zero()))
                break;
            z[k] = z[k] - v / dv;
        }

    if (require_converged && it >= max_iter) {
        BigFloat worst(wp);
        for (int k = 0; k < d; ++k) {
            BigFloat r = cabs(horner2(c, z[k]).first, wp);
            if (worst < r) worst = r;
        }
        throw ConvergenceError("root iteration hit the cap (" + std::to_string(max_iter) +
                               " sweeps, degree " + std::to_string(d) +
                               ", worst residual " + worst.to_string(3) + ")");
    }
    return z;
}

// Roots of a real-coefficient polynomial at working precision; exact zero
// roots are deflated first, degree <= 2 is closed form, the rest is Aberth.
inline std::vector<CBF> roots_of(const Polynomial<BigFloat>& p, long prec,
                                 bool require_converged = true) {
    if (p.degree() < 1) return {};
    const long wp = prec + 64 + 4 * p.degree();
    std::vector<BigFloat> c = p.coeffs();
    std::vector<CBF> out;
    size_t shift = 0;
    while (shift + 1 < c.size() && c[shift].is_zero()) ++shift;
    for (size_t s = 0; s < shift; ++s)
        out.emplace_back(BigFloat::from_int(0, wp), BigFloat::from_int(0, wp));
    if (shift > 0) c.erase(c.begin(), c.begin() + static_cast<long>(shift));

    const int d = static_cast<int>(c.size()) - 1;
    if (d == 1) {
        out.emplace_back(-(c[0].with_prec(wp) / c[1].with_prec(wp)), BigFloat::from_int(0, wp));
    } else if (d == 2) {
        BigFloat a = c[2].with_prec(wp), b = c[1].with_prec(wp), k = c[0].with_prec(wp);
        BigFloat disc = b * b - ldexp2(a * k, 2);
        BigFloat two_a = ldexp2(a, 1);
        if (disc.sign() >= 0) {
            BigFloat sd = sqrt(disc);
            out.emplace_back((-b - sd) / two_a, BigFloat::from_int(0, wp));
            out.emplace_back((-b + sd) / two_a, BigFloat::from_int(0, wp));
        } else {
            BigFloat sd = sqrt(-disc);
            out.emplace_back(-b / two_a, -(sd / two_a));
            out.emplace_back(-b / two_a, sd / two_a);
        }
    } else if (d >= 3) {
        Polynomial<BigFloat> q(std::move(c));
        auto z = aberth_simple(q, prec, require_converged);
        out.insert(out.end(), z.begin(), z.end());
    }
    return out;
}

inline void sort_roots(std::vector<CBF>& roots) {
    std::sort(roots.begin(), roots.end(), [](const CBF& a, const CBF& b) {
        if (a.re < b.re) return true;
        if (b.re < a.re) return false;
        return a.im < b.im;
    });
}

inline void sort_zero_set(ZeroSet& zs) {
    std::vector<size_t> idx(zs.roots.size());
    for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (zs.roots[a].re < zs.roots[b].re) return true;
        if (zs.roots[b].re < zs.roots[a].re) return false;
        return zs.roots[a].im < zs.roots[b].im;
    });
    std::vector<CBF> r;
    std::vector<int> m;
    r.reserve(idx.size());
    m.reserve(idx.size());
    for (size_t k : idx) {
        r.push_back(zs.roots[k]);
        m.push_back(zs.multiplicities[k]);
    }
    zs.roots = std::move(r);
    zs.multiplicities = std::move(m);
}

// Residual guard: |p(z)| must be small against the coefficient scale.
inline void check_residuals(const Polynomial<BigFloat>& p, const std::vector<CBF>& roots,
                            long prec, int worst_mult) {
    const long wp = prec + 64;
    BigFloat scale = coeff_scale(p, wp);
    if (scale.is_zero()) return;
    std::vector<CBF> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.emplace_back(v.with_prec(wp));
    // A multiplicity-m root computed to eps accuracy leaves |p| ~ eps^m, so
    // the check must not demand more than the attainable eps = 2^(-prec/2).
    BigFloat tol = ldexp2(scale, -prec / (2 * (worst_mult > 0 ? worst_mult : 1)));
    for (const auto& z : roots) {
        BigFloat grow = BigFloat::from_int(1, wp);
        BigFloat zs = cabs(z, wp);
        if (BigFloat::from_int(1, wp) < zs)
            for (int k = 0; k < p.degree(); ++k) grow = grow * zs;
        BigFloat r = cabs(horner2(c, z).first, wp);
        if (tol * grow < r)
            throw ConvergenceError("root residual " + r.to_string(3) +
                                   " exceeds tolerance " + (tol * grow).to_string(3));
    }
}

} // namespace detail

// Numeric-coefficient route: roots by deterministic simultaneous iteration,
// multiplicities by relative-distance clustering (radius 10^(-prec/8)).
inline ZeroSet find_roots(const Polynomial<BigFloat>& p, long prec) {
    if (p.degree() < 0) throw ConfigError("the zero polynomial has no root set");
    ZeroSet zs;
    zs.method = RootMethod::aberth;
    zs.precision_bits = prec;
    if (p.degree() == 0) return zs; // constants: empty root set
    auto raw = detail::roots_of(p, prec, /*require_converged=*/false);
    detail::sort_roots(raw);

    const long wp = prec + 64;
    BigFloat radius = pow10_neg(prec / 8, wp);
    std::vector<bool> used(raw.size(), false);
    int worst_mult = 1;
    for (size_t k = 0; k < raw.size(); ++k) {
        if (used[k]) continue;
        std::vector<size_t> cluster{k};
        BigFloat zs_k = detail::cabs(raw[k], wp);
        if (zs_k < BigFloat::from_int(1, wp)) zs_k = BigFloat::from_int(1, wp);
        for (size_t j = k + 1; j < raw.size(); ++j) {
            if (used[j]) continue;
            BigFloat d = detail::cabs(raw[k] - raw[j], wp);
            if (d <= radius * zs_k) {
                cluster.push_back(j);
                used[j] = true;
            }
        }
        detail::CBF centroid(BigFloat::from_int(0, wp));
        for (size_t j : cluster) centroid = centroid + raw[j];
        BigFloat cnt = BigFloat::from_int(static_cast<long long>(cluster.size()), wp);
        centroid = detail::CBF(centroid.re / cnt, centroid.im / cnt);
        // Real-coefficient input: a centroid with negligible imaginary part is
        // a real root; snap it so reality classification is unambiguous.
        BigFloat im_tol = radius * zs_k;
        if (abs(centroid.im) <= im_tol) centroid.im = BigFloat::from_int(0, wp);
        zs.roots.push_back(centroid);
        zs.multiplicities.push_back(static_cast<int>(cluster.size()));
        worst_mult = std::max(worst_mult, static_cast<int>(cluster.size()));
        if (cluster.size() > 1) zs.cluster_fallback = true;
    }
    detail::sort_zero_set(zs);
    detail::check_residuals(p, zs.roots, prec, worst_mult);
    return zs;
}

// Exact-coefficient route: square-free decomposition fixes multiplicities
// exactly; each square-free factor has simple roots, found numerically and
// classified rigorously (real counts certified by Sturm chains).
template <class F>
    requires(scalar_traits<F>::exact)
ZeroSet find_roots(const Polynomial<F>& p, long prec) {
    if (p.degree() < 0) throw ConfigError("the zero polynomial has no root set");
    ZeroSet zs;
    zs.method = RootMethod::exact_gcd;
    zs.precision_bits = prec;
    if (p.degree() == 0) return zs; // constants: empty root set
    auto factors = squarefree_decomposition(p);
    for (const auto& sf : factors) {
        int expected_real = count_real_roots(sf.factor);
        Polynomial<BigFloat> fb = to_bigfloat_poly(sf.factor, prec + 64);
        auto raw = detail::roots_of(fb, prec);
        detail::check_residuals(fb, raw, prec, 1);
        // Certify the reality split: the Sturm count says how many roots are
        // real; they are exactly the ones with the smallest |Im|.
        std::sort(raw.begin(), raw.end(), [](const detail::CBF& a, const detail::CBF& b) {
            return abs(a.im) < abs(b.im);
        });
        const long wp = prec + 64;
        BigFloat split = pow2(-prec / 2, wp);
        for (int k = 0; k < static_cast<int>(raw.size()); ++k) {
            if (k < expected_real) {
                if (split < abs(raw[k].im))
                    throw ConvergenceError("reality certification failed: root " +
                                           raw[k].re.to_string(6) + " + " +
                                           raw[k].im.to_string(6) +
                                           "i should be real by Sturm count");
                raw[k].im = BigFloat::from_int(0, wp);
            } else if (abs(raw[k].im) < split) {
                throw ConvergenceError("reality certification failed: more near-real "
                                       "roots than the Sturm count allows");
            }
            zs.roots.push_back(raw[k]);
            zs.multiplicities.push_back(sf.multiplicity);
        }
    }
    detail::sort_zero_set(zs);
    if (zs.total_multiplicity() != p.degree())
        throw ConvergenceError("multiplicity bookkeeping lost roots");
    return zs;
}

// ---------------------------------------------------------------------------
// Structural checks on the kernel polynomials S_n and the family R_n.
// ---------------------------------------------------------------------------

struct ZeroStructureReport {
    int n = 0;
    bool real_ok = false;    // all n roots real
    bool simple_ok = false;  // no repeated roots
    bool support_ok = false; // strictly inside the measure's support interval
    bool ok = false;
    std::string detail;
    ZeroSet zeros;
};

// All zeros of S_n must be real, simple, and interior to the support of the
// source measure ((-1, 1) for the Chebyshev weight; the whole line otherwise,
// making the support clause vacuous).  Exact engines certify reality and
// simplicity by Sturm counts and gcd; the numeric margin is 1e-30.
template <class Engine>
ZeroStructureReport check_S_zero_structure(const Christoffel<Engine>& chr, int n,
                                           long prec = 256) {
    using F = typename Engine::field_type;
    ZeroStructureReport rep;
    rep.n = n;
    Polynomial<F> s = chr.S(n);
    if (n == 0) { // constant: no zeros, everything holds vacuously
        rep.real_ok = rep.simple_ok = rep.support_ok = rep.ok = true;
        rep.zeros.kind = 'S';
        rep.zeros.n = 0;
        return rep;
    }
    rep.zeros = find_roots(s, prec);
    rep.zeros.kind = 'S';
    rep.zeros.n = n;
    rep.zeros.family = family_name(chr.family().source().kind());

    int real_count = 0;
    bool simple = true;
    for (size_t k = 0; k < rep.zeros.roots.size(); ++k) {
        if (rep.zeros.roots[k].im.is_zero()) ++real_count;
        if (rep.zeros.multiplicities[k] != 1) simple = false;
    }
    rep.real_ok = real_count == n && static_cast<int>(rep.zeros.roots.size()) == n;
    rep.simple_ok = simple;

    if constexpr (scalar_traits<F>::exact) {
        // Rigorous cross-checks independent of the numeric roots.
        if (count_real_roots(s) != n) rep.real_ok = false;
        if (gcd_exact(s, s.derivative()).degree() != 0) rep.simple_ok = false;
    }

    const bool bounded = chr.family().source().kind() == FamilyKind::chebyshev1;
    if (!bounded) {
        rep.support_ok = true;
    } else {
        const long wp = prec + 64;
        BigFloat margin = pow10_neg(30, wp);
        BigFloat hi = BigFloat::from_int(1, wp) - margin;
        rep.support_ok = true;
        for (const auto& z : rep.zeros.roots)
            if (!(abs(z.re) < hi)) rep.support_ok = false;
        if constexpr (scalar_traits<F>::exact) {
            using T = scalar_traits<F>;
            F one = T::one();
            F neg_one = T::zero() - one;
            if (count_real_roots_in(s, neg_one, one) != n) rep.support_ok = false;
            if (T::is_zero(s.eval(one)) || T::is_zero(s.eval(neg_one))) rep.support_ok = false;
        }
    }
    rep.ok = rep.real_ok && rep.simple_ok && rep.support_ok;
    if (!rep.ok)
        rep.detail = "S_" + std::to_string(n) + ": real=" + std::to_string(rep.real_ok) +
                     " simple=" + std::to_string(rep.simple_ok) +
                     " support=" + std::to_string(rep.support_ok);
    return rep;
}

struct InterlacingReport {
    int n = 0;       // compares S_n against S_(n+1)
    bool ok = false;
    BigFloat min_gap; // smallest margin in the strict inequalities
};

// Strict interlacing of the real simple zeros:  between consecutive zeros of
// S_(n+1) lies exactly one zero of S_n.
template <class Engine>
InterlacingReport check_interlacing(const Christoffel<Engine>& chr, int n,
                                    long prec = 256) {
    InterlacingReport rep;
    rep.n = n;
    rep.min_gap = BigFloat::from_int(0, prec);
    if (n == 0) { rep.ok = true; return rep; } // S_0 has no zeros: vacuous
    ZeroSet zn = find_roots(chr.S(n), prec);
    ZeroSet zn1 = find_roots(chr.S(n + 1), prec);
    std::vector<BigFloat> x = zn.real_roots();   // n of them, sorted
    std::vector<BigFloat> y = zn1.real_roots();  // n+1 of them, sorted
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n + 1) {
        rep.ok = false;
        return rep;
    }
    bool first = true;
    rep.ok = true;
    for (int k = 0; k < n; ++k) {
        BigFloat left = x[k] - y[k];
        BigFloat right = y[k + 1] - x[k];
        if (left.sign() <= 0 || right.sign() <= 0) rep.ok = false;
        BigFloat gap = left < right ? left : right;
        if (first || gap < rep.min_gap) { rep.min_gap = gap; first = false; }
    }
    return rep;
}

struct MultiplicityProfile {
    int n = 0;
    std::map<int, int> real_counts;    // multiplicity -> distinct real roots
    std::map<int, int> complex_counts; // multiplicity -> distinct non-real roots
    ZeroSet zeros;
    bool used_exact = true;

    int count_real(int mult) const {
        auto it = real_counts.find(mult);
        return it == real_counts.end() ? 0 : it->second;
    }
    int count_complex(int mult) const {
        auto it = complex_counts.find(mult);
        return it == complex_counts.end() ? 0 : it->second;
    }
};

// Zero multiplicity structure of R_n.  Exact engines get a certified profile
// through the square-free decomposition; the numeric engine falls back to
// cluster detection and flags it.
template <class Engine>
MultiplicityProfile R_multiplicity_profile(const DekFamily<Engine>& fam, int n,
                                           long prec = 256) {
    using F = typename Engine::field_type;
    MultiplicityProfile prof;
    prof.n = n;
    Polynomial<F> r = fam.R(n);
    if (r.degree() < 1) { prof.zeros.kind = 'R'; prof.zeros.n = n; return prof; }
    prof.zeros = find_roots(r, prec);
    prof.zeros.kind = 'R';
    prof.zeros.n = n;
    prof.zeros.family = family_name(fam.source().kind());
    prof.used_exact = scalar_traits<F>::exact;
    for (size_t k = 0; k < prof.zeros.roots.size(); ++k) {
        int m = prof.zeros.multiplicities[k];
        if (prof.zeros.roots[k].im.is_zero()) ++prof.real_counts[m];
        else ++prof.complex_counts[m];
    }
    return prof;
}

// ---------------------------------------------------------------------------
// Interpolation constructor: the smallest polynomial with prescribed real
// zeros whose derivative vanishes at +-i.
// ---------------------------------------------------------------------------

// Builds monic f of degree (#nodes)+2 with f(node)=0 for every node and
// f'(+-i)=0:  f = (x^2 + b x + c) * prod (x - node), where (b, c) solve the
// 2x2 real system from Re f'(i) = Im f'(i) = 0.  The quadratic factor keeps
// no real roots (its discriminant stays negative), so the nodes are exactly
// the real zeros of f.  With no nodes the constraint degenerates (f' = 2x + b
// cannot vanish at +-i); the convention f = x^2 + 1 extends the map there.
template <class F>
Polynomial<F> build_critical_poly(const std::vector<F>& nodes) {
    using T = scalar_traits<F>;
    for (size_t a = 0; a < nodes.size(); ++a)
        for (size_t b = a + 1; b < nodes.size(); ++b)
            if (T::is_zero(nodes[a] - nodes[b]))
                throw ConfigError("interpolation nodes must be distinct");

    Polynomial<F> q = Polynomial<F>::constant(T::one());
    for (const F& node : nodes)
        q = q * Polynomial<F>(std::vector<F>{-node, T::one()});
    if (nodes.empty())
        return Polynomial<F>(std::vector<F>{T::one(), T::zero(), T::one()});

    ComplexOf<F> qi = eval_at_i(q);
    ComplexOf<F> dqi = eval_at_i(q.derivative());
    const F qr = qi.re, qim = qi.im, pr = dqi.re, pim = dqi.im;
    const F two = T::from_int(2);

    // [ qr - pim   pr  ] [b]   [ 2 qim ]
    // [ qim + pr   pim ] [g] = [ -2 qr ],   g = c - 1.
    F m00 = qr - pim, m01 = pr;
    F m10 = qim + pr, m11 = pim;
    F det = m00 * m11 - m01 * m10;
    if (T::is_zero(det))
        throw DegenerateError(static_cast<int>(nodes.size()),
                              "interpolation system is singular (contradicts the "
                              "derivative-ratio bound)");
    F rhs0 = two * qim, rhs1 = -(two * qr);
    F b = (rhs0 * m11 - m01 * rhs1) / det;
    F g = (m00 * rhs1 - rhs0 * m10) / det;
    F c = g + T::one();

    Polynomial<F> quad(std::vector<F>{c, b, T::one()});
    Polynomial<F> f = quad * q;

    if constexpr (T::exact) {
        ComplexOf<F> chk = eval_at_i(f.derivative());
        if (!T::is_zero(chk.re) || !T::is_zero(chk.im))
            throw DegenerateError(static_cast<int>(nodes.size()),
                                  "constructed polynomial failed the derivative check");
        // The quadratic factor must stay strictly complex: disc = b^2 - 4c < 0.
        F disc = b * b - T::from_int(4) * c;
        if (detail::sign_probe<F>::sgn(disc) >= 0)
            throw DegenerateError(static_cast<int>(nodes.size()),
                                  "quadratic factor acquired real roots");
    }
    return f;
}

} // namespace dekpoly
