#pragma once

#include <utility>
#include <vector>

#include "polynomial.hpp"

namespace dekpoly {

namespace detail {

// Integral-domain adapters for the fraction-free remainder sequence.
// Coefficients are cleared of denominators first, so the PRS runs over Z or
// Z[sqrt d], where the subresultant divisions are exact and coefficient
// growth stays polynomial.

struct IntRing {
    using V = BigInt;
    static V one() { return BigInt(1); }
    static bool is_zero(const V& v) { return v == 0; }
    static V mul(const V& x, const V& y) { return x * y; }
    static V sub(const V& x, const V& y) { return x - y; }
    static V neg(const V& x) { return -x; }
    static V exact_div(const V& x, const V& y) {
        BigInt q, r;
        boost::multiprecision::divide_qr(x, y, q, r);
        if (r != 0) throw DivisionError("non-exact integer division in remainder sequence");
        return q;
    }
};

// Z[sqrt d] with exact division checked through the field quotient.
struct RootRing {
    struct V {
        BigInt a, b;
        bool operator==(const V&) const = default;
    };
    int d;
    V one() const { return V{1, 0}; }
    static bool is_zero(const V& v) { return v.a == 0 && v.b == 0; }
    V mul(const V& x, const V& y) const {
        return V{x.a * y.a + d * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    static V sub(const V& x, const V& y) { return V{x.a - y.a, x.b - y.b}; }
    static V neg(const V& x) { return V{-x.a, -x.b}; }
    V exact_div(const V& x, const V& y) const {
        BigInt n = y.a * y.a - d * y.b * y.b;
        if (n == 0) throw DivisionError("division by zero in Z[sqrt d]");
        BigInt na = x.a * y.a - d * x.b * y.b;
        BigInt nb = x.b * y.a - x.a * y.b;
        BigInt qa, ra, qb, rb;
        boost::multiprecision::divide_qr(na, n, qa, ra);
        boost::multiprecision::divide_qr(nb, n, qb, rb);
        if (ra != 0 || rb != 0)
            throw DivisionError("non-exact division in Z[sqrt d] remainder sequence");
        return V{qa, qb};
    }
};

template <class Ring>
using RingPoly = std::vector<typename Ring::V>; // ascending, trimmed

template <class Ring>
void ring_trim(const Ring& ring, RingPoly<Ring>& p) {
    while (!p.empty() && ring.is_zero(p.back())) p.pop_back();
}

template <class Ring>
typename Ring::V ring_pow(const Ring& ring, typename Ring::V base, int k) {
    typename Ring::V r = ring.one();
    for (int i = 0; i < k; ++i) r = ring.mul(r, base);
    return r;
}

// Pseudo-remainder: exactly lc(B)^(deg A - deg B + 1) * A mod B. The exact
// power matters: the subresultant divisions downstream rely on it.
template <class Ring>
RingPoly<Ring> pseudo_rem(const Ring& ring, RingPoly<Ring> A, const RingPoly<Ring>& B) {
    const int db = static_cast<int>(B.size()) - 1;
    const auto& lb = B.back();
    int pending = (static_cast<int>(A.size()) - 1) - db + 1;
    while (static_cast<int>(A.size()) - 1 >= db) {
        const int da = static_cast<int>(A.size()) - 1;
        auto la = A.back();
        for (auto& c : A) c = ring.mul(c, lb);
        --pending;
        for (int j = 0; j <= db; ++j)
            A[da - db + j] = ring.sub(A[da - db + j], ring.mul(la, B[j]));
        ring_trim(ring, A);
        if (A.empty()) break;
    }
    if (!A.empty() && pending > 0) {
        auto scale = ring_pow(ring, lb, pending);
        for (auto& c : A) c = ring.mul(c, scale);
    }
    return A;
}

// Collins subresultant PRS; returns the last nonzero remainder (the gcd up
// to content) or B itself when the division chain terminates immediately.
template <class Ring>
RingPoly<Ring> subresultant_gcd(const Ring& ring, RingPoly<Ring> A, RingPoly<Ring> B) {
    ring_trim(ring, A);
    ring_trim(ring, B);
    if (A.size() < B.size()) std::swap(A, B);
    if (B.empty()) return A;
    auto g = ring.one();
    auto h = ring.one();
    while (true) {
        int delta = (static_cast<int>(A.size()) - 1) - (static_cast<int>(B.size()) - 1);
        RingPoly<Ring> R = pseudo_rem(ring, A, B);
        if (R.empty()) return B;
        if (R.size() == 1) return {ring.one()}; // constant remainder: coprime
        auto div = ring.mul(g, ring_pow(ring, h, delta));
        for (auto& c : R) c = ring.exact_div(c, div);
        A = std::move(B);
        B = std::move(R);
        g = A.back();
        if (delta >= 1)
            h = ring.exact_div(ring_pow(ring, g, delta), ring_pow(ring, h, delta - 1));
    }
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return BigInt(0);
    return a / gcd(a, b) * b;
}

inline RingPoly<IntRing> integerize(const Polynomial<Rational>& p, IntRing&) {
    BigInt den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, denominator(c));
    RingPoly<IntRing> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(numerator(c) * (den / denominator(c)));
    BigInt content = 0;
    for (const auto& c : out) content = gcd(content, c);
    if (content > 1)
        for (auto& c : out) c /= content;
    return out;
}

inline RingPoly<RootRing> integerize(const Polynomial<QuadExt>& p, RootRing& ring) {
    BigInt den = 1;
    for (const auto& c : p.coeffs()) {
        den = lcm(den, denominator(c.a()));
        den = lcm(den, denominator(c.b()));
        if (c.d() != 0) {
            if (ring.d == 0) ring.d = c.d();
            else if (ring.d != c.d())
                throw FieldError("gcd across different quadratic fields");
        }
    }
    if (ring.d == 0) ring.d = 2;
    RingPoly<RootRing> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        out.push_back({numerator(c.a()) * (den / denominator(c.a())),
                       numerator(c.b()) * (den / denominator(c.b()))});
    BigInt content = 0;
    for (const auto& c : out) {
        content = gcd(content, c.a);
        content = gcd(content, c.b);
    }
    if (content > 1)
        for (auto& c : out) { c.a /= content; c.b /= content; }
    return out;
}

inline Polynomial<Rational> from_ring(const RingPoly<IntRing>& p, const IntRing&) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p) c.push_back(Rational(v));
    return Polynomial<Rational>(std::move(c));
}

inline Polynomial<QuadExt> from_ring(const RingPoly<RootRing>& p, const RootRing& ring) {
    std::vector<QuadExt> c;
    c.reserve(p.size());
    for (const auto& v : p) c.push_back(QuadExt(Rational(v.a), Rational(v.b), ring.d));
    return Polynomial<QuadExt>(std::move(c));
}

template <class F>
struct ring_for;
template <>
struct ring_for<Rational> { using type = IntRing; };
template <>
struct ring_for<QuadExt> { using type = RootRing; };

} // namespace detail

template <class F>
Polynomial<F> make_monic(const Polynomial<F>& p) {
    if (p.is_zero()) return p;
    F inv = scalar_traits<F>::one() / p.leading();
    return inv * p;
}

// Monic gcd through a fraction-free remainder sequence over the cleared
// coefficient ring. Exact fields only.
template <class F>
Polynomial<F> gcd_exact(const Polynomial<F>& p, const Polynomial<F>& q) {
    static_assert(scalar_traits<F>::exact, "gcd requires an exact coefficient field");
    if (p.is_zero()) return make_monic(q);
    if (q.is_zero()) return make_monic(p);
    typename detail::ring_for<F>::type ring{};
    auto A = detail::integerize(p, ring);
    auto B = detail::integerize(q, ring);
    auto G = detail::subresultant_gcd(ring, std::move(A), std::move(B));
    return make_monic(detail::from_ring(G, ring));
}

// Yun's algorithm: p (up to a constant) = prod factor_i ^ multiplicity_i with
// the factors square-free and pairwise coprime. Only factors of positive
// degree are reported.
template <class F>
struct SquareFreeFactor {
    Polynomial<F> factor; // monic
    int multiplicity;
};

template <class F>
std::vector<SquareFreeFactor<F>> squarefree_decomposition(const Polynomial<F>& p) {
    static_assert(scalar_traits<F>::exact, "square-free decomposition requires exactness");
    std::vector<SquareFreeFactor<F>> out;
    if (p.degree() < 1) return out;
    Polynomial<F> mp = make_monic(p);
    Polynomial<F> g = gcd_exact(mp, mp.derivative());
    Polynomial<F> c = exact_divide(mp, g);
    Polynomial<F> d = exact_divide(mp.derivative(), g) - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        Polynomial<F> f = gcd_exact(c, d);
        if (f.degree() > 0) out.push_back({f, i});
        Polynomial<F> c2 = exact_divide(c, f);
        d = exact_divide(d, f) - c2.derivative();
        c = std::move(c2);
        ++i;
    }
    return out;
}

// Distinct real roots of p on (a, b] (or the whole line) by Sturm's theorem.
// Needs an exactly signed field.
namespace detail {

template <class F>
std::vector<Polynomial<F>> sturm_chain(const Polynomial<F>& p) {
    std::vector<Polynomial<F>> chain;
    Polynomial<F> sf = exact_divide(p, gcd_exact(p, p.derivative()));
    chain.push_back(sf);
    chain.push_back(sf.derivative());
    while (chain.back().degree() >= 0) {
        auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
        (void)q;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    return chain;
}

template <class F>
int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace detail

template <class F>
int count_real_roots(const Polynomial<F>& p) {
    static_assert(scalar_traits<F>::exact, "Sturm count requires exactness");
    if (p.degree() < 1) return 0;
    auto chain = detail::sturm_chain(p);
    std::vector<int> at_minus_inf, at_plus_inf;
    for (const auto& q : chain) {
        if (q.is_zero()) { at_minus_inf.push_back(0); at_plus_inf.push_back(0); continue; }
        int lead = detail::sign_probe<F>::sgn(q.leading());
        at_plus_inf.push_back(lead);
        at_minus_inf.push_back(q.degree() % 2 == 0 ? lead : -lead);
    }
    return detail::sign_changes<F>(at_minus_inf) - detail::sign_changes<F>(at_plus_inf);
}

template <class F>
int count_real_roots_in(const Polynomial<F>& p, const F& a, const F& b) {
    static_assert(scalar_traits<F>::exact, "Sturm count requires exactness");
    if (p.degree() < 1) return 0;
    auto chain = detail::sturm_chain(p);
    std::vector<int> at_a, at_b;
    for (const auto& q : chain) {
        at_a.push_back(q.is_zero() ? 0 : detail::sign_probe<F>::sgn(q.eval(a)));
        at_b.push_back(q.is_zero() ? 0 : detail::sign_probe<F>::sgn(q.eval(b)));
    }
    return detail::sign_changes<F>(at_a) - detail::sign_changes<F>(at_b);
}

} // namespace dekpoly
