#pragma once

#include <algorithm>
#include <concepts>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalar_traits.hpp"

namespace dekpoly {

enum class Parity { even, odd, none };

// Dense univariate polynomial over a field F, coefficients ascending.
// Trailing coefficients that are exactly zero are trimmed, so degree() is
// exact for exact fields; the zero polynomial has degree -1 and even parity.
template <class F>
class Polynomial {
public:
    using traits = scalar_traits<F>;

    Polynomial() = default;
    explicit Polynomial(std::vector<F> coeffs) : c_(std::move(coeffs)) {
        trim();
        parity_ = compute_parity();
    }

    static Polynomial constant(F value) { return Polynomial(std::vector<F>{std::move(value)}); }
    static Polynomial x() {
        return Polynomial(std::vector<F>{traits::zero(), traits::one()});
    }
    static Polynomial monomial(int k, F coeff) {
        std::vector<F> c(static_cast<size_t>(k) + 1, traits::zero());
        c[k] = std::move(coeff);
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Parity parity() const { return parity_; }

    const std::vector<F>& coeffs() const { return c_; }
    F coeff(int k) const {
        if (k < 0 || k > degree()) return traits::zero();
        return c_[k];
    }
    const F& leading() const {
        if (c_.empty()) throw Error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == traits::one(); }

    friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
        std::vector<F> c(std::max(p.c_.size(), q.c_.size()), traits::zero());
        for (size_t k = 0; k < c.size(); ++k) {
            if (k < p.c_.size()) c[k] += p.c_[k];
            if (k < q.c_.size()) c[k] += q.c_[k];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
        std::vector<F> c(std::max(p.c_.size(), q.c_.size()), traits::zero());
        for (size_t k = 0; k < c.size(); ++k) {
            if (k < p.c_.size()) c[k] += p.c_[k];
            if (k < q.c_.size()) c[k] -= q.c_[k];
        }
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
        if (p.is_zero() || q.is_zero()) return Polynomial();
        std::vector<F> c(p.c_.size() + q.c_.size() - 1, traits::zero());
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j)
                c[i + j] += p.c_[i] * q.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const F& s, const Polynomial& p) {
        std::vector<F> c = p.c_;
        for (F& v : c) v = s * v;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& p, const F& s) { return s * p; }

    Polynomial operator-() const {
        std::vector<F> c = c_;
        for (F& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.c_ == q.c_; }
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<F> c(c_.size() - 1, traits::zero());
        for (size_t k = 1; k < c_.size(); ++k)
            c[k - 1] = traits::from_int(static_cast<long long>(k)) * c_[k];
        return Polynomial(std::move(c));
    }

    // Horner evaluation in any ring X whose elements are constructible from F
    // (the field itself, or ComplexOf<F>).
    template <class X>
        requires std::constructible_from<X, F>
    X eval(const X& point) const {
        X acc = X(traits::zero());
        for (size_t k = c_.size(); k-- > 0;) acc = acc * point + X(c_[k]);
        return acc;
    }

    // Quotient and remainder; requires a field divisor.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& p, const Polynomial& d) {
        if (d.is_zero()) throw DivisionError("polynomial division by zero");
        if (p.degree() < d.degree()) return {Polynomial(), p};
        std::vector<F> rem = p.c_;
        std::vector<F> quo(static_cast<size_t>(p.degree() - d.degree()) + 1, traits::zero());
        const F& lead = d.c_.back();
        for (int k = p.degree() - d.degree(); k >= 0; --k) {
            F q = rem[k + d.degree()] / lead;
            quo[k] = q;
            if (!traits::is_zero(q))
                for (int j = 0; j <= d.degree(); ++j)
                    rem[k + j] -= q * d.c_[j];
        }
        rem.resize(d.degree() < 0 ? 0 : static_cast<size_t>(d.degree()));
        return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
    }

    // Division that must be exact. Exact fields demand a zero remainder;
    // BigFloat tolerates remainder coefficients below
    // 2^-(precision/2) * (largest input coefficient magnitude).
    friend Polynomial exact_divide(const Polynomial& p, const Polynomial& d) {
        auto [q, r] = divmod(p, d);
        if (!r.is_zero()) {
            if constexpr (traits::exact) {
                throw DivisionError("exact_divide has nonzero remainder of degree " +
                                    std::to_string(r.degree()));
            } else {
                long prec = BigFloat::default_precision;
                BigFloat scale(prec);
                for (const F& c : p.c_) {
                    prec = std::max(prec, working_prec(c));
                    scale = std::max(scale, abs_mag(c));
                }
                for (const F& c : d.c_) scale = std::max(scale, abs_mag(c));
                BigFloat bound = scale * pow2(-prec / 2, prec);
                for (const F& c : r.coeffs())
                    if (abs_mag(c) >= bound)
                        throw DivisionError("exact_divide remainder above tolerance: |r| ~ " +
                                            abs_mag(c).to_string(6));
            }
        }
        return q;
    }

    std::string pretty(const std::string& var = "x") const;

private:
    void trim() {
        while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    }
    Parity compute_parity() const {
        bool even_ok = true, odd_ok = true;
        for (size_t k = 0; k < c_.size(); ++k) {
            if (traits::is_zero(c_[k])) continue;
            if (k % 2 == 1) even_ok = false;
            else odd_ok = false;
        }
        if (even_ok) return Parity::even;
        if (odd_ok) return Parity::odd;
        return Parity::none;
    }
    static BigFloat abs_mag(const F& c) {
        if constexpr (std::is_same_v<F, BigFloat>) return abs(c);
        else return abs_bigfloat(c, BigFloat::default_precision);
    }
    static long working_prec(const F& c) {
        if constexpr (std::is_same_v<F, BigFloat>) return c.prec();
        else { (void)c; return BigFloat::default_precision; }
    }

    std::vector<F> c_;
    Parity parity_ = Parity::even;
};

template <class F>
Polynomial<F> derivative(const Polynomial<F>& p) { return p.derivative(); }

// p(i) and p'(i) for real-coefficient polynomials, over ComplexOf<F>.
template <class F>
ComplexOf<F> eval_at_i(const Polynomial<F>& p) {
    return p.eval(imaginary_unit<F>());
}

template <class F>
ComplexOf<F> eval_at_minus_i(const Polynomial<F>& p) {
    return p.eval(-imaginary_unit<F>());
}

// Coefficient-wise field change.
template <class G, class F, class Fn>
Polynomial<G> map_coeffs(const Polynomial<F>& p, Fn&& fn) {
    std::vector<G> c;
    c.reserve(p.coeffs().size());
    for (const F& v : p.coeffs()) c.push_back(fn(v));
    return Polynomial<G>(std::move(c));
}

template <class F>
Polynomial<BigFloat> to_bigfloat_poly(const Polynomial<F>& p, long precision_bits) {
    return map_coeffs<BigFloat>(p, [&](const F& v) {
        return scalar_traits<F>::to_bigfloat(v, precision_bits);
    });
}

template <class F>
Polynomial<ComplexOf<F>> complexify(const Polynomial<F>& p) {
    return map_coeffs<ComplexOf<F>>(p, [](const F& v) { return ComplexOf<F>(v); });
}

// Largest coefficient magnitude as BigFloat; 0 for the zero polynomial.
template <class F>
BigFloat coeff_scale(const Polynomial<F>& p, long precision_bits) {
    BigFloat m(precision_bits);
    for (const F& c : p.coeffs()) {
        BigFloat a = abs_bigfloat(c, precision_bits);
        if (a > m) m = a;
    }
    return m;
}

namespace detail {

template <class F>
struct sign_probe {
    static int sgn(const F& v) {
        if constexpr (std::is_same_v<F, Rational>) return dekpoly::sign(v);
        else if constexpr (std::is_same_v<F, QuadExt>) return v.sgn();
        else if constexpr (std::is_same_v<F, BigFloat>) return v.sign();
        else return 0; // complex: no usable sign, print raw
    }
};

} // namespace detail

template <class F>
std::string Polynomial<F>::pretty(const std::string& var) const {
    using dekpoly::to_string;
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const F c = coeff(k);
        if (traits::is_zero(c)) continue;
        int s = detail::sign_probe<F>::sgn(c);
        F mag = (s < 0) ? F(-c) : c;
        std::string ms = to_string(mag);
        bool composite = ms.find(' ') != std::string::npos;
        std::string joiner = out.empty() ? (s < 0 ? "-" : "") : (s < 0 ? " - " : " + ");
        std::string power =
            k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        std::string body;
        if (k == 0) {
            body = composite ? "(" + ms + ")" : ms;
        } else if (mag == traits::one()) {
            body = power;
        } else {
            if (composite || ms.find('/') != std::string::npos) ms = "(" + ms + ")";
            body = ms + "*" + power;
        }
        out += joiner + body;
    }
    return out;
}

} // namespace dekpoly
