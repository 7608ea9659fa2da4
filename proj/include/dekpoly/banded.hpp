#pragma once

#include <map>
#include <tuple>

#include "classical.hpp"

namespace dekpoly {

// A square truncation of a banded infinite operator.  Rows hold sparse
// col -> value maps; (low, high) bound the nonzero offsets m - n.  Products
// add bandwidths and are exact on every row whose band stays inside the
// truncation; callers compare only blocks unaffected by the clipped edge.
template <class F>
class BandedOperator {
public:
    BandedOperator(int size, int low, int high)
        : size_(size), low_(low), high_(high), rows_(size) {
        if (size < 0 || low < 0 || high < 0)
            throw ConfigError("banded operator needs nonnegative size and offsets");
    }

    int size() const { return size_; }
    int low() const { return low_; }
    int high() const { return high_; }

    void set(int n, int m, F v) {
        if (n < 0 || n >= size_ || m < 0 || m >= size_)
            throw ConfigError("banded operator entry out of range");
        if (m < n - low_ || m > n + high_)
            throw ConfigError("banded operator entry outside the declared band");
        if (scalar_traits<F>::is_zero(v))
            rows_[n].erase(m);
        else
            rows_[n][m] = std::move(v);
    }

    F entry(int n, int m) const {
        if (n < 0 || n >= size_ || m < 0 || m >= size_) return scalar_traits<F>::zero();
        auto it = rows_[n].find(m);
        return it == rows_[n].end() ? scalar_traits<F>::zero() : it->second;
    }

    const std::map<int, F>& row(int n) const { return rows_[n]; }

    static BandedOperator identity(int size) {
        BandedOperator id(size, 0, 0);
        for (int n = 0; n < size; ++n) id.set(n, n, scalar_traits<F>::one());
        return id;
    }

    friend BandedOperator operator*(const BandedOperator& x, const BandedOperator& y) {
        if (x.size_ != y.size_) throw ConfigError("operator product needs equal truncations");
        BandedOperator out(x.size_, x.low_ + y.low_, x.high_ + y.high_);
        for (int n = 0; n < x.size_; ++n) {
            std::map<int, F> acc;
            for (const auto& [k, xv] : x.rows_[n])
                for (const auto& [m, yv] : y.rows_[k]) {
                    auto it = acc.find(m);
                    if (it == acc.end())
                        acc.emplace(m, xv * yv);
                    else
                        it->second = it->second + xv * yv;
                }
            for (auto& [m, v] : acc)
                if (!scalar_traits<F>::is_zero(v)) out.rows_[n][m] = std::move(v);
        }
        return out;
    }

    friend BandedOperator operator+(const BandedOperator& x, const BandedOperator& y) {
        if (x.size_ != y.size_) throw ConfigError("operator sum needs equal truncations");
        int lo = x.low_ > y.low_ ? x.low_ : y.low_;
        int hi = x.high_ > y.high_ ? x.high_ : y.high_;
        BandedOperator out(x.size_, lo, hi);
        for (int n = 0; n < x.size_; ++n) {
            out.rows_[n] = x.rows_[n];
            for (const auto& [m, v] : y.rows_[n]) {
                auto it = out.rows_[n].find(m);
                if (it == out.rows_[n].end())
                    out.rows_[n][m] = v;
                else {
                    it->second = it->second + v;
                    if (scalar_traits<F>::is_zero(it->second)) out.rows_[n].erase(it);
                }
            }
        }
        return out;
    }

    // (X vec)_n = sum_m X[n][m] vec[m]; vec must cover all columns.
    std::vector<Polynomial<F>> apply(const std::vector<Polynomial<F>>& vec) const {
        if (static_cast<int>(vec.size()) < size_)
            throw ConfigError("operator application needs one vector entry per column");
        std::vector<Polynomial<F>> out;
        out.reserve(size_);
        for (int n = 0; n < size_; ++n) {
            Polynomial<F> acc;
            for (const auto& [m, v] : rows_[n]) acc = acc + v * vec[m];
            out.push_back(std::move(acc));
        }
        return out;
    }

    std::vector<std::tuple<int, int, F>> triplets() const {
        std::vector<std::tuple<int, int, F>> t;
        for (int n = 0; n < size_; ++n)
            for (const auto& [m, v] : rows_[n]) t.emplace_back(n, m, v);
        return t;
    }

    // Largest nonzero offset actually present, as (low, high).
    std::pair<int, int> observed_band() const {
        int lo = 0, hi = 0;
        for (int n = 0; n < size_; ++n)
            for (const auto& [m, v] : rows_[n]) {
                if (n - m > lo) lo = n - m;
                if (m - n > hi) hi = m - n;
            }
        return {lo, hi};
    }

private:
    int size_, low_, high_;
    std::vector<std::map<int, F>> rows_;
};

// Jacobi operator of a monic symmetric family: row n carries a_n at n-1 and
// 1 at n+1, realizing x P_n = P_(n+1) + a_n P_(n-1) on truncations.
template <class F>
BandedOperator<F> jacobi_operator(const ClassicalFamily<F>& fam, int size) {
    BandedOperator<F> j(size, 1, 1);
    for (int n = 0; n < size; ++n) {
        if (n + 1 < size) j.set(n, n + 1, scalar_traits<F>::one());
        if (n >= 1) j.set(n, n - 1, fam.a(n));
    }
    return j;
}

// Entrywise max |X - Y| over the leading N x N block.
template <class F>
BigFloat block_max_diff(const BandedOperator<F>& x, const BandedOperator<F>& y, int block,
                        unsigned prec = 128) {
    BigFloat worst = BigFloat::from_int(0, prec);
    int lo = x.low() > y.low() ? x.low() : y.low();
    int hi = x.high() > y.high() ? x.high() : y.high();
    for (int n = 0; n < block; ++n)
        for (int m = n - lo; m <= n + hi; ++m) {
            if (m < 0 || m >= block) continue;
            BigFloat d = abs_bigfloat(x.entry(n, m) - y.entry(n, m), prec);
            if (worst < d) worst = d;
        }
    return worst;
}

template <class F>
bool block_equal(const BandedOperator<F>& x, const BandedOperator<F>& y, int block) {
    int lo = x.low() > y.low() ? x.low() : y.low();
    int hi = x.high() > y.high() ? x.high() : y.high();
    for (int n = 0; n < block; ++n)
        for (int m = n - lo; m <= n + hi; ++m) {
            if (m < 0 || m >= block) continue;
            F d = x.entry(n, m) - y.entry(n, m);
            if (!scalar_traits<F>::is_zero(d)) return false;
        }
    return true;
}

} // namespace dekpoly
