#pragma once

#include "hyptor/rational.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace hyptor::series {

using MultiIndex = std::vector<int>;

inline int total_degree(const MultiIndex& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), 0);
}

// Multivariate Taylor polynomial ("jet") in m variables, truncated to total
// degree <= D. Sparse: absent index means coefficient zero. The coefficient
// type is double for numeric work and Rational for exact mode.
template <typename T>
class TruncatedSeries {
  public:
    TruncatedSeries(int m, int max_degree) : m_(m), degree_(max_degree) {
        if (m < 1 || max_degree < 0) throw std::invalid_argument("TruncatedSeries: bad shape");
    }

    int vars() const { return m_; }
    int max_degree() const { return degree_; }
    const std::map<MultiIndex, T>& terms() const { return terms_; }

    void set(const MultiIndex& alpha, const T& c) {
        check_index(alpha);
        if (c == T(0))
            terms_.erase(alpha);
        else
            terms_[alpha] = c;
    }

    T coefficient(const MultiIndex& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? T(0) : it->second;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& other) {
        check_shape(other);
        for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
        a += b;
        return a;
    }

    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) {
        a.check_shape(b);
        for (const auto& [alpha, c] : b.terms_) a.add_term(alpha, -c);
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_shape(b);
        TruncatedSeries out(a.m_, a.degree_);
        MultiIndex gamma(a.m_);
        for (const auto& [alpha, ca] : a.terms_) {
            int da = total_degree(alpha);
            for (const auto& [beta, cb] : b.terms_) {
                if (da + total_degree(beta) > a.degree_) continue;
                for (int i = 0; i < a.m_; ++i) gamma[i] = alpha[i] + beta[i];
                out.add_term(gamma, ca * cb);
            }
        }
        return out;
    }

    TruncatedSeries scaled(const T& factor) const {
        TruncatedSeries out(m_, degree_);
        if (factor == T(0)) return out;
        for (const auto& [alpha, c] : terms_) out.terms_[alpha] = c * factor;
        return out;
    }

    TruncatedSeries truncated(int new_degree) const {
        TruncatedSeries out(m_, new_degree);
        for (const auto& [alpha, c] : terms_)
            if (total_degree(alpha) <= new_degree) out.terms_[alpha] = c;
        return out;
    }

    // Smallest total degree with a nonzero coefficient; -1 for the zero series.
    int valuation() const {
        int v = -1;
        for (const auto& [alpha, c] : terms_) {
            int d = total_degree(alpha);
            if (v < 0 || d < v) v = d;
        }
        return v;
    }

    bool is_zero() const { return terms_.empty(); }

    T eval(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != m_)
            throw std::invalid_argument("TruncatedSeries::eval: wrong point dimension");
        T sum(0);
        for (const auto& [alpha, c] : terms_) {
            T mono = c;
            for (int i = 0; i < m_; ++i)
                for (int p = 0; p < alpha[i]; ++p) mono *= x[i];
            sum += mono;
        }
        return sum;
    }

  private:
    void check_index(const MultiIndex& alpha) const {
        if (static_cast<int>(alpha.size()) != m_)
            throw std::invalid_argument("TruncatedSeries: index arity mismatch");
        for (int a : alpha)
            if (a < 0) throw std::invalid_argument("TruncatedSeries: negative exponent");
        if (total_degree(alpha) > degree_)
            throw std::invalid_argument("TruncatedSeries: index beyond degree bound");
    }

    void check_shape(const TruncatedSeries& other) const {
        if (m_ != other.m_ || degree_ != other.degree_)
            throw std::invalid_argument("TruncatedSeries: shape mismatch (m, D)");
    }

    void add_term(const MultiIndex& alpha, const T& c) {
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == T(0)) terms_.erase(it);
        }
    }

    int m_;
    int degree_;
    std::map<MultiIndex, T> terms_;
};

// Substitutes u = x_1^2 + ... + x_m^2 into a univariate series in u
// (a series with vars() == 1), truncating to total degree <= D.
template <typename T>
TruncatedSeries<T> compose_radial(const TruncatedSeries<T>& u_series, int m, int max_degree) {
    if (u_series.vars() != 1)
        throw std::invalid_argument("compose_radial: expected a univariate series");
    TruncatedSeries<T> out(m, max_degree);
    TruncatedSeries<T> q(m, max_degree);  // x_1^2 + ... + x_m^2
    for (int i = 0; i < m; ++i) {
        MultiIndex alpha(m, 0);
        alpha[i] = 2;
        if (max_degree >= 2) q.set(alpha, T(1));
    }
    TruncatedSeries<T> q_pow(m, max_degree);
    q_pow.set(MultiIndex(m, 0), T(1));
    int pow = 0;
    for (const auto& [alpha, c] : u_series.terms()) {
        int k = alpha[0];
        if (2 * k > max_degree) continue;
        while (pow < k) {
            q_pow = q_pow * q;
            ++pow;
        }
        out += q_pow.scaled(c);
    }
    return out;
}

// Univariate helpers (vars() == 1), used to build radial jets.

template <typename T>
TruncatedSeries<T> univariate(int max_degree) {
    return TruncatedSeries<T>(1, max_degree);
}

// Composition g(f(u)) for univariate series where f has zero constant term.
template <typename T>
TruncatedSeries<T> compose_univariate(const TruncatedSeries<T>& outer,
                                      const TruncatedSeries<T>& inner) {
    if (outer.vars() != 1 || inner.vars() != 1)
        throw std::invalid_argument("compose_univariate: univariate series required");
    if (inner.coefficient({0}) != T(0))
        throw std::invalid_argument("compose_univariate: inner constant term must vanish");
    const int D = inner.max_degree();
    TruncatedSeries<T> out(1, D);
    TruncatedSeries<T> inner_pow(1, D);
    inner_pow.set({0}, T(1));
    int pow = 0;
    for (const auto& [alpha, c] : outer.terms()) {
        int k = alpha[0];
        if (k > D) continue;
        while (pow < k) {
            inner_pow = inner_pow * inner;
            ++pow;
        }
        out += inner_pow.scaled(c);
    }
    return out;
}

// Reciprocal 1/f of a univariate series with nonzero constant term.
template <typename T>
TruncatedSeries<T> reciprocal_univariate(const TruncatedSeries<T>& f) {
    if (f.vars() != 1) throw std::invalid_argument("reciprocal_univariate: univariate required");
    T c0 = f.coefficient({0});
    if (c0 == T(0)) throw std::invalid_argument("reciprocal_univariate: constant term is zero");
    const int D = f.max_degree();
    TruncatedSeries<T> inv(1, D);
    inv.set({0}, T(1) / c0);
    // Newton-free direct recursion: b_k = -(1/c0) * sum_{j=1..k} a_j b_{k-j}.
    std::vector<T> a(D + 1, T(0)), b(D + 1, T(0));
    for (const auto& [alpha, c] : f.terms()) a[alpha[0]] = c;
    b[0] = T(1) / c0;
    for (int k = 1; k <= D; ++k) {
        T s(0);
        for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
        b[k] = -s / c0;
        inv.set({k}, b[k]);
    }
    return inv;
}

template <typename T>
TruncatedSeries<T> integer_power(const TruncatedSeries<T>& f, int e) {
    TruncatedSeries<T> out(f.vars(), f.max_degree());
    out.set(MultiIndex(f.vars(), 0), T(1));
    for (int i = 0; i < e; ++i) out = out * f;
    return out;
}

TruncatedSeries<double> to_double_series(const TruncatedSeries<Rational>& s);

}  // namespace hyptor::series
