#include "hyptor/rep_theory.hpp"

#include <algorithm>
#include <functional>

namespace hyptor::rep {

namespace detail {

bool is_half_class(const std::vector<Rational>& k) {
    if (k.empty()) return false;
    return denominator(k.front()) == 2;
}

bool uniform_integrality(const std::vector<Rational>& k, bool allow_half) {
    bool any_half = false, any_int = false;
    for (const auto& e : k) {
        const auto& den = denominator(e);
        if (den == 1)
            any_int = true;
        else if (den == 2)
            any_half = true;
        else
            return false;
    }
    if (any_half && any_int) return false;
    if (any_half && !allow_half) return false;
    return true;
}

}  // namespace detail

static Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

GWeight::GWeight(std::vector<Rational> entries, const Dimension& dim) : k(std::move(entries)) {
    if (static_cast<int>(k.size()) != dim.n + 1)
        throw std::invalid_argument("GWeight: expected n+1 entries");
    for (int i = 0; i + 2 < static_cast<int>(k.size()); ++i)
        if (k[i] < k[i + 1]) throw std::invalid_argument("GWeight: entries must be non-increasing");
    if (k[k.size() - 2] < rat_abs(k.back()))
        throw std::invalid_argument("GWeight: need k_n >= |k_{n+1}|");
    if (!detail::uniform_integrality(k, dim.kind == GroupKind::Spin))
        throw std::invalid_argument("GWeight: entries must be all integers, or all half-integers (Spin only)");
}

KWeight::KWeight(std::vector<Rational> entries, const Dimension& dim) : k(std::move(entries)) {
    if (static_cast<int>(k.size()) != dim.n)
        throw std::invalid_argument("KWeight: expected n entries");
    for (int i = 0; i + 1 < static_cast<int>(k.size()); ++i)
        if (k[i] < k[i + 1]) throw std::invalid_argument("KWeight: entries must be non-increasing");
    if (k.back() < 0) throw std::invalid_argument("KWeight: need k_{n+1} >= 0");
    if (!detail::uniform_integrality(k, dim.kind == GroupKind::Spin))
        throw std::invalid_argument("KWeight: entries must be all integers, or all half-integers (Spin only)");
}

MWeight::MWeight(std::vector<Rational> entries, const Dimension& dim) : k(std::move(entries)) {
    if (static_cast<int>(k.size()) != dim.n)
        throw std::invalid_argument("MWeight: expected n entries");
    for (int i = 0; i + 2 < static_cast<int>(k.size()); ++i)
        if (k[i] < k[i + 1]) throw std::invalid_argument("MWeight: entries must be non-increasing");
    if (k.size() >= 2 && k[k.size() - 2] < rat_abs(k.back()))
        throw std::invalid_argument("MWeight: need k_n >= |k_{n+1}|");
    if (!detail::uniform_integrality(k, dim.kind == GroupKind::Spin))
        throw std::invalid_argument("MWeight: entries must be all integers, or all half-integers (Spin only)");
}

std::vector<Rational> rho_vector(const Dimension& dim) {
    std::vector<Rational> rho(dim.n + 1);
    for (int j = 1; j <= dim.n + 1; ++j) rho[j - 1] = dim.n + 1 - j;
    return rho;
}

MWeight weyl_flip(const MWeight& sigma) {
    MWeight out = sigma;
    out.k.back() = -out.k.back();
    return out;
}

Rational casimir_sigma(const MWeight& sigma, const Dimension& dim) {
    auto rho = rho_vector(dim);
    Rational sum = 0;
    for (int j = 2; j <= dim.n + 1; ++j) {
        Rational v = sigma.k[j - 2] + rho[j - 1];
        sum += v * v;
    }
    for (const auto& r : rho) sum -= r * r;
    return sum;
}

Rational casimir_tau(const GWeight& tau, const Dimension& dim) {
    auto rho = rho_vector(dim);
    Rational sum = 0;
    for (int j = 1; j <= dim.n + 1; ++j) {
        Rational v = tau.k[j - 1] + rho[j - 1];
        sum += v * v;
    }
    for (const auto& r : rho) sum -= r * r;
    return sum;
}

int branching_multiplicity(const KWeight& nu, const MWeight& sigma) {
    if (nu.k.size() != sigma.k.size())
        throw std::invalid_argument("branching_multiplicity: mismatched dimension");
    const int n = static_cast<int>(nu.k.size());
    // Weights from different integrality classes never branch into each other.
    for (int i = 0; i < n; ++i)
        if (denominator(Rational(nu.k[i] - sigma.k[i])) != 1) return 0;
    // Interlacing: k_2(nu) >= k_2(sigma) >= k_3(nu) >= ... >= k_{n+1}(nu) >= |k_{n+1}(sigma)|.
    for (int i = 0; i < n - 1; ++i) {
        if (nu.k[i] < sigma.k[i]) return 0;
        if (sigma.k[i] < nu.k[i + 1]) return 0;
    }
    if (nu.k[n - 1] < rat_abs(sigma.k[n - 1])) return 0;
    return 1;
}

static long long weyl_quotient(const std::vector<Rational>& lam, const std::vector<Rational>& rho,
                               const std::vector<std::pair<int, int>>& root_pairs,
                               const std::vector<int>& short_roots) {
    Rational num = 1, den = 1;
    for (auto [i, j] : root_pairs) {
        // product over e_i - e_j and e_i + e_j collapses to a difference of squares
        num *= lam[i] * lam[i] - lam[j] * lam[j];
        den *= rho[i] * rho[i] - rho[j] * rho[j];
    }
    for (int i : short_roots) {
        num *= lam[i];
        den *= rho[i];
    }
    Rational q = num / den;
    if (denominator(q) != 1)
        throw std::logic_error("weyl dimension formula produced a non-integer");
    return numerator(q).convert_to<long long>();
}

long long dim_weyl_m(const MWeight& sigma, const Dimension& dim) {
    const int n = dim.n;
    // Roots of D_n live on coordinates 2..n+1; index from 0 over those.
    std::vector<Rational> lam(n), rho(n);
    auto rho_full = rho_vector(dim);
    for (int i = 0; i < n; ++i) {
        rho[i] = rho_full[i + 1];
        lam[i] = sigma.k[i] + rho[i];
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    return weyl_quotient(lam, rho, pairs, {});
}

long long dim_weyl_k(const KWeight& nu, const Dimension& dim) {
    const int n = dim.n;
    // K = SO(2n+1) or Spin(2n+1): type B_n with rho_j = n - j + 1/2.
    std::vector<Rational> lam(n), rho(n);
    for (int i = 0; i < n; ++i) {
        rho[i] = Rational(2 * (n - i) - 1, 2);
        lam[i] = nu.k[i] + rho[i];
    }
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> shorts;
    for (int i = 0; i < n; ++i) {
        shorts.push_back(i);
        for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
    }
    return weyl_quotient(lam, rho, pairs, shorts);
}

bool is_theta_invariant(const GWeight& tau) { return tau.k.back() == 0; }

std::vector<MWeight> branching_sigmas(const KWeight& nu, const Dimension& dim) {
    const int n = dim.n;
    std::vector<MWeight> out;
    std::vector<Rational> cur(n);
    // Entry i of sigma ranges over nu-interlacing values in steps of 1,
    // staying in the integrality class of nu.
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            out.emplace_back(cur, dim);
            return;
        }
        Rational hi = nu.k[i];
        Rational lo = (i + 1 < n) ? nu.k[i + 1] : -nu.k[i];
        for (Rational v = lo; v <= hi; v += 1) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(),
              [](const MWeight& a, const MWeight& b) { return a.k < b.k; });
    return out;
}

}  // namespace hyptor::rep
