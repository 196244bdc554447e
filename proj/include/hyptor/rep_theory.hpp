#pragma once

#include "hyptor/rational.hpp"

#include <vector>

namespace hyptor::rep {

enum class GroupKind { SO0, Spin };

// Ambient dimension d = 2n+1 of the hyperbolic space, together with the
// choice of the linear group (SO0) or its double cover (Spin).
struct Dimension {
    int n;
    GroupKind kind;

    explicit Dimension(int n_, GroupKind kind_ = GroupKind::SO0) : n(n_), kind(kind_) {
        if (n < 1) throw std::invalid_argument("Dimension: need n >= 1 (d >= 3)");
    }
    int d() const { return 2 * n + 1; }
};

namespace detail {
// All entries integers, or all half-integers (odd numerator over 2).
bool uniform_integrality(const std::vector<Rational>& k, bool allow_half);
bool is_half_class(const std::vector<Rational>& k);
}  // namespace detail

// Highest weight of an irreducible representation of G, n+1 entries
// k_1 >= ... >= k_n >= |k_{n+1}|.
struct GWeight {
    std::vector<Rational> k;
    GWeight(std::vector<Rational> entries, const Dimension& dim);
};

// Highest weight of an irreducible representation of K, n entries
// k_2 >= ... >= k_{n+1} >= 0.
struct KWeight {
    std::vector<Rational> k;
    KWeight(std::vector<Rational> entries, const Dimension& dim);
};

// Highest weight of an irreducible representation of M, n entries
// k_2 >= ... >= k_n >= |k_{n+1}|.
struct MWeight {
    std::vector<Rational> k;
    MWeight(std::vector<Rational> entries, const Dimension& dim);
    bool operator==(const MWeight& other) const { return k == other.k; }
};

// rho_j = n+1-j for j = 1..n+1.
std::vector<Rational> rho_vector(const Dimension& dim);

// Action of the nontrivial restricted Weyl element: flips the sign of the
// last entry.
MWeight weyl_flip(const MWeight& sigma);

// Casimir scalar c(sigma) = sum_{j>=2} (k_j + rho_j)^2 - sum_j rho_j^2.
Rational casimir_sigma(const MWeight& sigma, const Dimension& dim);

// Casimir scalar tau(Omega) = sum_j (k_j + rho_j)^2 - sum_j rho_j^2.
Rational casimir_tau(const GWeight& tau, const Dimension& dim);

// Multiplicity of sigma in the restriction of nu to M; 0 or 1 by the
// interlacing branching law for SO(2n+1) > SO(2n).
int branching_multiplicity(const KWeight& nu, const MWeight& sigma);

// Weyl dimension formula over the positive roots of type D_n.
long long dim_weyl_m(const MWeight& sigma, const Dimension& dim);

// Weyl dimension formula over the positive roots of type B_n (dimension of
// the K-representation nu).
long long dim_weyl_k(const KWeight& nu, const Dimension& dim);

// True iff the weight is fixed by the Cartan involution twist, i.e.
// k_{n+1} = 0.
bool is_theta_invariant(const GWeight& tau);

// All M-weights with [nu:sigma] = 1, lexicographically ordered.
std::vector<MWeight> branching_sigmas(const KWeight& nu, const Dimension& dim);

}  // namespace hyptor::rep
