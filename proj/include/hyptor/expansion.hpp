#pragma once

#include "hyptor/rational.hpp"

#include <vector>

namespace hyptor {

// One term c * t^beta or c * t^beta * log t of a small-time expansion,
// valid on (0, 1].
struct ExpansionTerm {
    Rational beta;
    double c = 0.0;
    bool has_log = false;
};

// Terms with strictly increasing exponents; log and non-log terms with the
// same exponent are adjacent (non-log first).
struct SmallTimeExpansion {
    std::vector<ExpansionTerm> terms;

    void add(const Rational& beta, double c, bool has_log);
    double eval(double t) const;
    // Truncate to exponents beta <= cutoff.
    SmallTimeExpansion truncated(const Rational& cutoff) const;
    // Multiply by exp(-shift * t), re-expanding the exponential; exponents
    // beyond max_beta are dropped.
    SmallTimeExpansion shifted_by_exp(double shift, const Rational& max_beta) const;
    SmallTimeExpansion operator+(const SmallTimeExpansion& other) const;
    SmallTimeExpansion scaled(double factor) const;
};

}  // namespace hyptor
