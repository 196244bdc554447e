#include "hyptor/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hyptor {

static bool term_less(const ExpansionTerm& a, const ExpansionTerm& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    return a.has_log < b.has_log;
}

void SmallTimeExpansion::add(const Rational& beta, double c, bool has_log) {
    auto it = std::find_if(terms.begin(), terms.end(), [&](const ExpansionTerm& t) {
        return t.beta == beta && t.has_log == has_log;
    });
    if (it != terms.end()) {
        it->c += c;
    } else if (c != 0.0) {
        terms.push_back({beta, c, has_log});
        std::sort(terms.begin(), terms.end(), term_less);
    }
}

double SmallTimeExpansion::eval(double t) const {
    if (t <= 0.0) throw std::domain_error("SmallTimeExpansion::eval: t must be positive");
    double log_t = std::log(t), sum = 0.0;
    for (const auto& term : terms) {
        double v = term.c * std::pow(t, to_double(term.beta));
        if (term.has_log) v *= log_t;
        sum += v;
    }
    return sum;
}

SmallTimeExpansion SmallTimeExpansion::truncated(const Rational& cutoff) const {
    SmallTimeExpansion out;
    for (const auto& term : terms)
        if (term.beta <= cutoff) out.terms.push_back(term);
    return out;
}

SmallTimeExpansion SmallTimeExpansion::shifted_by_exp(double shift, const Rational& max_beta) const {
    SmallTimeExpansion out;
    for (const auto& term : terms) {
        double fact = 1.0, spow = 1.0;
        for (int i = 0;; ++i) {
            Rational beta = term.beta + i;
            if (beta > max_beta) break;
            out.add(beta, term.c * spow / fact, term.has_log);
            spow *= -shift;
            fact *= (i + 1);
        }
    }
    return out;
}

SmallTimeExpansion SmallTimeExpansion::operator+(const SmallTimeExpansion& other) const {
    SmallTimeExpansion out = *this;
    for (const auto& term : other.terms) out.add(term.beta, term.c, term.has_log);
    return out;
}

SmallTimeExpansion SmallTimeExpansion::scaled(double factor) const {
    SmallTimeExpansion out;
    for (const auto& term : terms) out.terms.push_back({term.beta, term.c * factor, term.has_log});
    return out;
}

}  // namespace hyptor
