#include "hyptor/moments.hpp"

#include <cmath>

namespace hyptor::series {

double gamma_half(int twice_x) {
    if (twice_x < 1) throw std::invalid_argument("gamma_half: argument must be >= 1/2");
    if (twice_x % 2 == 0) {
        double g = 1.0;
        for (int k = 2; k < twice_x / 2; ++k) g *= k;
        return g;  // Gamma(n) = (n-1)!
    }
    double g = std::sqrt(M_PI);
    // Gamma(x+1) = x Gamma(x) starting from x = 1/2
    for (int t = 1; t < twice_x; t += 2) g *= 0.5 * t;
    return g;
}

double digamma_half(int twice_x) {
    if (twice_x < 1) throw std::invalid_argument("digamma_half: argument must be >= 1/2");
    double psi;
    int t;
    if (twice_x % 2 == 0) {
        psi = -kEulerGamma;
        t = 2;  // value at x = 1
    } else {
        psi = -kEulerGamma - 2.0 * std::log(2.0);
        t = 1;  // value at x = 1/2
    }
    for (; t < twice_x; t += 2) psi += 2.0 / t;  // psi(x+1) = psi(x) + 1/x
    return psi;
}

double gauss_moment(const MultiIndex& alpha) {
    double g = 1.0;
    for (int a : alpha) {
        if (a % 2 != 0) return 0.0;
        g *= gamma_half(a + 1);
    }
    return g;
}

Rational gauss_moment_pi_ratio(const MultiIndex& alpha) {
    Rational r = 1;
    for (int a : alpha) {
        if (a % 2 != 0) return Rational(0);
        // Gamma(a/2 + 1/2) = (a-1)!! / 2^{a/2} * sqrt(pi)
        r *= Rational(double_factorial(a - 1), BigInt(1) << (a / 2));
    }
    return r;
}

double gauss_log_moment(const MultiIndex& alpha, int m) {
    if (static_cast<int>(alpha.size()) != m)
        throw std::invalid_argument("gauss_log_moment: index arity mismatch");
    for (int a : alpha)
        if (a % 2 != 0) return 0.0;
    int total = m + total_degree(alpha);
    return 0.5 * digamma_half(total) * gauss_moment(alpha);
}

double scaled_log_moment(const MultiIndex& alpha, int m, double lambda) {
    if (lambda <= 0.0) throw std::domain_error("scaled_log_moment: lambda must be positive");
    for (int a : alpha)
        if (a % 2 != 0) return 0.0;
    double power = -0.5 * (m + total_degree(alpha));
    double l = gauss_log_moment(alpha, m);
    double g = gauss_moment(alpha);
    return std::pow(lambda, power) * (l - 0.5 * g * std::log(lambda));
}

TruncatedSeries<double> to_double_series(const TruncatedSeries<Rational>& s) {
    TruncatedSeries<double> out(s.vars(), s.max_degree());
    for (const auto& [alpha, c] : s.terms()) out.set(alpha, to_double(c));
    return out;
}

}  // namespace hyptor::series
