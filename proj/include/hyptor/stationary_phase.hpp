#pragma once

#include "hyptor/truncated_series.hpp"

#include <functional>
#include <map>

namespace hyptor::stphase {

// Large-lambda expansion of I(lambda) = int e^{-lambda f} g log|x| dx:
// sum_k (a_k log lambda + b_k) lambda^{-m/2 - k/2}.
struct LogExpansion {
    struct Entry {
        int k;
        double a;
        double b;
    };
    int m = 0;
    std::vector<Entry> entries;  // sorted by k, unique k
};

// Coefficients of the expansion through k = N. Preconditions on f: zero
// constant and linear part, quadratic part exactly sum x_i^2, remainder
// R = f - |x|^2 of valuation >= 4. Requires the degree budget D >= 3N.
LogExpansion expand_log_integral(const series::TruncatedSeries<double>& f,
                                 const series::TruncatedSeries<double>& g, int order);

// Exact-mode log coefficients: returns k -> a_k / pi^{m/2} as exact
// rationals (the log-side coefficients are rational multiples of pi^{m/2}).
std::map<int, Rational> expand_log_coefficients_exact(const series::TruncatedSeries<Rational>& f,
                                                      const series::TruncatedSeries<Rational>& g,
                                                      int order);

double evaluate_expansion(const LogExpansion& e, double lambda);

using PointFunction = std::function<double(const std::vector<double>&)>;

struct OracleOptions {
    double abs_tol = 1e-12;
    int angular_nodes = 64;    // initial; doubled per refinement level
    int radial_nodes = 24;     // per panel; grows per refinement level
    int panels = 44;           // geometric panels toward rho = 0, ratio 1/2
    int max_refinements = 4;
};

struct OracleResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

// Direct numerical evaluation of int_{B(eps)} e^{-lambda f} g log|x| dx in
// polar coordinates: Gauss-Legendre in the angles, geometrically graded
// radial panels refined toward the integrable log singularity at 0.
// Supports m in {1, 2, 3}. Deterministic for fixed options.
OracleResult quadrature_oracle(int m, const PointFunction& f_eval, const PointFunction& g_eval,
                               double lambda, double eps, const OracleOptions& opts = {});

// C^2 bump: 1 on [0, eps/2], quintic smoothstep down to 0 at eps.
double radial_bump(double rho, double eps);

}  // namespace hyptor::stphase
