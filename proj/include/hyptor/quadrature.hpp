#pragma once

#include <functional>
#include <vector>

namespace hyptor::quad {

struct GaussLegendreRule {
    std::vector<double> nodes;    // on (-1, 1)
    std::vector<double> weights;
};

// Nodes and weights by Newton iteration on Legendre polynomials; cached per n.
const GaussLegendreRule& gauss_legendre(int n);

// Fixed Gauss-Legendre integral over [a, b].
double integrate_gl(const std::function<double(double)>& f, double a, double b, int n);

struct AdaptiveResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod (G7, K15) with interval bisection. Deterministic:
// intervals are processed in a fixed order.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol = 1e-12, double rel_tol = 1e-12,
                                  int max_intervals = 20000);

// Convenience wrapper that throws on non-convergence.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-12, double rel_tol = 1e-12);

}  // namespace hyptor::quad
