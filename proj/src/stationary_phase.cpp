#include "hyptor/stationary_phase.hpp"

#include "hyptor/moments.hpp"
#include "hyptor/quadrature.hpp"

#include <cmath>

namespace hyptor::stphase {

namespace {

// Splits f into its quadratic reference part and the remainder R, enforcing
// the preconditions. T is double or Rational.
template <typename T>
series::TruncatedSeries<T> remainder_part(const series::TruncatedSeries<T>& f) {
    const int m = f.vars();
    series::TruncatedSeries<T> r(m, f.max_degree());
    for (const auto& [alpha, c] : f.terms()) {
        int deg = series::total_degree(alpha);
        if (deg <= 1) throw std::invalid_argument("expand_log_integral: f has constant or linear terms");
        if (deg == 2) {
            bool pure_square = false;
            for (int i = 0; i < m; ++i)
                if (alpha[i] == 2) pure_square = true;
            if (!pure_square || c != T(1))
                throw std::invalid_argument("expand_log_integral: quadratic part of f must be exactly |x|^2");
            continue;
        }
        if (deg == 3)
            throw std::invalid_argument("expand_log_integral: remainder of f must have valuation >= 4");
        r.set(alpha, c);
    }
    // Every coordinate square must be present with coefficient one.
    for (int i = 0; i < m; ++i) {
        series::MultiIndex sq(m, 0);
        sq[i] = 2;
        if (f.coefficient(sq) != T(1))
            throw std::invalid_argument("expand_log_integral: quadratic part of f must be exactly |x|^2");
    }
    return r;
}

template <typename T>
void check_budget(const series::TruncatedSeries<T>& f, const series::TruncatedSeries<T>& g,
                  int order) {
    if (order < 0) throw std::invalid_argument("expand_log_integral: order >= 0 required");
    if (f.vars() != g.vars() || f.max_degree() != g.max_degree())
        throw std::invalid_argument("expand_log_integral: f and g must share (m, D)");
    if (f.max_degree() < 3 * order)
        throw std::invalid_argument("expand_log_integral: degree budget D >= 3N required");
}

}  // namespace

LogExpansion expand_log_integral(const series::TruncatedSeries<double>& f,
                                 const series::TruncatedSeries<double>& g, int order) {
    check_budget(f, g, order);
    const int m = f.vars();
    auto r = remainder_part(f);
    LogExpansion out;
    out.m = m;
    std::vector<double> a(order + 1, 0.0), b(order + 1, 0.0);
    // P_j = (-R)^j g / j!; the monomial c x^alpha contributes
    // c lambda^j lambda^{-(m+|alpha|)/2} (L_alpha - G_alpha/2 log lambda),
    // entering the entry k = |alpha| - 2j.
    const int cap = std::min(f.max_degree(), 2 * order);
    auto p = g.truncated(cap);
    auto r_cap = r.truncated(cap).scaled(-1.0);
    for (int j = 0; 2 * j <= order; ++j) {
        if (j > 0) p = (p * r_cap).scaled(1.0 / j);
        for (const auto& [alpha, c] : p.terms()) {
            int k = series::total_degree(alpha) - 2 * j;
            if (k > order) continue;
            bool odd = false;
            for (int ai : alpha)
                if (ai % 2) odd = true;
            if (odd) continue;
            double gm = series::gauss_moment(alpha);
            a[k] += c * (-0.5) * gm;
            b[k] += c * series::gauss_log_moment(alpha, m);
        }
    }
    for (int k = 0; k <= order; ++k) out.entries.push_back({k, a[k], b[k]});
    return out;
}

std::map<int, Rational> expand_log_coefficients_exact(const series::TruncatedSeries<Rational>& f,
                                                      const series::TruncatedSeries<Rational>& g,
                                                      int order) {
    check_budget(f, g, order);
    auto r = remainder_part(f);
    std::map<int, Rational> a;
    for (int k = 0; k <= order; ++k) a[k] = 0;
    const int cap = std::min(f.max_degree(), 2 * order);
    auto p = g.truncated(cap);
    auto r_cap = r.truncated(cap).scaled(Rational(-1));
    for (int j = 0; 2 * j <= order; ++j) {
        if (j > 0) p = (p * r_cap).scaled(Rational(1, j));
        for (const auto& [alpha, c] : p.terms()) {
            int k = series::total_degree(alpha) - 2 * j;
            if (k > order) continue;
            Rational ratio = series::gauss_moment_pi_ratio(alpha);
            if (ratio == 0) continue;
            a[k] += c * Rational(-1, 2) * ratio;
        }
    }
    return a;
}

double evaluate_expansion(const LogExpansion& e, double lambda) {
    if (lambda <= 0.0) throw std::domain_error("evaluate_expansion: lambda must be positive");
    double log_l = std::log(lambda), sum = 0.0;
    for (const auto& entry : e.entries)
        sum += (entry.a * log_l + entry.b) * std::pow(lambda, -0.5 * (e.m + entry.k));
    return sum;
}

double radial_bump(double rho, double eps) {
    double s = (rho - 0.5 * eps) / (0.5 * eps);
    if (s <= 0.0) return 1.0;
    if (s >= 1.0) return 0.0;
    return 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s));
}

namespace {

// Mean of e^{-lambda f} g over the sphere of radius rho (surface measure
// divided out is NOT applied; this returns the full angular integral).
double angular_integral(int m, const PointFunction& f_eval, const PointFunction& g_eval,
                        double lambda, double rho, int nodes) {
    if (m == 1) {
        double left = 0.0, right = 0.0;
        std::vector<double> x{rho};
        right = g_eval(x) * std::exp(-lambda * f_eval(x));
        x[0] = -rho;
        left = g_eval(x) * std::exp(-lambda * f_eval(x));
        return left + right;
    }
    if (m == 2) {
        const auto& rule = quad::gauss_legendre(nodes);
        double sum = 0.0;
        std::vector<double> x(2);
        for (int i = 0; i < nodes; ++i) {
            double theta = M_PI * (rule.nodes[i] + 1.0);  // maps (-1,1) to (0, 2pi)
            x[0] = rho * std::cos(theta);
            x[1] = rho * std::sin(theta);
            sum += rule.weights[i] * M_PI * g_eval(x) * std::exp(-lambda * f_eval(x));
        }
        return sum;
    }
    if (m == 3) {
        const auto& rule = quad::gauss_legendre(nodes);
        double sum = 0.0;
        std::vector<double> x(3);
        for (int i = 0; i < nodes; ++i) {
            double c = rule.nodes[i];  // cos(phi)
            double s = std::sqrt(std::max(0.0, 1.0 - c * c));
            for (int jj = 0; jj < nodes; ++jj) {
                double theta = M_PI * (rule.nodes[jj] + 1.0);
                x[0] = rho * s * std::cos(theta);
                x[1] = rho * s * std::sin(theta);
                x[2] = rho * c;
                sum += rule.weights[i] * rule.weights[jj] * M_PI * g_eval(x) *
                       std::exp(-lambda * f_eval(x));
            }
        }
        return sum;
    }
    throw std::invalid_argument("quadrature_oracle: only m in {1,2,3} supported");
}

double oracle_pass(int m, const PointFunction& f_eval, const PointFunction& g_eval, double lambda,
                   double eps, int panels, int radial_nodes, int angular_nodes) {
    // Radial integral of rho^{m-1} log(rho) * angular(rho) over geometric
    // panels [eps 2^{-i-1}, eps 2^{-i}] plus the terminal panel [0, ...].
    const auto& rule = quad::gauss_legendre(radial_nodes);
    double total = 0.0;
    for (int i = 0; i <= panels; ++i) {
        double hi = eps * std::pow(0.5, i);
        double lo = (i == panels) ? 0.0 : hi * 0.5;
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        double panel = 0.0;
        for (int q = 0; q < radial_nodes; ++q) {
            double rho = mid + half * rule.nodes[q];
            if (rho <= 0.0) continue;
            double w = rule.weights[q] * half;
            panel += w * std::pow(rho, m - 1) * std::log(rho) *
                     angular_integral(m, f_eval, g_eval, lambda, rho, angular_nodes);
        }
        total += panel;
    }
    return total;
}

}  // namespace

OracleResult quadrature_oracle(int m, const PointFunction& f_eval, const PointFunction& g_eval,
                               double lambda, double eps, const OracleOptions& opts) {
    if (lambda <= 0.0) throw std::domain_error("quadrature_oracle: lambda must be positive");
    if (eps <= 0.0) throw std::domain_error("quadrature_oracle: eps must be positive");
    OracleResult res;
    double prev = oracle_pass(m, f_eval, g_eval, lambda, eps, opts.panels, opts.radial_nodes,
                              opts.angular_nodes);
    for (int level = 1; level <= opts.max_refinements; ++level) {
        double cur = oracle_pass(m, f_eval, g_eval, lambda, eps, opts.panels + 8 * level,
                                 opts.radial_nodes + 8 * level, opts.angular_nodes * (1 + level));
        res.error_estimate = std::abs(cur - prev);
        res.value = cur;
        if (res.error_estimate <= opts.abs_tol) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.converged = false;
    return res;
}

}  // namespace hyptor::stphase
