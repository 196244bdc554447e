#include "hyptor/zeta_torsion.hpp"

#include "hyptor/moments.hpp"
#include "hyptor/quadrature.hpp"

#include <cmath>

namespace hyptor::zeta {

void SpectralData::validate() const {
    for (const auto& ev : eigenvalues)
        if (ev.lambda < 0.0) throw std::invalid_argument("SpectralData: eigenvalues must be >= 0");
    if (h < 0.0) throw std::invalid_argument("SpectralData: kernel dimension must be >= 0");
    if (continuous) {
        const auto& c = *continuous;
        const size_t n = c.grid.size();
        if (n < 2) throw std::invalid_argument("SpectralData: continuous grid too short");
        for (size_t i = 0; i + 1 < n; ++i)
            if (c.grid[i] >= c.grid[i + 1])
                throw std::invalid_argument("SpectralData: grid must be strictly increasing");
        for (size_t i = 0; i < n; ++i)
            if (std::abs(c.grid[i] + c.grid[n - 1 - i]) > 1e-12 * std::max(1.0, std::abs(c.grid.back())))
                throw std::invalid_argument("SpectralData: grid must be symmetric about 0");
        if (c.values.size() != c.shifts.size())
            throw std::invalid_argument("SpectralData: one sampled row per shift required");
        if (!c.c_zero.empty() && c.c_zero.size() != c.shifts.size())
            throw std::invalid_argument("SpectralData: c_zero must pair with shifts");
        for (const auto& row : c.values)
            if (row.size() != n)
                throw std::invalid_argument("SpectralData: sampled row length must match grid");
    }
}

double regularized_trace_spectral(double t, const SpectralData& data) {
    if (t <= 0.0) throw std::domain_error("regularized_trace_spectral: t must be positive");
    data.validate();
    double total = 0.0;
    for (const auto& ev : data.eigenvalues) total += ev.mult * std::exp(-t * ev.lambda);
    if (data.continuous) {
        const auto& c = *data.continuous;
        for (size_t q = 0; q < c.shifts.size(); ++q) {
            double shift_factor = std::exp(-t * c.shifts[q]);
            if (!c.c_zero.empty()) total += 0.25 * c.c_zero[q] * shift_factor;
            // trapezoid over the symmetric grid
            double integral = 0.0;
            for (size_t i = 0; i + 1 < c.grid.size(); ++i) {
                double l0 = c.grid[i], l1 = c.grid[i + 1];
                double f0 = std::exp(-t * l0 * l0) * c.values[q][i];
                double f1 = std::exp(-t * l1 * l1) * c.values[q][i + 1];
                integral += 0.5 * (f0 + f1) * (l1 - l0);
            }
            total -= shift_factor * integral / (4.0 * M_PI);
        }
    }
    return total;
}

double hodge_shift(double trace_value, const rep::GWeight& tau, const rep::Dimension& dim,
                   double t) {
    if (t <= 0.0) throw std::domain_error("hodge_shift: t must be positive");
    return trace_value * std::exp(-t * to_double(rep::casimir_tau(tau, dim)));
}

namespace {

// int_0^delta t^{beta-1} dt, beta > 0 (the s = 0 value of the Mellin stub).
double mellin_stub(double beta, double delta) { return std::pow(delta, beta) / beta; }

// int_0^delta t^{beta-1} log t dt.
double mellin_stub_log(double beta, double delta) {
    double p = std::pow(delta, beta);
    return p * std::log(delta) / beta - p / (beta * beta);
}

}  // namespace

ZetaResult zeta_values(const std::function<double(double)>& trace_eval,
                       const SmallTimeExpansion& expansion, double h, const ZetaOptions& opts) {
    // Reject a genuine t^0 log t term: the Mellin transform would carry a
    // double pole at s = 0 and zeta would not extend holomorphically there.
    for (const auto& term : expansion.terms) {
        if (term.beta == 0 && term.has_log && std::abs(term.c) > opts.holomorphy_tol)
            throw NotHolomorphicError(
                "zeta_values: t^0 log t coefficient " + std::to_string(term.c) +
                " makes the zeta function singular at s = 0");
    }

    SmallTimeExpansion sing;  // beta <= 0, holomorphy-guard terms dropped
    std::vector<ExpansionTerm> positive;
    double c0 = 0.0;
    for (const auto& term : expansion.terms) {
        if (term.beta < 0) {
            sing.terms.push_back(term);
        } else if (term.beta == 0) {
            if (!term.has_log) {
                c0 = term.c;
                sing.terms.push_back(term);
            }
        } else {
            positive.push_back(term);
        }
    }

    // M(s) = B/s + C + D s + ... near s = 0 (the 1/s^2 part was rejected).
    double B = c0 - h;
    double C = 0.0;

    // Closed forms of the beta <= 0 terms over (0, 1].
    for (const auto& term : sing.terms) {
        if (term.beta == 0) continue;  // c0/s contributes only to B
        double beta = to_double(term.beta);
        if (!term.has_log)
            C += term.c / beta;
        else
            C += -term.c / (beta * beta);
    }

    // Numeric Mellin integral of the subtracted remainder on [t_min, 1],
    // in u = log t.
    auto remainder = [&](double t) { return trace_eval(t) - sing.eval(t); };
    double u_min = std::log(opts.t_min);
    C += quad::integrate([&](double u) { return remainder(std::exp(u)); }, u_min, 0.0,
                         opts.quad_tol, opts.quad_tol);

    // (0, t_min] completed in closed form from the beta > 0 terms.
    ZetaResult res;
    for (const auto& term : positive) {
        double beta = to_double(term.beta);
        C += term.c * (term.has_log ? mellin_stub_log(beta, opts.t_min)
                                    : mellin_stub(beta, opts.t_min));
    }
    if (!positive.empty()) {
        const auto& last = positive.back();
        res.below_cut_estimate =
            std::abs(last.c) * std::pow(opts.t_min, to_double(last.beta) + 1.0);
    }

    // Large time: numeric on [1, t_max] plus an explicit power tail if given.
    auto large = [&](double t) { return trace_eval(t) - h; };
    C += quad::integrate([&](double u) { return large(std::exp(u)); }, 0.0, std::log(opts.t_max),
                         opts.quad_tol, opts.quad_tol);
    res.tail_estimate = std::abs(large(opts.t_max));
    for (size_t idx = 0; idx < opts.tail_coeffs.size(); ++idx) {
        double j = static_cast<double>(idx + 1);
        // int_T^inf t^{s-1-j/2} dt at s = 0
        C += opts.tail_coeffs[idx] * std::pow(opts.t_max, -0.5 * j) * (2.0 / j);
    }

    res.zeta0 = B;
    res.zeta_prime0 = C + series::kEulerGamma * B;
    return res;
}

double regularized_det(double zeta_prime0) { return std::exp(-zeta_prime0); }

double torsion_assembly(const std::vector<double>& dets, int d) {
    if (static_cast<int>(dets.size()) != d)
        throw std::invalid_argument("torsion_assembly: expected one determinant per p = 1..d");
    double log_t = 0.0;
    for (int p = 1; p <= d; ++p) {
        double det = dets[p - 1];
        if (!(det > 0.0)) throw std::domain_error("torsion_assembly: determinants must be positive");
        double sign = (p % 2 == 1) ? 1.0 : -1.0;
        log_t += sign * 0.5 * p * std::log(det);
    }
    return log_t;
}

}  // namespace hyptor::zeta
