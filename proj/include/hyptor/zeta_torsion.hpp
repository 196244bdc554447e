#pragma once

#include "hyptor/expansion.hpp"
#include "hyptor/rep_theory.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace hyptor::zeta {

// Raised when the small-time expansion carries a t^0 log t term, which would
// make the Mellin transform singular at s = 0.
struct NotHolomorphicError : std::domain_error {
    explicit NotHolomorphicError(const std::string& msg) : std::domain_error(msg) {}
};

struct Eigenvalue {
    double lambda = 0.0;
    double mult = 1.0;
};

// Continuous-spectrum block: the intertwining-trace integrand sampled on a
// symmetric lambda grid, one row per sigma, with the Casimir shifts and the
// quarter-trace constants at lambda = 0.
struct ContinuousPart {
    std::vector<double> grid;
    std::vector<std::vector<double>> values;  // one row per shift
    std::vector<double> shifts;               // e^{-t shift} factors
    std::vector<double> c_zero;               // Tr C(sigma, nu, 0), paired with shifts
};

struct SpectralData {
    std::vector<Eigenvalue> eigenvalues;
    double h = 0.0;  // dimension of the L^2 kernel
    std::optional<ContinuousPart> continuous;

    void validate() const;
};

// Spectral-side regularized trace:
//   sum_j mult_j e^{-t lambda_j}
//   + sum_q (c_zero_q / 4) e^{-t shift_q}
//   - (1/4pi) sum_q e^{-t shift_q} int e^{-t lambda^2} W_q(lambda) d lambda,
// the integral by the trapezoid rule on the given grid.
double regularized_trace_spectral(double t, const SpectralData& data);

// Multiplication by e^{-t tau(Omega)}: passes from e^{-t A_nu} to the Hodge
// Laplacian heat trace.
double hodge_shift(double trace_value, const rep::GWeight& tau, const rep::Dimension& dim,
                   double t);

struct ZetaOptions {
    double t_min = 1e-8;     // numeric Mellin cut near 0
    double t_max = 50.0;     // large-time truncation
    double quad_tol = 1e-11;
    // Large-time tail: exponential decay (default), or explicit coefficients
    // c_j of sum_j c_j t^{-j/2} applied beyond t_max.
    std::vector<double> tail_coeffs;
    double holomorphy_tol = 1e-10;
};

struct ZetaResult {
    double zeta0 = 0.0;
    double zeta_prime0 = 0.0;
    // Diagnostics
    double below_cut_estimate = 0.0;  // first omitted size at t_min
    double tail_estimate = 0.0;       // |trace(t_max) - h|
};

// zeta(0) and zeta'(0) of the Mellin transform of trace_eval(t) - h:
// the expansion terms with beta <= 0 are integrated in closed form on (0,1]
// (1/(s+beta) and -1/(s+beta)^2), the remainder numerically in log t, the
// beta > 0 terms complete the (0, t_min] stub in closed form, and
// 1/Gamma(s) = s + gamma s^2 + O(s^3) assembles the values at s = 0.
ZetaResult zeta_values(const std::function<double(double)>& trace_eval,
                       const SmallTimeExpansion& expansion, double h,
                       const ZetaOptions& opts = {});

// det = exp(-zeta'(0)).
double regularized_det(double zeta_prime0);

// log T = sum_{p=1..d} (-1)^{p+1} (p/2) log det_p; dets indexed p = 1..d.
double torsion_assembly(const std::vector<double>& dets, int d);

}  // namespace hyptor::zeta
