#pragma once

#include "hyptor/truncated_series.hpp"

namespace hyptor::series {

inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// Gamma at half-integer and integer arguments, by exact recursion from
// Gamma(1/2) = sqrt(pi). Argument is passed as twice_x = 2x, twice_x >= 1.
double gamma_half(int twice_x);

// Digamma at half-integer and integer arguments (twice_x = 2x >= 1), by
// recursion from psi(1/2) = -gamma - 2 log 2 and psi(1) = -gamma.
double digamma_half(int twice_x);

// G_alpha = int_{R^m} exp(-|y|^2) y^alpha dy = prod_i Gamma((alpha_i+1)/2)
// when all alpha_i are even, 0 otherwise.
double gauss_moment(const MultiIndex& alpha);

// Exact rational part of G_alpha: G_alpha = gauss_moment_pi_ratio * pi^{m/2}.
// Valid when all alpha_i are even (the nonzero case).
Rational gauss_moment_pi_ratio(const MultiIndex& alpha);

// L_alpha = int_{R^m} exp(-|y|^2) y^alpha log|y| dy
//         = (1/2) psi((m+|alpha|)/2) G_alpha,  0 for odd alpha.
double gauss_log_moment(const MultiIndex& alpha, int m);

// int_{R^m} exp(-lambda |x|^2) x^alpha log|x| dx
//   = lambda^{-(m+|alpha|)/2} (L_alpha - (1/2) G_alpha log lambda).
double scaled_log_moment(const MultiIndex& alpha, int m, double lambda);

}  // namespace hyptor::series
