#pragma once

#include "hyptor/expansion.hpp"
#include "hyptor/rep_theory.hpp"

#include <complex>
#include <vector>

namespace hyptor::plancherel {

// Even polynomial P_sigma(z) of degree 2n. Coefficients are stored as exact
// rationals indexed by the power of z^2; the normalization c_n multiplies
// them only at evaluation time.
struct PlancherelPolynomial {
    rep::MWeight m_weight;
    rep::Dimension dim;
    double c_n;
    std::vector<Rational> even_coeffs;  // coefficient of z^{2k} at index k, times c_n

    int degree() const { return 2 * (static_cast<int>(even_coeffs.size()) - 1); }
    // Coefficient of z^{2k} as a double (includes c_n).
    double coeff(int k) const { return c_n * to_double(even_coeffs.at(k)); }
    std::complex<double> eval(std::complex<double> z) const;
    // P(i lambda), real for real lambda.
    double eval_imag(double lambda) const;
};

// P_sigma(z) = -c_n prod_{alpha in D_{n+1}^+} <z e_1 + Lambda(sigma) + rho_M, alpha>
//                                             / <rho_G, alpha>.
PlancherelPolynomial build_plancherel(const rep::MWeight& sigma, const rep::Dimension& dim,
                                      double c_n);

// Small-time expansion of vol * sum_sigma mult e^{t c(sigma)}
// int_R e^{-t lambda^2} P_sigma(i lambda) d lambda, as
// sum_{j=0..N} a_j t^{-d/2+j} (no log terms).
SmallTimeExpansion identity_expansion(double vol,
                                      const std::vector<std::pair<rep::MWeight, int>>& sigmas,
                                      const rep::Dimension& dim, double c_n, int order);

// Direct numeric value of the same quantity (closed-form Gaussian moments,
// exact exponential factors).
double identity_term(double t, double vol,
                     const std::vector<std::pair<rep::MWeight, int>>& sigmas,
                     const rep::Dimension& dim, double c_n);

}  // namespace hyptor::plancherel
