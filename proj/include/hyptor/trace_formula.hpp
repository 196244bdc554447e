#pragma once

#include "hyptor/expansion.hpp"
#include "hyptor/geometry.hpp"
#include "hyptor/rep_theory.hpp"
#include "hyptor/stationary_phase.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>

namespace hyptor::traceform {

// Closed-geodesic datum: length, primitive length, holonomy rotation angles,
// and (for d > 3) optional explicit character values tr sigma(m_gamma),
// keyed by the comma-joined sigma weight.
struct LengthSpectrumEntry {
    double ell = 0.0;
    double ell0 = 0.0;
    std::vector<double> angles;
    std::map<std::string, std::complex<double>> characters;
};

struct ManifoldData {
    rep::Dimension dim;
    double volume = 0.0;
    int kappa = 0;
    double C1 = 0.0;
    double C2 = 0.0;
    double c_n = 1.0;
    std::vector<LengthSpectrumEntry> spectrum;

    void validate() const;
};

// Character of the principal series on the heat test function:
// Theta_{sigma,lambda}(h_t) = e^{t(c(sigma) - lambda^2)}.
double character_heat(const rep::MWeight& sigma, double lambda, double t,
                      const rep::Dimension& dim);

// Character of the K-representation nu (d = 3 only) at the rotation angle
// theta; handles integer and half-integer highest weights.
double character_k_d3(const Rational& k, double theta);

// Hyperbolic contribution: sum over sigma and spectrum entries of
// (ell0 / 2pi) L(gamma, sigma) sqrt(pi/t) e^{t c(sigma)} e^{-ell^2/(4t)}.
double hyperbolic_term(double t, const ManifoldData& M, const std::vector<rep::MWeight>& sigmas);

// Parabolic T: sum_sigma dim(sigma) (1/2pi) sqrt(pi/t) e^{t c(sigma)}.
double parabolic_T_term(double t,
                        const std::vector<std::pair<rep::MWeight, long long>>& sigmas,
                        const rep::Dimension& dim);

// Its small-time expansion t^{-1/2} sum_{j<=order} b_j t^j.
SmallTimeExpansion parabolic_T_expansion(
    const std::vector<std::pair<rep::MWeight, long long>>& sigmas, const rep::Dimension& dim,
    int order);

// Heat-kernel amplitude model: Taylor jets of the coefficient functions
// a_i(n(x)) on R^{d-1}, i = 0..I_max. a_0 at x = 0 equals
// dim(nu) (4 pi)^{-d/2}.
struct HeatAmplitude {
    rep::KWeight nu;
    rep::Dimension dim;
    std::vector<series::TruncatedSeries<double>> coeffs;

    int i_max() const { return static_cast<int>(coeffs.size()) - 1; }
    void validate() const;
};

// tr nu(k(n(x))) j(x)^{-1/2} as an exact radial series in u = |x|^2
// (d = 3 built in; no (4 pi)^{-d/2} prefactor).
series::TruncatedSeries<Rational> amplitude0_radial_exact(const rep::KWeight& nu,
                                                          const rep::Dimension& dim,
                                                          int max_degree);

// a_0 as a multivariate jet, including the (4 pi)^{-d/2} prefactor.
series::TruncatedSeries<double> leading_amplitude(const rep::KWeight& nu,
                                                  const rep::Dimension& dim, int max_degree);

// Amplitude families for d = 3: all orders for the trivial nu (from the
// exact kernel, a_i = (4 pi)^{-3/2} (r/sinh r)(-1)^i / i!), leading order
// only otherwise.
HeatAmplitude exact_kernel_amplitudes(int i_max, int max_degree, const rep::Dimension& dim);
HeatAmplitude leading_only_amplitude(const rep::KWeight& nu, const rep::Dimension& dim,
                                     int max_degree);
HeatAmplitude default_amplitudes(const rep::KWeight& nu, const rep::Dimension& dim,
                                 int max_degree, int i_max);

// Small-time expansion of the weighted orbital integral:
// sum_{j<=order} c_j t^{(j-1)/2} log t + d_j t^{(j-1)/2}.
struct TprimeExpansion {
    struct Entry {
        int j;
        double c;
        double d;
    };
    std::vector<Entry> entries;

    double eval(double t) const;
    SmallTimeExpansion to_small_time() const;
};

// Requires order <= 2 * i_max + 1 (higher entries would need missing
// amplitudes) and enough series degree.
TprimeExpansion parabolic_Tprime_expansion(const HeatAmplitude& amp, int order);

// Exact-mode log coefficients c_j in units of pi^{m/2} (4 pi)^{-d/2}; the
// c_1 = 0 statement is checked on these exact rationals.
std::map<int, Rational> tprime_log_coefficients_exact(const rep::KWeight& nu,
                                                      const rep::Dimension& dim, int order);

// Exact scalar heat kernel on H^3 (curvature -1):
// (4 pi t)^{-3/2} (r / sinh r) e^{-t} e^{-r^2/(4t)}.
double h3_scalar_kernel(double r, double t);

struct TprimeNumericOptions {
    double eps = 0.5;
    stphase::OracleOptions quadrature{};
};

// Numeric weighted-orbital value from the amplitude model:
// sum_i t^{-d/2+i} int_{B(eps)} e^{-r^2(x)/4t} psi a_i log|x| dx.
double parabolic_Tprime_numeric(double t, const HeatAmplitude& amp,
                                const TprimeNumericOptions& opts = {});

struct GeometricSideOptions {
    int amplitude_i_max = 8;
    int amplitude_degree = 12;
    TprimeNumericOptions tprime{};
};

struct GeometricSideResult {
    double identity = 0.0;
    double hyperbolic = 0.0;
    double parabolic_T = 0.0;
    double parabolic_Tprime = 0.0;
    double total = 0.0;
};

// Regularized trace of e^{-t A_nu} from the geometric side:
// I + H + C1 T + C2 T'.
GeometricSideResult geometric_side(double t, const ManifoldData& M, const rep::KWeight& nu,
                                   const GeometricSideOptions& opts = {});

// Combined small-time expansion of I + C1 T + C2 T' (the hyperbolic term is
// exponentially small and omitted).
SmallTimeExpansion geometric_side_expansion(const ManifoldData& M, const rep::KWeight& nu,
                                            int order, const GeometricSideOptions& opts = {});

std::string sigma_key(const rep::MWeight& sigma);

}  // namespace hyptor::traceform
