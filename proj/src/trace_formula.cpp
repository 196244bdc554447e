#include "hyptor/trace_formula.hpp"

#include "hyptor/moments.hpp"
#include "hyptor/plancherel.hpp"
#include "hyptor/quadrature.hpp"

#include <cmath>

namespace hyptor::traceform {

void ManifoldData::validate() const {
    if (volume <= 0.0) throw std::invalid_argument("ManifoldData: volume must be positive");
    if (kappa < 0) throw std::invalid_argument("ManifoldData: kappa must be nonnegative");
    if (kappa == 0 && (C1 != 0.0 || C2 != 0.0))
        throw std::invalid_argument("ManifoldData: C1 = C2 = 0 required when kappa = 0");
    if (c_n <= 0.0) throw std::invalid_argument("ManifoldData: c_n must be positive");
    for (const auto& e : spectrum) {
        if (e.ell <= 0.0 || e.ell0 <= 0.0)
            throw std::invalid_argument("ManifoldData: geodesic lengths must be positive");
        double ratio = e.ell / e.ell0;
        if (std::abs(ratio - std::nearbyint(ratio)) > 1e-9)
            throw std::invalid_argument("ManifoldData: ell must be a multiple of ell0");
        if (static_cast<int>(e.angles.size()) != dim.n)
            throw std::invalid_argument("ManifoldData: expected n holonomy angles per entry");
    }
}

double character_heat(const rep::MWeight& sigma, double lambda, double t,
                      const rep::Dimension& dim) {
    if (t <= 0.0) throw std::domain_error("character_heat: t must be positive");
    return std::exp(t * (to_double(rep::casimir_sigma(sigma, dim)) - lambda * lambda));
}

double character_k_d3(const Rational& k, double theta) {
    if (k < 0) throw std::invalid_argument("character_k_d3: highest weight must be >= 0");
    if (denominator(k) == 1) {
        long long kk = numerator(k).convert_to<long long>();
        double chi = 1.0;
        for (long long j = 1; j <= kk; ++j) chi += 2.0 * std::cos(j * theta);
        return chi;
    }
    // half-integer: sum over j = 1/2, 3/2, ..., k
    long long top = numerator(k).convert_to<long long>();  // 2k
    double chi = 0.0;
    for (long long twice_j = 1; twice_j <= top; twice_j += 2)
        chi += 2.0 * std::cos(0.5 * twice_j * theta);
    return chi;
}

static std::complex<double> sigma_character_on_entry(const rep::MWeight& sigma,
                                                     const LengthSpectrumEntry& entry,
                                                     const rep::Dimension& dim) {
    auto it = entry.characters.find(sigma_key(sigma));
    if (it != entry.characters.end()) return it->second;
    if (dim.n == 1) {
        // M = SO(2) or Spin(2): sigma = (k) has character e^{i k theta}.
        double k = to_double(sigma.k[0]);
        return std::polar(1.0, k * entry.angles[0]);
    }
    throw std::domain_error("hyperbolic_term: character values required for d > 3 (sigma " +
                            sigma_key(sigma) + ")");
}

double hyperbolic_term(double t, const ManifoldData& M, const std::vector<rep::MWeight>& sigmas) {
    if (t <= 0.0) throw std::domain_error("hyperbolic_term: t must be positive");
    const int n = M.dim.n;
    std::complex<double> total = 0.0;
    for (const auto& sigma : sigmas) {
        double c_sig = to_double(rep::casimir_sigma(sigma, M.dim));
        for (const auto& entry : M.spectrum) {
            double det = 1.0;
            double q = std::exp(-entry.ell);
            for (double theta : entry.angles)
                det *= (1.0 - q * std::cos(theta)) * (1.0 - q * std::cos(theta)) +
                       q * q * std::sin(theta) * std::sin(theta);
            std::complex<double> l_factor = std::conj(sigma_character_on_entry(sigma, entry, M.dim)) *
                                            std::exp(-n * entry.ell) / det;
            // int e^{t(c - l^2)} e^{-i ell l} dl = sqrt(pi/t) e^{tc} e^{-ell^2/4t}
            double gauss = std::sqrt(M_PI / t) * std::exp(t * c_sig) *
                           std::exp(-entry.ell * entry.ell / (4.0 * t));
            total += (entry.ell0 / (2.0 * M_PI)) * l_factor * gauss;
        }
    }
    return total.real();
}

double parabolic_T_term(double t,
                        const std::vector<std::pair<rep::MWeight, long long>>& sigmas,
                        const rep::Dimension& dim) {
    if (t <= 0.0) throw std::domain_error("parabolic_T_term: t must be positive");
    double total = 0.0;
    for (const auto& [sigma, dim_sigma] : sigmas) {
        double c_sig = to_double(rep::casimir_sigma(sigma, dim));
        total += dim_sigma * (1.0 / (2.0 * M_PI)) * std::sqrt(M_PI / t) * std::exp(t * c_sig);
    }
    return total;
}

SmallTimeExpansion parabolic_T_expansion(
    const std::vector<std::pair<rep::MWeight, long long>>& sigmas, const rep::Dimension& dim,
    int order) {
    if (order < 0) throw std::invalid_argument("parabolic_T_expansion: order >= 0 required");
    SmallTimeExpansion e;
    for (const auto& [sigma, dim_sigma] : sigmas) {
        double c_sig = to_double(rep::casimir_sigma(sigma, dim));
        double fact = 1.0, cpow = 1.0;
        for (int j = 0; j <= order; ++j) {
            e.add(Rational(2 * j - 1, 2),
                  dim_sigma / (2.0 * std::sqrt(M_PI)) * cpow / fact, false);
            cpow *= c_sig;
            fact *= (j + 1);
        }
    }
    return e;
}

void HeatAmplitude::validate() const {
    if (coeffs.empty()) throw std::invalid_argument("HeatAmplitude: at least a_0 required");
    const int m = dim.d() - 1;
    for (const auto& s : coeffs)
        if (s.vars() != m) throw std::invalid_argument("HeatAmplitude: series must live on R^{d-1}");
    double expected = rep::dim_weyl_k(nu, dim) * std::pow(4.0 * M_PI, -0.5 * dim.d());
    double got = coeffs[0].coefficient(series::MultiIndex(m, 0));
    if (std::abs(got - expected) > 1e-10 * std::abs(expected))
        throw std::invalid_argument("HeatAmplitude: a_0(0) must equal dim(nu) (4 pi)^{-d/2}");
}

series::TruncatedSeries<Rational> amplitude0_radial_exact(const rep::KWeight& nu,
                                                          const rep::Dimension& dim,
                                                          int max_degree) {
    bool trivial = true;
    for (const auto& e : nu.k)
        if (e != 0) trivial = false;
    auto jac = geom::jacobian_invsqrt_series(max_degree, dim.d());
    if (trivial) return jac;
    if (dim.n != 1)
        throw std::domain_error("amplitude0_radial_exact: built-in characters cover d = 3 only");

    const Rational k = nu.k[0];
    auto c = geom::rotation_angle_cos_series(max_degree);
    series::TruncatedSeries<Rational> one(1, max_degree);
    one.set({0}, Rational(1));
    series::TruncatedSeries<Rational> chi(1, max_degree);
    if (denominator(k) == 1) {
        // chi = 1 + 2 sum_{j=1..k} T_j(cos theta), Chebyshev recurrence on series
        long long kk = numerator(k).convert_to<long long>();
        chi = one;
        auto t_prev = one, t_cur = c;
        for (long long j = 1; j <= kk; ++j) {
            chi += t_cur.scaled(Rational(2));
            auto t_next = (c * t_cur).scaled(Rational(2)) - t_prev;
            t_prev = t_cur;
            t_cur = t_next;
        }
    } else {
        // Half-integer weights: cos((l+1/2)theta) = (T_l - (1-c) U_{l-1}) cos(theta/2)
        // with cos(theta/2) = (1 + u/4)^{-1/2}.
        series::TruncatedSeries<Rational> half(1, max_degree);
        Rational coeff(1);
        half.set({0}, coeff);
        for (int j = 1; j <= max_degree; ++j) {
            coeff *= Rational(-(2 * j - 1), 8 * j);  // binom(-1/2, j) / 4^j recurrence
            half.set({j}, coeff);
        }
        long long lmax = (numerator(k).convert_to<long long>() - 1) / 2;  // k - 1/2
        auto one_minus_c = one - c;
        series::TruncatedSeries<Rational> sum(1, max_degree);
        auto t_prev = one, t_cur = c;       // T_0, T_1
        series::TruncatedSeries<Rational> u_prev(1, max_degree), u_cur = one;  // U_{-1}=0, U_0
        for (long long l = 0; l <= lmax; ++l) {
            auto t_l = (l == 0) ? one : t_cur;
            sum += t_l - (one_minus_c * u_prev);
            if (l >= 1) {
                auto t_next = (c * t_cur).scaled(Rational(2)) - t_prev;
                t_prev = t_cur;
                t_cur = t_next;
            }
            auto u_next = (c * u_cur).scaled(Rational(2)) - u_prev;
            u_prev = u_cur;
            u_cur = u_next;
        }
        chi = (sum * half).scaled(Rational(2));
    }
    return chi * jac;
}

series::TruncatedSeries<double> leading_amplitude(const rep::KWeight& nu,
                                                  const rep::Dimension& dim, int max_degree) {
    auto radial = amplitude0_radial_exact(nu, dim, max_degree);
    auto multi = series::compose_radial(series::to_double_series(radial), dim.d() - 1, max_degree);
    return multi.scaled(std::pow(4.0 * M_PI, -0.5 * dim.d()));
}

HeatAmplitude exact_kernel_amplitudes(int i_max, int max_degree, const rep::Dimension& dim) {
    if (dim.n != 1)
        throw std::domain_error("exact_kernel_amplitudes: the exact kernel is built in for d = 3");
    rep::KWeight trivial({Rational(0)}, dim);
    auto radial = series::to_double_series(geom::jacobian_invsqrt_series(max_degree, 3));
    auto base = series::compose_radial(radial, 2, max_degree);
    HeatAmplitude amp{trivial, dim, {}};
    double prefactor = std::pow(4.0 * M_PI, -1.5);
    double fact = 1.0;
    for (int i = 0; i <= i_max; ++i) {
        if (i > 0) fact *= -static_cast<double>(i);  // (-1)^i i!
        amp.coeffs.push_back(base.scaled(prefactor / fact));
    }
    amp.validate();
    return amp;
}

HeatAmplitude leading_only_amplitude(const rep::KWeight& nu, const rep::Dimension& dim,
                                     int max_degree) {
    HeatAmplitude amp{nu, dim, {leading_amplitude(nu, dim, max_degree)}};
    amp.validate();
    return amp;
}

HeatAmplitude default_amplitudes(const rep::KWeight& nu, const rep::Dimension& dim,
                                 int max_degree, int i_max) {
    bool trivial = true;
    for (const auto& e : nu.k)
        if (e != 0) trivial = false;
    if (trivial && dim.n == 1) return exact_kernel_amplitudes(i_max, max_degree, dim);
    return leading_only_amplitude(nu, dim, max_degree);
}

double TprimeExpansion::eval(double t) const {
    if (t <= 0.0) throw std::domain_error("TprimeExpansion::eval: t must be positive");
    double log_t = std::log(t), sum = 0.0;
    for (const auto& e : entries)
        sum += (e.c * log_t + e.d) * std::pow(t, 0.5 * (e.j - 1));
    return sum;
}

SmallTimeExpansion TprimeExpansion::to_small_time() const {
    SmallTimeExpansion out;
    for (const auto& e : entries) {
        out.add(Rational(e.j - 1, 2), e.c, true);
        out.add(Rational(e.j - 1, 2), e.d, false);
    }
    return out;
}

TprimeExpansion parabolic_Tprime_expansion(const HeatAmplitude& amp, int order) {
    amp.validate();
    if (order < 0) throw std::invalid_argument("parabolic_Tprime_expansion: order >= 0 required");
    if (order > 2 * amp.i_max() + 1)
        throw std::invalid_argument(
            "parabolic_Tprime_expansion: order exceeds 2 i_max + 1 (missing amplitudes)");
    const int m = amp.dim.d() - 1;
    const int degree = amp.coeffs[0].max_degree();
    auto f = series::compose_radial(
        series::to_double_series(geom::r_squared_series(std::max(1, degree))), m, degree);
    std::map<int, double> c_out, d_out;
    for (int j = 0; j <= order; ++j) {
        c_out[j] = 0.0;
        d_out[j] = 0.0;
    }
    const double log4 = std::log(4.0);
    for (int i = 0; i <= amp.i_max(); ++i) {
        int sub_order = order - 2 * i;
        if (sub_order < 0) break;
        auto e = stphase::expand_log_integral(f, amp.coeffs[i], sub_order);
        for (const auto& entry : e.entries) {
            // lambda = 1/(4t):  lambda^{-(m+k)/2} = 2^{m+k} t^{(m+k)/2},
            // log lambda = -log t - log 4;  t^{-d/2 + i} prefactor, d = m+1.
            int j = entry.k + 2 * i;
            if (j > order) continue;
            double scale = std::pow(2.0, m + entry.k);
            c_out[j] += -entry.a * scale;
            d_out[j] += (entry.b - entry.a * log4) * scale;
        }
    }
    TprimeExpansion out;
    for (int j = 0; j <= order; ++j) out.entries.push_back({j, c_out[j], d_out[j]});
    return out;
}

std::map<int, Rational> tprime_log_coefficients_exact(const rep::KWeight& nu,
                                                      const rep::Dimension& dim, int order) {
    bool trivial = true;
    for (const auto& e : nu.k)
        if (e != 0) trivial = false;
    int i_max = trivial ? order / 2 : 0;
    if (order > 2 * i_max + 1)
        throw std::invalid_argument(
            "tprime_log_coefficients_exact: order exceeds 2 i_max + 1 for this nu");
    const int m = dim.d() - 1;
    const int degree = std::max(3 * order, 3);
    auto f = series::compose_radial(geom::r_squared_series(degree), m, degree);
    auto base = series::compose_radial(amplitude0_radial_exact(nu, dim, degree), m, degree);
    std::map<int, Rational> out;
    for (int j = 0; j <= order; ++j) out[j] = 0;
    Rational fact(1);
    for (int i = 0; i <= i_max; ++i) {
        int sub_order = order - 2 * i;
        if (sub_order < 0) break;
        if (i > 0) fact *= -i;
        auto g = base.scaled(Rational(1) / fact);
        auto a = stphase::expand_log_coefficients_exact(f, g, sub_order);
        for (const auto& [k, ak] : a) {
            int j = k + 2 * i;
            if (j > order) continue;
            out[j] += -ak * pow_rational(Rational(2), m + k);
        }
    }
    return out;
}

double h3_scalar_kernel(double r, double t) {
    if (t <= 0.0) throw std::domain_error("h3_scalar_kernel: t must be positive");
    if (r < 0.0) throw std::domain_error("h3_scalar_kernel: r must be nonnegative");
    double ratio;
    if (r < 1e-4) {
        double r2 = r * r;
        ratio = 1.0 / (1.0 + r2 / 6.0 + r2 * r2 / 120.0);
    } else if (r > 20.0) {
        ratio = 2.0 * r * std::exp(-r) / (1.0 - std::exp(-2.0 * r));
    } else {
        ratio = r / std::sinh(r);
    }
    return std::pow(4.0 * M_PI * t, -1.5) * ratio * std::exp(-t) * std::exp(-r * r / (4.0 * t));
}

double parabolic_Tprime_numeric(double t, const HeatAmplitude& amp,
                                const TprimeNumericOptions& opts) {
    if (t <= 0.0) throw std::domain_error("parabolic_Tprime_numeric: t must be positive");
    amp.validate();
    const int m = amp.dim.d() - 1;
    const double lambda = 1.0 / (4.0 * t);
    const double eps = opts.eps;
    stphase::PointFunction f_eval = [](const std::vector<double>& x) {
        double u = 0.0;
        for (double xi : x) u += xi * xi;
        double r = geom::hyp_distance_from_norm_sq(u);
        return r * r;
    };
    double total = 0.0;
    for (int i = 0; i <= amp.i_max(); ++i) {
        const auto& a_i = amp.coeffs[i];
        stphase::PointFunction g_eval = [&a_i, eps](const std::vector<double>& x) {
            double u = 0.0;
            for (double xi : x) u += xi * xi;
            return stphase::radial_bump(std::sqrt(u), eps) * a_i.eval(x);
        };
        auto q = stphase::quadrature_oracle(m, f_eval, g_eval, lambda, eps, opts.quadrature);
        if (!q.converged)
            throw std::runtime_error("parabolic_Tprime_numeric: quadrature did not converge (error "
                                     "estimate " + std::to_string(q.error_estimate) + ")");
        total += std::pow(t, -0.5 * amp.dim.d() + i) * q.value;
    }
    return total;
}

GeometricSideResult geometric_side(double t, const ManifoldData& M, const rep::KWeight& nu,
                                   const GeometricSideOptions& opts) {
    if (t <= 0.0) throw std::domain_error("geometric_side: t must be positive");
    M.validate();
    auto sigmas = rep::branching_sigmas(nu, M.dim);
    std::vector<std::pair<rep::MWeight, int>> sigma_mults;
    std::vector<std::pair<rep::MWeight, long long>> sigma_dims;
    for (const auto& s : sigmas) {
        sigma_mults.push_back({s, 1});
        sigma_dims.push_back({s, rep::dim_weyl_m(s, M.dim)});
    }
    GeometricSideResult res;
    res.identity = plancherel::identity_term(t, M.volume, sigma_mults, M.dim, M.c_n);
    res.hyperbolic = hyperbolic_term(t, M, sigmas);
    if (M.C1 != 0.0) res.parabolic_T = M.C1 * parabolic_T_term(t, sigma_dims, M.dim);
    if (M.C2 != 0.0) {
        auto amp = default_amplitudes(nu, M.dim, opts.amplitude_degree, opts.amplitude_i_max);
        res.parabolic_Tprime = M.C2 * parabolic_Tprime_numeric(t, amp, opts.tprime);
    }
    res.total = res.identity + res.hyperbolic + res.parabolic_T + res.parabolic_Tprime;
    return res;
}

SmallTimeExpansion geometric_side_expansion(const ManifoldData& M, const rep::KWeight& nu,
                                            int order, const GeometricSideOptions& opts) {
    M.validate();
    if (order < 0) throw std::invalid_argument("geometric_side_expansion: order >= 0 required");
    auto sigmas = rep::branching_sigmas(nu, M.dim);
    std::vector<std::pair<rep::MWeight, int>> sigma_mults;
    std::vector<std::pair<rep::MWeight, long long>> sigma_dims;
    for (const auto& s : sigmas) {
        sigma_mults.push_back({s, 1});
        sigma_dims.push_back({s, rep::dim_weyl_m(s, M.dim)});
    }
    // Cut every piece at the exponent reached by the T' expansion of the
    // requested order.
    Rational beta_max(order - 1, 2);
    int j_identity = static_cast<int>((order - 1 + M.dim.d()) / 2);
    auto e = plancherel::identity_expansion(M.volume, sigma_mults, M.dim, M.c_n,
                                            std::max(0, j_identity));
    e = e.truncated(beta_max);
    if (M.C1 != 0.0) {
        auto te = parabolic_T_expansion(sigma_dims, M.dim, std::max(0, order / 2));
        e = e + te.truncated(beta_max).scaled(M.C1);
    }
    if (M.C2 != 0.0) {
        auto amp = default_amplitudes(nu, M.dim, std::max(opts.amplitude_degree, 3 * order),
                                      opts.amplitude_i_max);
        int tp_order = std::min(order, 2 * amp.i_max() + 1);
        auto tp = parabolic_Tprime_expansion(amp, tp_order);
        e = e + tp.to_small_time().scaled(M.C2);
    }
    return e;
}

std::string sigma_key(const rep::MWeight& sigma) {
    std::string key;
    for (size_t i = 0; i < sigma.k.size(); ++i) {
        if (i) key += ",";
        key += rational_to_string(sigma.k[i]);
    }
    return key;
}

}  // namespace hyptor::traceform
