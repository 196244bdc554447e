#include "hyptor/plancherel.hpp"

#include "hyptor/moments.hpp"

#include <algorithm>
#include <cmath>

namespace hyptor::plancherel {

std::complex<double> PlancherelPolynomial::eval(std::complex<double> z) const {
    std::complex<double> z2 = z * z, acc = 0.0;
    for (int k = static_cast<int>(even_coeffs.size()) - 1; k >= 0; --k)
        acc = acc * z2 + to_double(even_coeffs[k]);
    return c_n * acc;
}

double PlancherelPolynomial::eval_imag(double lambda) const {
    double z2 = -lambda * lambda, acc = 0.0;
    for (int k = static_cast<int>(even_coeffs.size()) - 1; k >= 0; --k)
        acc = acc * z2 + to_double(even_coeffs[k]);
    return c_n * acc;
}

PlancherelPolynomial build_plancherel(const rep::MWeight& sigma, const rep::Dimension& dim,
                                      double c_n) {
    if (c_n <= 0.0) throw std::domain_error("build_plancherel: c_n must be positive");
    const int n = dim.n;
    auto rho = rep::rho_vector(dim);
    // mu = z e_1 + Lambda(sigma) + rho_M in e-coordinates: mu_1 = z,
    // mu_j = k_j(sigma) + rho_j for j >= 2.
    std::vector<Rational> mu(n + 1);
    for (int j = 2; j <= n + 1; ++j) mu[j - 1] = sigma.k[j - 2] + rho[j - 1];

    // Product over all positive roots e_i +- e_j as linear factors in z, so
    // that evenness is checked rather than assumed.
    std::vector<Rational> poly{1};  // coefficients in powers of z
    auto mul_linear = [&poly](const Rational& c0, const Rational& c1) {
        // multiply by (c1 z + c0)
        std::vector<Rational> out(poly.size() + 1, Rational(0));
        for (size_t i = 0; i < poly.size(); ++i) {
            out[i] += poly[i] * c0;
            out[i + 1] += poly[i] * c1;
        }
        poly = std::move(out);
    };
    Rational denom = 1;
    for (int i = 1; i <= n + 1; ++i) {
        for (int j = i + 1; j <= n + 1; ++j) {
            if (i == 1) {
                mul_linear(-mu[j - 1], Rational(1));  // <mu, e_1 - e_j> = z - mu_j
                mul_linear(mu[j - 1], Rational(1));   // <mu, e_1 + e_j> = z + mu_j
            } else {
                std::vector<Rational> scaled(poly.size());
                Rational factor = (mu[i - 1] - mu[j - 1]) * (mu[i - 1] + mu[j - 1]);
                for (size_t t = 0; t < poly.size(); ++t) scaled[t] = poly[t] * factor;
                poly = std::move(scaled);
            }
            denom *= (rho[i - 1] - rho[j - 1]) * (rho[i - 1] + rho[j - 1]);
        }
    }

    PlancherelPolynomial out{sigma, dim, c_n, {}};
    out.even_coeffs.assign(n + 1, Rational(0));
    for (size_t p = 0; p < poly.size(); ++p) {
        Rational c = -poly[p] / denom;
        if (p % 2 == 1) {
            if (c != 0) throw std::logic_error("build_plancherel: odd coefficient survived");
            continue;
        }
        out.even_coeffs[p / 2] = c;
    }
    return out;
}

SmallTimeExpansion identity_expansion(double vol,
                                      const std::vector<std::pair<rep::MWeight, int>>& sigmas,
                                      const rep::Dimension& dim, double c_n, int order) {
    if (order < 0) throw std::invalid_argument("identity_expansion: order >= 0 required");
    const int n = dim.n;
    // Exponents -d/2 + j, j = 0..order.
    std::vector<double> coeff(order + 1, 0.0);
    for (const auto& [sigma, mult] : sigmas) {
        auto p = build_plancherel(sigma, dim, c_n);
        double c_sig = to_double(rep::casimir_sigma(sigma, dim));
        // int e^{-t l^2} l^{2k} dl = Gamma(k + 1/2) t^{-k-1/2};
        // P(i l) = sum_k p_k (-1)^k l^{2k}; e^{t c} = sum_i c^i t^i / i!.
        for (int k = 0; k <= n; ++k) {
            double base = p.coeff(k) * (k % 2 ? -1.0 : 1.0) * series::gamma_half(2 * k + 1);
            double fact = 1.0, cpow = 1.0;
            for (int i = 0;; ++i) {
                int j = (n - k) + i;
                if (j > order) break;
                coeff[j] += vol * mult * base * cpow / fact;
                cpow *= c_sig;
                fact *= (i + 1);
            }
        }
    }
    SmallTimeExpansion e;
    for (int j = 0; j <= order; ++j)
        e.add(Rational(2 * j - dim.d(), 2), coeff[j], false);
    return e;
}

double identity_term(double t, double vol,
                     const std::vector<std::pair<rep::MWeight, int>>& sigmas,
                     const rep::Dimension& dim, double c_n) {
    if (t <= 0.0) throw std::domain_error("identity_term: t must be positive");
    double total = 0.0;
    for (const auto& [sigma, mult] : sigmas) {
        auto p = build_plancherel(sigma, dim, c_n);
        double c_sig = to_double(rep::casimir_sigma(sigma, dim));
        double sum = 0.0;
        for (int k = 0; k <= dim.n; ++k) {
            sum += p.coeff(k) * (k % 2 ? -1.0 : 1.0) * series::gamma_half(2 * k + 1) *
                   std::pow(t, -k - 0.5);
        }
        total += vol * mult * std::exp(t * c_sig) * sum;
    }
    return total;
}

}  // namespace hyptor::plancherel
