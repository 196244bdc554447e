#include "hyptor/geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hyptor::geom {

GroupMatrix nilpotent_generator(const NilpotentCoord& x) {
    const int m = static_cast<int>(x.size());
    GroupMatrix y = GroupMatrix::Zero(m + 2, m + 2);
    for (int i = 0; i < m; ++i) {
        y(i, m) = -x(i);
        y(i, m + 1) = x(i);
        y(m, i) = x(i);
        y(m + 1, i) = x(i);
    }
    return y;
}

GroupMatrix n_matrix(const NilpotentCoord& x) {
    GroupMatrix y = nilpotent_generator(x);
    const int size = static_cast<int>(y.rows());
    return GroupMatrix::Identity(size, size) + y + 0.5 * (y * y);
}

double hyp_distance_from_norm_sq(double u) {
    if (u < 0) throw std::domain_error("hyp_distance: negative norm square");
    if (u < 2e-4) {
        // r^2 = u - u^2/12 + u^3/90 - ...; truncation beyond u^8 is far below
        // double precision in this branch.
        static const auto coeffs = [] {
            auto s = r_squared_series(8);
            std::vector<double> c(9, 0.0);
            for (const auto& [alpha, q] : s.terms()) c[alpha[0]] = to_double(q);
            return c;
        }();
        double r2 = 0.0;
        for (int k = 8; k >= 1; --k) r2 = (r2 + coeffs[k]) * u;
        return std::sqrt(r2);
    }
    // log(w + sqrt(w^2 - 1)) with w = 1 + u/2; w^2 - 1 = u + u^2/4 is formed
    // from u directly so nothing cancels near w = 1.
    return std::log1p(0.5 * u + std::sqrt(u + 0.25 * u * u));
}

double hyp_distance(const NilpotentCoord& x) { return hyp_distance_from_norm_sq(x.squaredNorm()); }

series::TruncatedSeries<Rational> r_squared_series(int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("r_squared_series: degree >= 1 required");
    series::TruncatedSeries<Rational> s(1, max_degree);
    for (int k = 1; k <= max_degree; ++k) {
        Rational c(2, 1);
        c /= Rational(BigInt(k) * k * binomial(2 * k, k));
        if (k % 2 == 0) c = -c;
        s.set({k}, c);
    }
    return s;
}

double jacobian(double r, int d) {
    if (r < 0) throw std::domain_error("jacobian: r must be nonnegative");
    if (d < 3) throw std::invalid_argument("jacobian: d >= 3 required");
    if (r < 1e-4) {
        double r2 = r * r;
        double ratio = 1.0 + r2 / 6.0 + r2 * r2 / 120.0;
        return std::pow(ratio, d - 1);
    }
    if (r > 20.0) {
        // log(sinh r) = r - log 2 + log1p(-exp(-2r)), stable for large r.
        double log_ratio = r - std::log(2.0) + std::log1p(-std::exp(-2.0 * r)) - std::log(r);
        return std::exp((d - 1) * log_ratio);
    }
    return std::pow(std::sinh(r) / r, d - 1);
}

GroupMatrix cartan_k(const GroupMatrix& g) {
    if (g.rows() != g.cols()) throw std::invalid_argument("cartan_k: square matrix required");
    Eigen::SelfAdjointEigenSolver<GroupMatrix> es(g * g.transpose());
    if (es.info() != Eigen::Success) throw std::runtime_error("cartan_k: eigendecomposition failed");
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() <= 1e-14 * std::max(1.0, ev.maxCoeff()))
        throw std::domain_error("cartan_k: matrix is not invertible");
    GroupMatrix inv_sqrt =
        es.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
    GroupMatrix k = inv_sqrt * g;
    // One orthogonal-polar Newton step mops up eigensolver roundoff.
    return 0.5 * k * (3.0 * GroupMatrix::Identity(k.rows(), k.cols()) - k.transpose() * k);
}

double rotation_angle_cos(double u) {
    if (u < 0) throw std::domain_error("rotation_angle_cos: negative norm square");
    return (4.0 - u) / (4.0 + u);
}

series::TruncatedSeries<Rational> rotation_angle_cos_series(int max_degree) {
    // (4 - u)/(4 + u) = 1 + 2 sum_{k>=1} (-u/4)^k.
    series::TruncatedSeries<Rational> s(1, max_degree);
    s.set({0}, Rational(1));
    Rational term(1);
    for (int k = 1; k <= max_degree; ++k) {
        term *= Rational(-1, 4);
        s.set({k}, 2 * term);
    }
    return s;
}

series::TruncatedSeries<Rational> sinh_r_over_r_series(int max_degree) {
    // sinh(r)/r = sum_k (r^2)^k / (2k+1)! composed with r^2(u).
    series::TruncatedSeries<Rational> outer(1, max_degree);
    for (int k = 0; k <= max_degree; ++k)
        outer.set({k}, Rational(1, factorial(2 * k + 1)));
    return compose_univariate(outer, r_squared_series(max_degree));
}

series::TruncatedSeries<Rational> jacobian_invsqrt_series(int max_degree, int d) {
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("jacobian_invsqrt_series: odd d >= 3");
    const int n = (d - 1) / 2;
    auto inv = reciprocal_univariate(sinh_r_over_r_series(max_degree));
    return integer_power(inv, n);
}

}  // namespace hyptor::geom
