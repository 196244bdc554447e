#pragma once

#include "hyptor/truncated_series.hpp"

#include <Eigen/Dense>

namespace hyptor::geom {

// Point in the nilpotent slice, x in R^{d-1}.
using NilpotentCoord = Eigen::VectorXd;
// (d+1) x (d+1) matrix in the linear realization of the isometry group.
using GroupMatrix = Eigen::MatrixXd;

// Nilpotent generator Y(x): block matrix with Y[0:m, m] = -x, Y[0:m, m+1] = x,
// Y[m, 0:m] = Y[m+1, 0:m] = x^T, where m = d-1.
GroupMatrix nilpotent_generator(const NilpotentCoord& x);

// n(x) = Id + Y(x) + Y(x)^2 / 2 (Y(x)^3 = 0).
GroupMatrix n_matrix(const NilpotentCoord& x);

// Geodesic distance r(x) = arcosh(1 + |x|^2/2), via the log form with a
// series branch near the origin to avoid cancellation.
double hyp_distance(const NilpotentCoord& x);
double hyp_distance_from_norm_sq(double u);

// Taylor series of arcosh(1 + u/2)^2 in u = |x|^2 through degree D:
// coefficient of u^k is 2 (-1)^{k+1} / (k^2 binom(2k, k)).
series::TruncatedSeries<Rational> r_squared_series(int max_degree);

// |det d_x exp| = (sinh r / r)^{d-1}; the removable singularity at r = 0
// evaluates to 1.
double jacobian(double r, int d);

// Rotation factor of the polar decomposition g = exp(Y(g)) k(g):
// k(g) = (g g^T)^{-1/2} g, computed by symmetric eigendecomposition.
GroupMatrix cartan_k(const GroupMatrix& g);

// cos of the rotation angle of k(n(x)) in the plane spanned by x and the
// last spatial axis, as a function of u = |x|^2: (4 - u) / (4 + u).
double rotation_angle_cos(double u);

// The same quantity as an exact univariate series in u.
series::TruncatedSeries<Rational> rotation_angle_cos_series(int max_degree);

// (sinh r / r) as a series in u = |x|^2 (composition with r^2(u)).
series::TruncatedSeries<Rational> sinh_r_over_r_series(int max_degree);

// j(x)^{-1/2} = (sinh r / r)^{-(d-1)/2} as a series in u; the exponent
// (d-1)/2 = n is an integer, so the series is rational.
series::TruncatedSeries<Rational> jacobian_invsqrt_series(int max_degree, int d);

}  // namespace hyptor::geom
