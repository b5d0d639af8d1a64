#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "lpembed/metric_space.hpp"
#include "lpembed/rational.hpp"

namespace lpembed {

// Gram-type matrix G[i][j] = (d(x0,xi)^2 + d(x0,xj)^2 - d(xi,xj)^2) / 2 over
// the points other than the basepoint. The space embeds isometrically into
// l2 exactly when G is positive semidefinite.
struct SchoenbergMatrix {
  int base = 0;
  Eigen::MatrixXd g;                        // (n-1) x (n-1)
  std::vector<std::vector<Rational>> g_exact;  // populated for rational spaces
  bool exact = false;
};

SchoenbergMatrix schoenberg_matrix(const FiniteMetricSpace& space, int base = 0);

struct L2EmbedResult {
  bool embeddable = false;
  // on success: one row per point (basepoint row is zero), dim = numerical rank
  Eigen::MatrixXd coords;
  // on failure: a direction with v' G v < 0
  Eigen::VectorXd negative_certificate;
  double min_eigenvalue = 0.0;
  double psd_tolerance = 0.0;
};

// Exact decision up to the documented tolerance: PSD means min eigenvalue
// >= -1e-9 * max|eigenvalue|. Coordinates come from the eigenfactorization
// with negative noise clipped at zero.
L2EmbedResult embeds_isometrically_l2(const FiniteMetricSpace& space, int base = 0);

// True iff every point lies within tol of the affine line through the two
// farthest-apart points. Fewer than 3 points are trivially collinear.
bool check_collinear(const std::vector<Eigen::VectorXd>& points, double tol);

}  // namespace lpembed
