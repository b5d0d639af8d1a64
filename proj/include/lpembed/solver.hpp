#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "lpembed/distortion.hpp"
#include "lpembed/metric_space.hpp"

namespace lpembed {

struct SolveConfig {
  double p = 2.0;       // target norm exponent, >= 1
  int dim = 2;          // target dimension
  int restarts = 8;
  int iterations = 4000;
  double initial_step = 0.25;  // relative to the mean pairwise distance
  uint64_t seed = 0;
};

struct EmbeddingResult {
  Eigen::MatrixXd coords;  // n x dim
  DistortionReport report;  // recomputed from coords, never carried over
  bool converged = false;
  int restarts_used = 0;
};

// Distortion of the configuration against the source metric: ratios
// ||x_u - x_v||_p / d(u,v) over all pairs, distortion = max/min, r = min.
// Coincident rows for distinct points flag the report as infinite.
DistortionReport evaluate_distortion(const Eigen::MatrixXd& coords,
                                     const FiniteMetricSpace& space, double p);

// Smoothed objective log-sum-exp_T(log ratios) + log-sum-exp_T(-log ratios)
// and its analytic gradient; exposed for the finite-difference check.
double smoothed_objective(const Eigen::MatrixXd& coords, const FiniteMetricSpace& space, double p,
                          double temperature, Eigen::MatrixXd* grad = nullptr);

// Best-of-restarts local minimization of the smoothed log-ratio objective by
// subgradient steps with temperature annealing, followed by a coordinate
// pattern polish of the exact objective. Restart 0 starts from the spectral
// (classical scaling) configuration when one exists; later restarts are
// seeded Gaussians. Deterministic for a fixed config.
EmbeddingResult embed_min_distortion(const FiniteMetricSpace& space, const SolveConfig& config);

struct OracleBracket {
  double upper = 0.0;        // best distortion realized on the final grid
  double lower = 1.0;        // conservative bracket floor
  double refine_delta = 0.0; // optimum shift in the last refinement round
  double resolution = 0.0;   // final step size of the search
  Eigen::MatrixXd best_coords;
};

// Exhaustive coarse-to-fine grid search over normalized configurations
// (first point pinned at the origin, second on a normalized direction; only
// symmetries of the target norm are quotiented). Guards: n <= 5, dim <= 2,
// evaluation budget 1e8. The bracket floor is upper minus an empirical
// stability margin max(5 * resolution, 3 * refine_delta).
OracleBracket brute_force_oracle(const FiniteMetricSpace& space, double p, int dim,
                                 double grid_resolution);

}  // namespace lpembed
