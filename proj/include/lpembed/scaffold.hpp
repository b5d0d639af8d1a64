#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "lpembed/ball_growth.hpp"
#include "lpembed/metric_space.hpp"
#include "lpembed/net.hpp"
#include "lpembed/simplex.hpp"

namespace lpembed {

// Ray coordinates of the level-n simplex: vertices t*e_1..t*e_n plus the
// second point u*e_n on the last ray. Level 1 is the segment [0, 2e_1].
struct LevelParams {
  int n = 1;
  double t = 0.0;
  double u = 2.0;

  // n = 1: (0, 2). n >= 2: t = 4n(n+1), u = 2t, which the build validates
  // through the distance and containment certificates rather than trusting.
  static LevelParams defaults(int n);
};

enum class ScaffoldPointKind { Origin, Vertex, Net, Chain };

struct ScaffoldPoint {
  std::string label;
  Eigen::VectorXd coords;  // level-local, dimension n
  ScaffoldPointKind kind = ScaffoldPointKind::Origin;
};

struct ScaffoldChain {
  int net_registry_id = -1;        // the net point this chain belongs to
  std::vector<int> step_ids;       // registry ids of w_1..w_L
  std::vector<int> dropped;        // vertex index (0-based) dropped at each step
  int terminal_edge[2] = {-1, -1};  // 0-based vertex indices; [1] = -1 when terminal is a vertex
};

// All level-n data: simplex vertices, shift y_n (the Chebyshev center), the
// net inside y_n + unit ball, and the chain points tying every net point to
// the simplex edges. The registry lists origin, vertices, net and chain
// points with stable labels; M_n is everything except the origin.
struct SimplexScaffold {
  int n = 0;
  LevelParams params;
  double delta = 0.0;

  std::vector<ScaffoldPoint> registry;  // [0] origin, [1..n+1] vertices, net, chains
  int net_begin = 0;
  int net_count = 0;
  int chain_begin = 0;

  std::vector<ScaffoldChain> chains;  // one per net registry point

  Eigen::VectorXd shift;  // y_n
  double inradius = 0.0;
  double min_member_norm = 0.0;  // over M_n
  bool containment_certificate = false;  // unit ball around y_n inside the simplex
  bool distance_certificate = false;     // min_member_norm >= n (true by fiat at n = 1)

  Simplex make_simplex() const;
  size_t member_count() const { return registry.size() - 1; }
  const Eigen::VectorXd& point(int id) const { return registry[static_cast<size_t>(id)].coords; }
};

// Build one level. Throws std::runtime_error naming the failed certificate
// when explicit params violate the distance or containment requirement.
SimplexScaffold build_level(int n, const NetSchedule& schedule,
                            std::optional<LevelParams> params = std::nullopt,
                            const NetConfig& net_config = {});

struct WitnessGlobalPoint {
  std::string label;
  Eigen::VectorXd coords;  // ambient dimension n_max
  int level = 0;           // 0 for the origin
};

// The assembled witness: levels 1..n_max, the axis scalars alpha_i, and the
// flattened point cloud (exact duplicates collapse onto their first
// occurrence, so the origin appears once).
struct WitnessSpace {
  int n_max = 0;
  std::string schedule_spec;
  std::vector<SimplexScaffold> levels;
  std::vector<double> alphas;  // alpha_1 = 1, alpha_i = t_i
  std::vector<WitnessGlobalPoint> points;  // [0] = origin

  size_t total_points() const { return points.size(); }
  // Euclidean distance matrix of all points; refuses above the cap because
  // the matrix is quadratic in the point count.
  FiniteMetricSpace to_metric_space(size_t point_cap = 4096) const;
  // Level family for ball certification: level 0 = origin, level n = M_n,
  // bound 0, 0, 2, 3, ... (level 1 reaches down to the origin).
  LevelFamily level_family() const;
};

WitnessSpace build_space(int n_max, const NetSchedule& schedule, const NetConfig& net_config = {});

enum class ConstraintKind { ApexTuple, ChainStep, TerminalEdge, NetEdge, AxisTuple };

// Ordered triple (a, b, c) of rigid-registry ids: any isometry fixing the
// origin must keep d(a,c) = d(a,b) + d(b,c) with b strictly between.
struct RigidityConstraint {
  ConstraintKind kind = ConstraintKind::ChainStep;
  int a = -1, b = -1, c = -1;
  std::string description;
};

// The registry rigidity constraints are expressed over: the scaffold
// registry followed by the axis anchors alpha_i * e_i for i < n (points of
// earlier levels that pin the shared rays). `alphas` may be shorter than
// n-1 only for n = 1, where there are no anchors.
std::vector<Eigen::VectorXd> rigidity_registry(const SimplexScaffold& level,
                                               const std::vector<double>& alphas);
std::vector<std::string> rigidity_labels(const SimplexScaffold& level,
                                         const std::vector<double>& alphas);
std::vector<RigidityConstraint> rigidity_constraints(const SimplexScaffold& level,
                                                     const std::vector<double>& alphas);

struct RigidityReport {
  bool passed = false;
  bool isometry_ok = false;
  bool constraints_ok = false;
  double worst_pair_error = 0.0;
  int worst_pair[2] = {-1, -1};
  double worst_constraint_residual = 0.0;
  std::optional<RigidityConstraint> violated;
  int axis_span_rank = 0;
  double span_residual_max = 0.0;  // condition (B) checked directly on the image
  std::string detail;
};

// Verifies an assignment image[i] of rigidity_registry(level, alphas)[i]:
// the image of the origin must be (numerically) zero; the assignment must be
// isometric within tol; and every rigidity constraint must hold in the image
// within tol. On top of the constraints the report carries the numerical
// rank of the axis images and how far the image of M_n strays from their
// span. Isometry is certified through an orthogonal fit, which is exact for
// Euclidean images; when the fit fails, the worst offending pair is located
// directly.
RigidityReport verify_embedding_rigidity(const SimplexScaffold& level,
                                         const std::vector<double>& alphas,
                                         const std::vector<Eigen::VectorXd>& image, double tol);

}  // namespace lpembed
