#pragma once

#include <functional>
#include <string>
#include <vector>

namespace lpembed {

struct FamilyPoint {
  std::string label;
  double norm = 0.0;  // distance to the family's designated origin
};

// A lazily generated family of points organized into levels. Local
// finiteness is certified through min_norm_bound: a nondecreasing lower
// bound on the norm of every point at the given level or beyond. Once the
// bound exceeds a radius, no later level can contribute to that ball.
struct LevelFamily {
  std::string name;
  int first_level = 0;
  // Points of one level. May be expensive; called only for levels whose
  // bound does not already exclude them.
  std::function<std::vector<FamilyPoint>(int)> level_points;
  // Lower bound on norms at `level` and all later levels; must be
  // nondecreasing and eventually exceed any radius.
  std::function<double(int)> min_norm_bound;
  // Levels scanned past this without the bound clearing the radius mean the
  // bound does not diverge; the query is refused rather than left running.
  int level_cap = 1 << 20;
};

struct BallResult {
  double radius = 0.0;
  std::vector<FamilyPoint> members;  // sorted by (norm, label)
  // First level whose bound exceeds the radius; levels >= terminal_level
  // provably contribute nothing.
  int terminal_level = 0;
  double bound_at_terminal = 0.0;
};

// Exact members of the closed ball of the given radius around the origin,
// together with the termination certificate. Throws std::runtime_error
// ("local finiteness not certifiable") when the bound fails to diverge
// within the level cap, and std::logic_error when the generator violates
// its own bound or monotonicity.
BallResult ball_count(const LevelFamily& family, double radius);

}  // namespace lpembed
