#include "lpembed/ball_growth.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace lpembed {

BallResult ball_count(const LevelFamily& family, double radius) {
  if (!(radius >= 0.0)) throw std::invalid_argument("radius must be nonnegative");
  if (!family.level_points || !family.min_norm_bound)
    throw std::invalid_argument("family is missing generators");

  BallResult out;
  out.radius = radius;

  double prev_bound = -std::numeric_limits<double>::infinity();
  int level = family.first_level;
  for (;; ++level) {
    if (level - family.first_level > family.level_cap)
      throw std::runtime_error("local finiteness not certifiable: norm bound did not exceed radius " +
                               std::to_string(radius) + " within the level cap");
    const double bound = family.min_norm_bound(level);
    if (bound < prev_bound)
      throw std::logic_error("family norm bound is not monotone at level " + std::to_string(level));
    prev_bound = bound;
    if (bound > radius) {
      out.terminal_level = level;
      out.bound_at_terminal = bound;
      break;
    }
    for (auto& p : family.level_points(level)) {
      if (p.norm < bound - 1e-12 * std::max(1.0, bound))
        throw std::logic_error("family produced a point below its own bound at level " +
                               std::to_string(level));
      if (p.norm <= radius) out.members.push_back(std::move(p));
    }
  }

  std::sort(out.members.begin(), out.members.end(), [](const FamilyPoint& a, const FamilyPoint& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.label < b.label;
  });
  return out;
}

}  // namespace lpembed
