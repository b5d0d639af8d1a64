#pragma once

#include <vector>

#include "lpembed/metric_space.hpp"

namespace lpembed {

// Two-sided Lipschitz data of a map between metric spaces, normalized so the
// lower bound is tight: r is the smallest image/source distance ratio,
// lipDown = 1, and lipUp = distortion = (max ratio)/(min ratio).
struct DistortionReport {
  double r = 0.0;
  double lip_up = 1.0;
  double lip_down = 1.0;
  double distortion = 1.0;
  bool finite = true;  // false when distinct points collide in the image
  // pairs realizing the extreme ratios, as source index pairs
  int max_pair[2] = {-1, -1};
  int min_pair[2] = {-1, -1};
};

// Distortion of the map source[i] -> target[assignment[i]].
// The assignment must be injective; mapping two distinct points onto targets
// at distance zero is rejected as "not an embedding". Ratios are formed
// exactly when both spaces carry rational matrices.
DistortionReport distortion_of_map(const FiniteMetricSpace& source,
                                   const FiniteMetricSpace& target,
                                   const std::vector<int>& assignment);

}  // namespace lpembed
