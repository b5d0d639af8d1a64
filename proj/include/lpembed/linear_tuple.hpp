#pragma once

#include <vector>

#include "lpembed/metric_space.hpp"

namespace lpembed {

// Ordered points r_1..r_k whose distances from r_1 strictly increase and
// whose every ordered triple satisfies d(r_i,r_k) = d(r_i,r_j) + d(r_j,r_k).
struct LinearTuple {
  std::vector<int> indices;
};

// Exact on rational matrices; within 1e-9 * (largest distance involved) on
// double matrices. Throws on repeated indices or fewer than 3 of them.
bool is_linear_tuple(const FiniteMetricSpace& space, const std::vector<int>& indices);

// Enumerates all linear k-tuples, each reported once in its first-to-last
// canonical orientation (first index < last index; a tuple and its reversal
// are the same tuple). Enumeration visits P(n,k)/2 ordered candidates, so it
// is guarded: k = 3 allows n <= 64, and any call whose candidate count
// exceeds ~5e6 is rejected. k > n yields an empty list.
std::vector<LinearTuple> find_linear_tuples(const FiniteMetricSpace& space, int k);

}  // namespace lpembed
