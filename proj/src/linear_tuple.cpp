#include "lpembed/linear_tuple.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace lpembed {

namespace {

bool triple_equality(const FiniteMetricSpace& s, int a, int b, int c, double tol) {
  if (s.exact()) return s.rd(a, c) == s.rd(a, b) + s.rd(b, c);
  return std::abs(s.d(a, c) - (s.d(a, b) + s.d(b, c))) <= tol;
}

double tuple_tol(const FiniteMetricSpace& s) {
  return s.exact() ? 0.0 : 1e-9 * std::max(1.0, s.max_entry());
}

double perm_count(int n, int k) {
  double c = 1.0;
  for (int i = 0; i < k; ++i) c *= static_cast<double>(n - i);
  return c;
}

}  // namespace

bool is_linear_tuple(const FiniteMetricSpace& space, const std::vector<int>& indices) {
  const int k = static_cast<int>(indices.size());
  if (k < 3) throw std::invalid_argument("a linear tuple needs at least 3 points");
  std::set<int> distinct(indices.begin(), indices.end());
  if (static_cast<int>(distinct.size()) != k)
    throw std::invalid_argument("repeated indices in tuple");
  for (int i : indices)
    if (i < 0 || i >= space.size()) throw std::invalid_argument("tuple index out of range");

  const double tol = tuple_tol(space);
  const int r0 = indices[0];
  // {d(r_i, r_1)} must strictly increase, starting from d(r_1,r_1) = 0.
  for (int i = 1; i < k; ++i) {
    const int prev = (i == 1) ? r0 : indices[static_cast<size_t>(i - 1)];
    if (space.exact()) {
      if (!(space.rd(prev, r0) < space.rd(indices[static_cast<size_t>(i)], r0))) return false;
    } else {
      if (!(space.d(prev, r0) < space.d(indices[static_cast<size_t>(i)], r0) - tol)) return false;
    }
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      for (int l = j + 1; l < k; ++l)
        if (!triple_equality(space, indices[static_cast<size_t>(i)], indices[static_cast<size_t>(j)],
                             indices[static_cast<size_t>(l)], tol))
          return false;
  return true;
}

std::vector<LinearTuple> find_linear_tuples(const FiniteMetricSpace& space, int k) {
  if (k < 3) throw std::invalid_argument("tuple length must be at least 3");
  const int n = space.size();
  std::vector<LinearTuple> out;
  if (k > n) return out;
  if (k == 3 && n > 64)
    throw std::invalid_argument("linear-tuple search guarded at n <= 64 for k = 3");
  if (perm_count(n, k) / 2.0 > 5e6)
    throw std::invalid_argument("linear-tuple enumeration too large for this n and k");

  std::vector<int> tuple(static_cast<size_t>(k));
  std::vector<char> used(static_cast<size_t>(n), 0);

  // Depth-first enumeration of ordered tuples; canonical orientation is
  // enforced by requiring tuple[0] < tuple[k-1] at the leaf.
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      if (tuple[0] < tuple[static_cast<size_t>(k - 1)] && is_linear_tuple(space, tuple))
        out.push_back({tuple});
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = 1;
      tuple[static_cast<size_t>(depth)] = v;
      self(self, depth + 1);
      used[static_cast<size_t>(v)] = 0;
    }
  };
  rec(rec, 0);

  std::sort(out.begin(), out.end(),
            [](const LinearTuple& a, const LinearTuple& b) { return a.indices < b.indices; });
  return out;
}

}  // namespace lpembed
