#include "lpembed/distortion.hpp"

#include <limits>
#include <stdexcept>

namespace lpembed {

DistortionReport distortion_of_map(const FiniteMetricSpace& source,
                                   const FiniteMetricSpace& target,
                                   const std::vector<int>& assignment) {
  const int n = source.size();
  if (n < 2) throw std::invalid_argument("source needs at least 2 points");
  if (static_cast<int>(assignment.size()) != n)
    throw std::invalid_argument("assignment size does not match source");
  std::vector<char> seen(static_cast<size_t>(target.size()), 0);
  for (int t : assignment) {
    if (t < 0 || t >= target.size()) throw std::invalid_argument("assignment index out of range");
    if (seen[static_cast<size_t>(t)]) throw std::invalid_argument("not an embedding: assignment is not injective");
    seen[static_cast<size_t>(t)] = 1;
  }

  const bool exact = source.exact() && target.exact();
  DistortionReport rep;
  bool first = true;
  Rational rmax, rmin;
  double dmax = 0.0, dmin = 0.0;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (exact) {
        const Rational& da = source.rd(i, j);
        const Rational& dy = target.rd(assignment[i], assignment[j]);
        if (da == 0) throw std::invalid_argument("source has zero distance between distinct points");
        if (dy == 0) {
          rep.finite = false;
          rep.max_pair[0] = i;
          rep.max_pair[1] = j;
          continue;
        }
        Rational rho = dy / da;
        if (first || rho > rmax) { rmax = rho; rep.max_pair[0] = i; rep.max_pair[1] = j; }
        if (first || rho < rmin) { rmin = rho; rep.min_pair[0] = i; rep.min_pair[1] = j; }
        first = false;
      } else {
        const double da = source.d(i, j);
        const double dy = target.d(assignment[i], assignment[j]);
        if (da <= 0.0) throw std::invalid_argument("source has zero distance between distinct points");
        if (dy <= 0.0) {
          rep.finite = false;
          rep.max_pair[0] = i;
          rep.max_pair[1] = j;
          continue;
        }
        const double rho = dy / da;
        if (first || rho > dmax) { dmax = rho; rep.max_pair[0] = i; rep.max_pair[1] = j; }
        if (first || rho < dmin) { dmin = rho; rep.min_pair[0] = i; rep.min_pair[1] = j; }
        first = false;
      }
    }

  if (!rep.finite) {
    rep.distortion = std::numeric_limits<double>::infinity();
    rep.lip_up = rep.distortion;
    rep.r = 0.0;
    return rep;
  }
  if (exact) {
    rep.r = to_double(rmin);
    rep.distortion = rmax == rmin ? 1.0 : to_double(rmax / rmin);
  } else {
    rep.r = dmin;
    rep.distortion = dmax == dmin ? 1.0 : dmax / dmin;
  }
  rep.lip_down = 1.0;
  rep.lip_up = rep.distortion;
  return rep;
}

}  // namespace lpembed
