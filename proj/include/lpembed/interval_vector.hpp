#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "lpembed/rational.hpp"
#include "lpembed/step_function.hpp"

namespace lpembed {

// A finitely supported vector drawn as vertical intervals: coordinate i
// carries the segment from (i,0) to (i,a_i). The norm is the total length of
// the segments.
struct IntervalVector {
  std::map<int64_t, Rational> entries;  // only nonzero heights stored

  Rational norm() const;
  void set(int64_t i, const Rational& v);  // erases on v == 0
  Rational get(int64_t i) const;
};

// Total length of the coordinatewise intersections of the two interval
// pictures: same-sign coordinates contribute min(|a_i|,|b_i|), opposite
// signs or zeros contribute nothing. Equals (|a| + |b| - |a-b|)/2.
Rational overlap_length(const IntervalVector& a, const IntervalVector& b);

// The coordinatewise signed intersection: where signs agree, the shorter of
// the two segments with that sign; elsewhere zero. Its norm is the overlap
// length of x and y.
IntervalVector derive_x_sigma(const IntervalVector& x, const IntervalVector& y);

// Renders step functions over one shared coordinate system: the union of
// all breakpoints induces cells, and each cell becomes one coordinate whose
// height is the function value scaled by the cell width. Norms and overlaps
// of the renderings agree with the L1 geometry of the functions.
std::vector<IntervalVector> render_common(const std::vector<const StepFunction*>& fns);

struct SplitCheck {
  enum class Verdict { Feasible, Infeasible };
  enum class Reason {
    None,             // feasible
    NormNotOne,       // total mass is not 1, so 2^n parts of 2^-n cannot exist
    TooManyParts,     // more parts than support coordinates; parts must be nonempty
    MaxCoordinate,    // some |x_i| > 2^-n cannot fit inside any part
    SearchExhausted,  // exhaustive partition search found nothing
  };
  Verdict verdict = Verdict::Infeasible;
  Reason reason = Reason::None;
  // set when reason == MaxCoordinate
  std::optional<std::pair<int64_t, Rational>> obstruction;
  // set when feasible: support coordinates grouped into 2^n parts
  std::vector<std::vector<int64_t>> partition;

  bool feasible() const { return verdict == Verdict::Feasible; }
};

// Decides whether the support of x can be split into 2^n groups whose
// absolute sums each equal 2^-n exactly (disjoint supports force whole
// coordinates into groups). The max-coordinate shortcut can be switched off
// to force the exhaustive search; both must agree. Support sizes above 24
// are refused ("exceeds search guard").
SplitCheck disjoint_split_check(const IntervalVector& x, int n, bool use_shortcut = true);

}  // namespace lpembed
