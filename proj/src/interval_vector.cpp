#include "lpembed/interval_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace lpembed {

Rational IntervalVector::norm() const {
  Rational total = 0;
  for (const auto& [i, v] : entries) total += rational_abs(v);
  return total;
}

void IntervalVector::set(int64_t i, const Rational& v) {
  if (v == 0)
    entries.erase(i);
  else
    entries[i] = v;
}

Rational IntervalVector::get(int64_t i) const {
  auto it = entries.find(i);
  return it == entries.end() ? Rational(0) : it->second;
}

Rational overlap_length(const IntervalVector& a, const IntervalVector& b) {
  Rational total = 0;
  for (const auto& [i, va] : a.entries) {
    const Rational vb = b.get(i);
    if (vb == 0) continue;
    if ((va > 0) == (vb > 0)) total += std::min(rational_abs(va), rational_abs(vb));
  }
  return total;
}

IntervalVector derive_x_sigma(const IntervalVector& x, const IntervalVector& y) {
  IntervalVector out;
  for (const auto& [i, vx] : x.entries) {
    const Rational vy = y.get(i);
    if (vy == 0) continue;
    if ((vx > 0) != (vy > 0)) continue;
    const Rational mag = std::min(rational_abs(vx), rational_abs(vy));
    out.set(i, vx > 0 ? mag : Rational(-mag));
  }
  return out;
}

std::vector<IntervalVector> render_common(const std::vector<const StepFunction*>& fns) {
  std::vector<Rational> cuts;
  for (const StepFunction* f : fns)
    for (const auto& b : f->breakpoints()) cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<IntervalVector> out(fns.size());
  for (size_t j = 0; j + 1 < cuts.size(); ++j) {
    const Rational width = cuts[j + 1] - cuts[j];
    for (size_t k = 0; k < fns.size(); ++k) {
      // cells refine every piece, so the value at the right endpoint is the
      // value on the whole cell
      const Rational h = fns[k]->value_at(cuts[j + 1]);
      if (h != 0) out[k].set(static_cast<int64_t>(j), h * width);
    }
  }
  return out;
}

namespace {

// Exact equal-sum partition into `parts` bins by descending-value
// backtracking with symmetry pruning on equal bin loads.
bool partition_search(const std::vector<Rational>& values, const Rational& target, int parts,
                      std::vector<int>& assignment) {
  std::vector<Rational> load(static_cast<size_t>(parts), Rational(0));
  const size_t m = values.size();

  auto rec = [&](auto&& self, size_t item) -> bool {
    if (item == m) {
      for (const auto& l : load)
        if (l != target) return false;
      return true;
    }
    for (int b = 0; b < parts; ++b) {
      if (load[static_cast<size_t>(b)] + values[item] > target) continue;
      // bins with identical loads are interchangeable; try only the first
      bool duplicate = false;
      for (int b2 = 0; b2 < b; ++b2)
        if (load[static_cast<size_t>(b2)] == load[static_cast<size_t>(b)]) {
          duplicate = true;
          break;
        }
      if (duplicate) continue;
      load[static_cast<size_t>(b)] += values[item];
      assignment[item] = b;
      if (self(self, item + 1)) return true;
      load[static_cast<size_t>(b)] -= values[item];
      assignment[item] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

SplitCheck disjoint_split_check(const IntervalVector& x, int n, bool use_shortcut) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > 62) throw std::invalid_argument("2^n parts out of range");
  SplitCheck result;

  std::vector<int64_t> coords;
  std::vector<Rational> values;
  for (const auto& [i, v] : x.entries) {
    coords.push_back(i);
    values.push_back(rational_abs(v));
  }
  if (coords.size() > 24) throw std::invalid_argument("support exceeds search guard (24)");

  if (x.norm() != 1) {
    result.reason = SplitCheck::Reason::NormNotOne;
    return result;
  }
  const Rational target = dyadic_unit(static_cast<unsigned>(n));

  if (use_shortcut) {
    size_t arg = 0;
    for (size_t i = 1; i < values.size(); ++i)
      if (values[i] > values[arg]) arg = i;
    if (!values.empty() && values[arg] > target) {
      result.reason = SplitCheck::Reason::MaxCoordinate;
      result.obstruction = {coords[arg], x.get(coords[arg])};
      return result;
    }
  }

  if (n > 40 || (static_cast<uint64_t>(1) << n) > coords.size()) {
    // each part must be nonempty (its absolute sum is 2^-n > 0)
    result.reason = SplitCheck::Reason::TooManyParts;
    return result;
  }
  const int parts = static_cast<int>(static_cast<uint64_t>(1) << n);

  // Descending order makes the backtracking prune early.
  std::vector<size_t> order(values.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return coords[a] < coords[b];
  });
  std::vector<Rational> sorted_values;
  std::vector<int64_t> sorted_coords;
  for (size_t i : order) {
    sorted_values.push_back(values[i]);
    sorted_coords.push_back(coords[i]);
  }

  std::vector<int> assignment(values.size(), -1);
  if (partition_search(sorted_values, target, parts, assignment)) {
    result.verdict = SplitCheck::Verdict::Feasible;
    result.reason = SplitCheck::Reason::None;
    result.partition.assign(static_cast<size_t>(parts), {});
    for (size_t i = 0; i < assignment.size(); ++i)
      result.partition[static_cast<size_t>(assignment[i])].push_back(sorted_coords[i]);
    for (auto& group : result.partition) std::sort(group.begin(), group.end());
    return result;
  }
  result.reason = SplitCheck::Reason::SearchExhausted;
  return result;
}

}  // namespace lpembed
