#include "lpembed/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpembed {

namespace {

std::vector<std::string> default_labels(int n, std::vector<std::string> given) {
  if (!given.empty()) {
    if (static_cast<int>(given.size()) != n)
      throw std::invalid_argument("label count does not match point count");
    return given;
  }
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

template <typename T>
void check_square(const std::vector<std::vector<T>>& dist) {
  if (dist.empty()) throw std::invalid_argument("empty distance matrix");
  const size_t n = dist.size();
  for (const auto& row : dist)
    if (row.size() != n) throw std::invalid_argument("distance matrix is not square");
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_double(std::vector<std::vector<double>> dist,
                                                 std::vector<std::string> labels) {
  check_square(dist);
  FiniteMetricSpace s;
  s.n_ = static_cast<int>(dist.size());
  s.arith_ = Arith::Double;
  s.ddist_.resize(static_cast<size_t>(s.n_) * s.n_);
  for (int i = 0; i < s.n_; ++i)
    for (int j = 0; j < s.n_; ++j) {
      const double v = dist[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (!std::isfinite(v)) throw std::invalid_argument("non-finite distance entry");
      s.ddist_[static_cast<size_t>(i) * s.n_ + j] = v;
    }
  s.labels_ = default_labels(s.n_, std::move(labels));
  return s;
}

FiniteMetricSpace FiniteMetricSpace::from_rational(std::vector<std::vector<Rational>> dist,
                                                   std::vector<std::string> labels) {
  check_square(dist);
  FiniteMetricSpace s;
  s.n_ = static_cast<int>(dist.size());
  s.arith_ = Arith::Rational;
  s.rdist_.resize(static_cast<size_t>(s.n_) * s.n_);
  s.ddist_.resize(static_cast<size_t>(s.n_) * s.n_);
  for (int i = 0; i < s.n_; ++i)
    for (int j = 0; j < s.n_; ++j) {
      const size_t at = static_cast<size_t>(i) * s.n_ + j;
      s.rdist_[at] = dist[static_cast<size_t>(i)][static_cast<size_t>(j)];
      s.ddist_[at] = to_double(s.rdist_[at]);
    }
  s.labels_ = default_labels(s.n_, std::move(labels));
  return s;
}

const Rational& FiniteMetricSpace::rd(int i, int j) const {
  if (!exact()) throw std::logic_error("exact view requested on a double-tagged space");
  return rdist_[static_cast<size_t>(i) * n_ + j];
}

double FiniteMetricSpace::max_entry() const {
  double m = 0.0;
  for (double v : ddist_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

std::string pair_str(const FiniteMetricSpace& s, int i, int j) {
  return "(" + s.label(i) + "," + s.label(j) + ")";
}

}  // namespace

std::vector<MetricViolation> validate_space(const FiniteMetricSpace& space) {
  std::vector<MetricViolation> out;
  const int n = space.size();
  const bool exact = space.exact();
  const double tol = exact ? 0.0 : FiniteMetricSpace::kDoubleMetricTol * std::max(1.0, space.max_entry());

  for (int i = 0; i < n; ++i) {
    if (exact ? (space.rd(i, i) != 0) : (std::abs(space.d(i, i)) > tol))
      out.push_back({ViolationKind::NonzeroDiagonal, i, i, -1,
                     "dist[" + space.label(i) + "][" + space.label(i) + "] != 0"});
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (exact ? (space.rd(i, j) < 0) : (space.d(i, j) < -tol))
        out.push_back({ViolationKind::NegativeEntry, i, j, -1,
                       "negative distance at " + pair_str(space, i, j)});
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool asym = exact ? (space.rd(i, j) != space.rd(j, i))
                              : (std::abs(space.d(i, j) - space.d(j, i)) > tol);
      if (asym)
        out.push_back({ViolationKind::Asymmetric, i, j, -1,
                       "asymmetry at " + pair_str(space, i, j)});
      const bool zero = exact ? (space.rd(i, j) == 0) : (std::abs(space.d(i, j)) <= tol);
      if (zero)
        out.push_back({ViolationKind::ZeroOffDiagonal, i, j, -1,
                       "zero distance between distinct points " + pair_str(space, i, j)});
    }
  // Triangle inequality over all ordered triples through distinct points.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = j + 1; k < n; ++k) {
        if (k == i) continue;
        const bool bad = exact ? (space.rd(j, k) > space.rd(j, i) + space.rd(i, k))
                               : (space.d(j, k) > space.d(j, i) + space.d(i, k) + tol);
        if (bad)
          out.push_back({ViolationKind::TriangleInequality, j, i, k,
                         "triangle violation: d" + pair_str(space, j, k) + " > d" +
                             pair_str(space, j, i) + " + d" + pair_str(space, i, k)});
      }
    }
  return out;
}

FiniteMetricSpace line_metric(const std::vector<double>& coords) {
  const int n = static_cast<int>(coords.size());
  std::vector<std::vector<double>> dist(static_cast<size_t>(n),
                                        std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dist[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::abs(coords[static_cast<size_t>(i)] - coords[static_cast<size_t>(j)]);
  return FiniteMetricSpace::from_double(std::move(dist));
}

}  // namespace lpembed
