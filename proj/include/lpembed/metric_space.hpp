#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpembed/rational.hpp"

namespace lpembed {

enum class Arith { Rational, Double };

// Finite metric space given by a symmetric distance matrix. The matrix is
// tagged: rational matrices support exact comparisons, double matrices are
// checked with a relative tolerance of kDoubleMetricTol.
//
// Construction enforces shape only (square, n >= 1, entries present);
// metric axioms are the business of validate_space so that callers can
// inspect broken inputs instead of just being thrown at.
class FiniteMetricSpace {
 public:
  static constexpr double kDoubleMetricTol = 1e-9;

  FiniteMetricSpace() = default;  // empty; fill via the factories

  static FiniteMetricSpace from_double(std::vector<std::vector<double>> dist,
                                       std::vector<std::string> labels = {});
  static FiniteMetricSpace from_rational(std::vector<std::vector<Rational>> dist,
                                         std::vector<std::string> labels = {});

  int size() const { return n_; }
  Arith arith() const { return arith_; }
  bool exact() const { return arith_ == Arith::Rational; }

  // Numeric view, valid for both arithmetics.
  double d(int i, int j) const { return ddist_[static_cast<size_t>(i) * n_ + j]; }
  // Exact view; only valid when exact().
  const Rational& rd(int i, int j) const;

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[static_cast<size_t>(i)]; }

  double max_entry() const;

 private:
  int n_ = 0;
  Arith arith_ = Arith::Double;
  std::vector<double> ddist_;      // row-major n*n, always populated
  std::vector<Rational> rdist_;    // populated iff arith_ == Rational
  std::vector<std::string> labels_;
};

enum class ViolationKind {
  NegativeEntry,
  NonzeroDiagonal,
  Asymmetric,
  ZeroOffDiagonal,
  TriangleInequality,
};

struct MetricViolation {
  ViolationKind kind;
  int i = -1, j = -1, k = -1;  // offending pair/triple (k unused except triangles)
  std::string message;
};

// Empty result iff all metric axioms hold. Rational matrices are checked
// exactly; double matrices within kDoubleMetricTol relative to the largest
// entry involved.
std::vector<MetricViolation> validate_space(const FiniteMetricSpace& space);

// Builds the metric space of pairwise distances |x_i - x_j| of points on a
// line. Handy for tests and small constructions.
FiniteMetricSpace line_metric(const std::vector<double>& coords);

}  // namespace lpembed
