#pragma once

#include <vector>

#include "lpembed/rational.hpp"

namespace lpembed {

// Height over the half-open interval (left, right].
struct StepPiece {
  Rational left;
  Rational right;
  Rational height;
};

// Finitely supported step function on the line with rational breakpoints and
// heights. Canonical form: pieces sorted, disjoint, nonzero, and maximal
// (touching pieces of equal height are merged), so operator== is structural.
class StepFunction {
 public:
  StepFunction() = default;

  static StepFunction indicator(const Rational& left, const Rational& right,
                                const Rational& height = Rational(1));

  // Exact linear combination sum coeff[i] * f[i], computed by one sweep over
  // the merged breakpoint set.
  static StepFunction combine(const std::vector<std::pair<const StepFunction*, Rational>>& terms);

  StepFunction operator+(const StepFunction& other) const;
  StepFunction operator-(const StepFunction& other) const;
  StepFunction scaled(const Rational& c) const;

  bool operator==(const StepFunction& other) const { return pieces_ == other.pieces_; }

  // Integral of |f|.
  Rational l1_norm() const;

  // f(x); pieces are right-closed, so indicator(0,1)(1) = 1 and (0) = 0.
  Rational value_at(const Rational& x) const;

  bool is_zero() const { return pieces_.empty(); }
  const std::vector<StepPiece>& pieces() const { return pieces_; }

  // All breakpoints, sorted, deduplicated.
  std::vector<Rational> breakpoints() const;

 private:
  std::vector<StepPiece> pieces_;
};

inline bool operator==(const StepPiece& a, const StepPiece& b) {
  return a.left == b.left && a.right == b.right && a.height == b.height;
}

}  // namespace lpembed
