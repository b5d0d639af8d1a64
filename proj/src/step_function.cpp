#include "lpembed/step_function.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lpembed {

StepFunction StepFunction::indicator(const Rational& left, const Rational& right,
                                     const Rational& height) {
  if (!(left < right)) throw std::invalid_argument("indicator needs left < right");
  StepFunction f;
  if (height != 0) f.pieces_.push_back({left, right, height});
  return f;
}

StepFunction StepFunction::combine(
    const std::vector<std::pair<const StepFunction*, Rational>>& terms) {
  // Classic sweep: +h at each piece's left endpoint, -h at its right.
  std::map<Rational, Rational> delta;
  for (const auto& [f, c] : terms) {
    if (c == 0) continue;
    for (const auto& p : f->pieces_) {
      delta[p.left] += c * p.height;
      delta[p.right] -= c * p.height;
    }
  }
  StepFunction out;
  Rational height = 0;
  const Rational* prev = nullptr;
  for (const auto& [x, dh] : delta) {
    if (prev != nullptr && height != 0) {
      // extend-or-append keeps the result canonical
      if (!out.pieces_.empty() && out.pieces_.back().right == *prev &&
          out.pieces_.back().height == height) {
        out.pieces_.back().right = x;
      } else {
        out.pieces_.push_back({*prev, x, height});
      }
    }
    height += dh;
    prev = &x;
  }
  // height returns to zero after the last event for finitely supported input
  return out;
}

StepFunction StepFunction::operator+(const StepFunction& other) const {
  return combine({{this, Rational(1)}, {&other, Rational(1)}});
}

StepFunction StepFunction::operator-(const StepFunction& other) const {
  return combine({{this, Rational(1)}, {&other, Rational(-1)}});
}

StepFunction StepFunction::scaled(const Rational& c) const {
  return combine({{this, c}});
}

Rational StepFunction::l1_norm() const {
  Rational total = 0;
  for (const auto& p : pieces_) total += rational_abs(p.height) * (p.right - p.left);
  return total;
}

Rational StepFunction::value_at(const Rational& x) const {
  for (const auto& p : pieces_)
    if (p.left < x && x <= p.right) return p.height;
  return Rational(0);
}

std::vector<Rational> StepFunction::breakpoints() const {
  std::vector<Rational> out;
  for (const auto& p : pieces_) {
    out.push_back(p.left);
    out.push_back(p.right);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lpembed
