#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpembed/ball_growth.hpp"
#include "lpembed/metric_space.hpp"
#include "lpembed/step_function.hpp"

namespace lpembed {

// Finite 0/1 string indexing a dyadic subinterval of (0,1]. The empty string
// stands for the whole interval.
struct DyadicString {
  std::vector<uint8_t> bits;

  size_t length() const { return bits.size(); }
  std::string str() const;  // "01", "" for the empty string

  static DyadicString from_string(const std::string& s);
  // All strings of the given length in numeric (lexicographic) order.
  static std::vector<DyadicString> all_of_length(size_t len);

  bool operator==(const DyadicString& o) const { return bits == o.bits; }
  bool operator<(const DyadicString& o) const { return bits < o.bits; }
};

struct DyadicInterval {
  Rational left;
  Rational right;  // right - left = 2^-length
};

// (sum_i sigma_i 2^-i, 2^-len + sum_i sigma_i 2^-i].
DyadicInterval interval_of_string(const DyadicString& sigma);

// Canonical injection of finite 0/1 strings into the positive integers:
// 2^len + value-of-bits. Never zero; distinct strings never collide.
int64_t psi(const DyadicString& sigma);

// One member of the witness family: the zero function, the unit indicator d
// on (0,1], or f_sigma = indicator of I(sigma) plus a block of height
// len(sigma) on (psi(sigma), psi(sigma)+1].
struct L1Member {
  enum class Kind { Zero, D, F };
  Kind kind = Kind::Zero;
  DyadicString sigma;  // meaningful only for Kind::F
  StepFunction fn;
  std::string label;

  Rational norm() const { return fn.l1_norm(); }
};

L1Member make_zero_member();
L1Member make_d_member();
L1Member make_f_member(const DyadicString& sigma);

// Exact L1 distance between two members.
Rational l1_distance(const L1Member& a, const L1Member& b);

struct L1Space {
  std::vector<L1Member> members;
  FiniteMetricSpace space;  // exact rational matrix, labels match members
};

// {0, d} plus every f_sigma with 1 <= len(sigma) <= max_len: 2^(max_len+1)
// members in total, with the exact pairwise distance matrix. member_cap
// guards the quadratic matrix; 0 means use the built-in default (overridable
// through LP_EMBED_CAP at the CLI layer).
L1Space build_l1_space(int max_len, size_t member_cap = 0);

constexpr size_t kDefaultL1MemberCap = 16384;

struct DecompositionLevelReport {
  int n = 0;
  bool tiles_unit_interval = false;  // {I(sigma)}_{len=n} partitions (0,1]
  bool sums_to_d = false;            // sum of d_sigma equals d exactly
  bool norms_match = false;          // every ||d_sigma|| = 2^-n
};

struct DecompositionReport {
  std::vector<DecompositionLevelReport> levels;
  bool all_ok = false;
};

// Exact verification, for every n <= max_len, that the level-n dyadic
// indicators tile (0,1], sum to d, and each carry norm 2^-n.
DecompositionReport verify_decomposition_identities(int max_len);

// Ball-certification view of the witness: level 0 holds {0, d}, level l >= 1
// holds the 2^l members f_sigma with len(sigma) = l, whose norms 2^-l + l
// are bounded below by l. Lazily generated, so balls of any radius up to the
// enumeration guard can be certified.
LevelFamily l1_level_family();

}  // namespace lpembed
