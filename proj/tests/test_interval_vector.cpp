#include <doctest.h>

#include <random>

#include "lpembed/interval_vector.hpp"
#include "lpembed/l1_witness.hpp"

using namespace lpembed;

namespace {

IntervalVector vec(std::initializer_list<std::pair<int64_t, Rational>> entries) {
  IntervalVector v;
  for (const auto& [i, val] : entries) v.set(i, val);
  return v;
}

IntervalVector random_rational_vector(std::mt19937_64& rng, int max_support) {
  std::uniform_int_distribution<int> support(1, max_support);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 16);
  std::uniform_int_distribution<int64_t> coord(-20, 20);
  IntervalVector v;
  const int s = support(rng);
  for (int k = 0; k < s; ++k) v.set(coord(rng), Rational(num(rng), den(rng)));
  return v;
}

}  // namespace

TEST_CASE("opposite signs never overlap") {
  const auto a = vec({{1, Rational(1, 4)}});
  const auto b = vec({{1, Rational(-1, 4)}});
  CHECK(overlap_length(a, b) == Rational(0));
}

TEST_CASE("overlap with itself is the norm") {
  const auto a = vec({{0, Rational(1, 2)}, {3, Rational(-2, 3)}, {7, Rational(5)}});
  CHECK(overlap_length(a, a) == a.norm());
}

TEST_CASE("nested intervals overlap by the shorter one") {
  const auto a = vec({{1, Rational(1)}});
  const auto b = vec({{1, Rational(1, 2)}});
  CHECK(overlap_length(a, b) == Rational(1, 2));
}

TEST_CASE("overlap equals (|a| + |b| - |a-b|) / 2 on random vectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_rational_vector(rng, 10);
    const auto b = random_rational_vector(rng, 10);
    IntervalVector diff = a;
    for (const auto& [i, val] : b.entries) diff.set(i, diff.get(i) - val);
    CHECK(overlap_length(a, b) == (a.norm() + b.norm() - diff.norm()) / 2);
  }
}

TEST_CASE("derive_x_sigma basics") {
  const auto x = vec({{1, Rational(1)}, {2, Rational(-1)}});
  SUBCASE("disjoint gives zero") {
    const auto y = vec({{5, Rational(1)}});
    CHECK(derive_x_sigma(x, y).entries.empty());
  }
  SUBCASE("identical gives x back") {
    const auto out = derive_x_sigma(x, x);
    CHECK(out.entries == x.entries);
  }
  SUBCASE("per-coordinate signed min") {
    const auto y = vec({{1, Rational(1, 2)}, {2, Rational(1)}});
    const auto out = derive_x_sigma(x, y);
    CHECK(out.get(1) == Rational(1, 2));
    CHECK(out.get(2) == Rational(0));
  }
  SUBCASE("norm equals the overlap length") {
    const auto y = vec({{1, Rational(1, 3)}, {2, Rational(-1, 5)}, {9, Rational(4)}});
    CHECK(derive_x_sigma(x, y).norm() == overlap_length(x, y));
  }
}

TEST_CASE("common rendering reproduces the function overlaps") {
  const auto d = make_d_member();
  for (const char* bits : {"0", "1", "01", "101"}) {
    const auto f = make_f_member(DyadicString::from_string(bits));
    const auto rendered = render_common({&f.fn, &d.fn});
    const unsigned len = static_cast<unsigned>(std::string(bits).size());
    CHECK(rendered[0].norm() == f.norm());
    CHECK(rendered[1].norm() == Rational(1));
    CHECK(overlap_length(rendered[0], rendered[1]) == dyadic_unit(len));
  }
}

TEST_CASE("split check: a full-height coordinate blocks every split") {
  const auto x = vec({{0, Rational(1)}});
  const auto res = disjoint_split_check(x, 1);
  CHECK_FALSE(res.feasible());
  REQUIRE(res.reason == SplitCheck::Reason::MaxCoordinate);
  CHECK(res.obstruction->first == 0);
  CHECK(res.obstruction->second == Rational(1));
}

TEST_CASE("split check on (1/2, 1/2)") {
  const auto x = vec({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  SUBCASE("n=1 splits into singletons") {
    const auto res = disjoint_split_check(x, 1);
    REQUIRE(res.feasible());
    REQUIRE(res.partition.size() == 2);
    CHECK(res.partition[0].size() == 1);
    CHECK(res.partition[1].size() == 1);
  }
  SUBCASE("n=2 is blocked by the max coordinate") {
    const auto res = disjoint_split_check(x, 2);
    CHECK_FALSE(res.feasible());
    CHECK(res.reason == SplitCheck::Reason::MaxCoordinate);
  }
  SUBCASE("the exhaustive search agrees with the shortcut") {
    const auto res = disjoint_split_check(x, 2, /*use_shortcut=*/false);
    CHECK_FALSE(res.feasible());
  }
}

TEST_CASE("split check: four quarters split at n=2") {
  const auto x = vec({{0, Rational(1, 4)}, {1, Rational(1, 4)}, {2, Rational(1, 4)}, {3, Rational(1, 4)}});
  const auto res = disjoint_split_check(x, 2);
  REQUIRE(res.feasible());
  CHECK(res.partition.size() == 4);
  // every group carries exactly 2^-2
  for (const auto& group : res.partition) {
    Rational sum = 0;
    for (int64_t i : group) sum += rational_abs(x.get(i));
    CHECK(sum == Rational(1, 4));
  }
}

TEST_CASE("split check needs unit mass") {
  const auto x = vec({{0, Rational(1, 2)}});
  CHECK(disjoint_split_check(x, 1).reason == SplitCheck::Reason::NormNotOne);
}

TEST_CASE("split check: more parts than support is infeasible") {
  const auto x = vec({{0, Rational(1, 2)}, {1, Rational(1, 2)}});
  const auto res = disjoint_split_check(x, 3, /*use_shortcut=*/false);
  CHECK_FALSE(res.feasible());
  CHECK(res.reason == SplitCheck::Reason::TooManyParts);
}

TEST_CASE("split check: mixed signs partition by absolute value") {
  // norm 1 with signs: |1/2| + |1/4| + |1/4|
  const auto x = vec({{0, Rational(1, 2)}, {1, Rational(-1, 4)}, {2, Rational(1, 4)}});
  const auto res = disjoint_split_check(x, 1);
  REQUIRE(res.feasible());
  REQUIRE(res.partition.size() == 2);
}

TEST_CASE("split check guards huge supports") {
  IntervalVector x;
  for (int64_t i = 0; i < 25; ++i) x.set(i, Rational(1, 25));
  CHECK_THROWS_WITH_AS(disjoint_split_check(x, 1), doctest::Contains("search guard"),
                       std::invalid_argument);
}

TEST_CASE("feasibility flips to infeasible once 2^-n undercuts the max coordinate") {
  // 2^k equal coordinates of 2^-k: feasible for n <= k, infeasible beyond
  for (int k = 1; k <= 3; ++k) {
    IntervalVector x;
    for (int64_t i = 0; i < (1 << k); ++i) x.set(i, dyadic_unit(static_cast<unsigned>(k)));
    for (int n = 0; n <= k; ++n) CHECK(disjoint_split_check(x, n).feasible());
    CHECK_FALSE(disjoint_split_check(x, k + 1).feasible());
    CHECK_FALSE(disjoint_split_check(x, k + 1, false).feasible());
  }
}
