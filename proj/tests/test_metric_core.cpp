#include <doctest.h>

#include <algorithm>
#include <random>

#include "lpembed/ball_growth.hpp"
#include "lpembed/distortion.hpp"
#include "lpembed/l1_witness.hpp"
#include "lpembed/linear_tuple.hpp"
#include "lpembed/metric_space.hpp"

using namespace lpembed;

namespace {

FiniteMetricSpace from_rows(std::vector<std::vector<double>> rows) {
  return FiniteMetricSpace::from_double(std::move(rows));
}

}  // namespace

TEST_CASE("validate_space accepts a degenerate collinear metric") {
  // d(1,2)=d(1,3)=1, d(2,3)=2
  const auto s = from_rows({{0, 1, 1}, {1, 0, 2}, {1, 2, 0}});
  CHECK(validate_space(s).empty());
}

TEST_CASE("validate_space flags a triangle violation") {
  const auto s = from_rows({{0, 1, 1}, {1, 0, 3}, {1, 3, 0}});
  const auto v = validate_space(s);
  REQUIRE_FALSE(v.empty());
  CHECK(std::any_of(v.begin(), v.end(), [](const MetricViolation& mv) {
    return mv.kind == ViolationKind::TriangleInequality;
  }));
}

TEST_CASE("validate_space flags a nonzero diagonal") {
  const auto s = from_rows({{0.5, 1}, {1, 0}});
  const auto v = validate_space(s);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().kind == ViolationKind::NonzeroDiagonal);
  CHECK(v.front().i == 0);
}

TEST_CASE("validate_space is exact on rational matrices") {
  // borderline triangle equality holds exactly
  std::vector<std::vector<Rational>> rows = {
      {Rational(0), Rational(1, 3), Rational(2, 3)},
      {Rational(1, 3), Rational(0), Rational(1, 3)},
      {Rational(2, 3), Rational(1, 3), Rational(0)}};
  const auto s = FiniteMetricSpace::from_rational(rows);
  CHECK(validate_space(s).empty());
}

TEST_CASE("non-square input is a structural error") {
  CHECK_THROWS_AS(from_rows({{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("distortion of the identity is exactly 1") {
  const auto s = from_rows({{0, 1, 2.5}, {1, 0, 3}, {2.5, 3, 0}});
  const auto rep = distortion_of_map(s, s, {0, 1, 2});
  CHECK(rep.distortion == 1.0);
  CHECK(rep.r == 1.0);
}

TEST_CASE("uniform scaling is absorbed by r") {
  const auto s = from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  const auto t = from_rows({{0, 3, 6}, {3, 0, 3}, {6, 3, 0}});
  const auto rep = distortion_of_map(s, t, {0, 1, 2});
  CHECK(rep.distortion == doctest::Approx(1.0));
  CHECK(rep.r == doctest::Approx(3.0));
}

TEST_CASE("line {0,1,3} into line {0,1,2} has distortion 2") {
  const auto src = line_metric({0, 1, 3});
  const auto dst = line_metric({0, 1, 2});
  const auto rep = distortion_of_map(src, dst, {0, 1, 2});
  // ratios 1, 1/2, 2/3
  CHECK(rep.distortion == doctest::Approx(2.0));
  CHECK(rep.r == doctest::Approx(0.5));
}

TEST_CASE("distortion is invariant under scaling either matrix") {
  const auto src = line_metric({0, 1, 3, 4.5});
  const auto dst = from_rows({{0, 2, 5, 6}, {2, 0, 3.5, 4}, {5, 3.5, 0, 1.5}, {6, 4, 1.5, 0}});
  const double base = distortion_of_map(src, dst, {0, 1, 2, 3}).distortion;
  for (double lambda : {2.0, 1.0 / 3.0, 10.0}) {
    std::vector<std::vector<double>> scaled(4, std::vector<double>(4, 0.0));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) scaled[i][j] = lambda * dst.d(i, j);
    const auto rep = distortion_of_map(src, from_rows(scaled), {0, 1, 2, 3});
    CHECK(rep.distortion == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("non-injective assignment is rejected") {
  const auto s = from_rows({{0, 1}, {1, 0}});
  CHECK_THROWS_WITH_AS(distortion_of_map(s, s, {0, 0}),
                       doctest::Contains("not an embedding"), std::invalid_argument);
}

TEST_CASE("linear tuple on collinear reals") {
  const auto s = line_metric({0, 0.7, 2.3});
  CHECK(is_linear_tuple(s, {0, 1, 2}));
}

TEST_CASE("equilateral triangle has no linear tuple") {
  const auto s = from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK_FALSE(is_linear_tuple(s, {0, 1, 2}));
  CHECK_FALSE(is_linear_tuple(s, {1, 0, 2}));
}

TEST_CASE("ordering matters for linear tuples") {
  const auto s = line_metric({0, 1, 2, 3});
  CHECK(is_linear_tuple(s, {0, 1, 2, 3}));
  CHECK_FALSE(is_linear_tuple(s, {0, 2, 1, 3}));
}

TEST_CASE("repeated indices are rejected") {
  const auto s = line_metric({0, 1, 2});
  CHECK_THROWS_AS((void)is_linear_tuple(s, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("find_linear_tuples on four equally spaced points") {
  const auto s = line_metric({0, 1, 2, 3});
  const auto tuples = find_linear_tuples(s, 3);
  CHECK(tuples.size() == 4);  // one per 3-subset, each in canonical orientation
  for (const auto& t : tuples) CHECK(t.indices[0] < t.indices[2]);
}

TEST_CASE("find_linear_tuples on an equilateral triangle is empty") {
  const auto s = from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(find_linear_tuples(s, 3).empty());
}

TEST_CASE("find_linear_tuples on three line points") {
  const auto s = line_metric({0, 1, 2});
  const auto tuples = find_linear_tuples(s, 3);
  REQUIRE(tuples.size() == 1);
  CHECK(tuples[0].indices == std::vector<int>{0, 1, 2});
}

TEST_CASE("k larger than n yields an empty list") {
  const auto s = line_metric({0, 1, 2});
  CHECK(find_linear_tuples(s, 4).empty());
}

TEST_CASE("is_linear_tuple agrees with brute-force triple checks on random line metrics") {
  std::mt19937_64 rng(20240811);
  std::uniform_real_distribution<double> coord(0.0, 10.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> xs(6);
    for (auto& x : xs) x = coord(rng);
    std::sort(xs.begin(), xs.end());
    const auto s = line_metric(xs);

    std::vector<int> idx = {0, 1, 2, 3, 4, 5};
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<int> tuple(idx.begin(), idx.begin() + 4);

    // oracle: strict increase from the first entry plus additivity on every
    // ordered triple, straight from the definition
    const double tol = 1e-9 * s.max_entry();
    bool expect = true;
    for (int i = 1; i + 1 < 4; ++i)
      if (!(s.d(tuple[static_cast<size_t>(i)], tuple[0]) <
            s.d(tuple[static_cast<size_t>(i + 1)], tuple[0]) - tol))
        expect = false;
    if (!(s.d(tuple[1], tuple[0]) > tol)) expect = false;
    for (int i = 0; i < 4 && expect; ++i)
      for (int j = i + 1; j < 4 && expect; ++j)
        for (int k = j + 1; k < 4 && expect; ++k)
          if (std::abs(s.d(tuple[static_cast<size_t>(i)], tuple[static_cast<size_t>(k)]) -
                       s.d(tuple[static_cast<size_t>(i)], tuple[static_cast<size_t>(j)]) -
                       s.d(tuple[static_cast<size_t>(j)], tuple[static_cast<size_t>(k)])) > tol)
            expect = false;

    CHECK(is_linear_tuple(s, tuple) == expect);
  }
}

TEST_CASE("ball_count on the l1 witness family") {
  const auto fam = l1_level_family();

  SUBCASE("radius 2 holds zero, d and the two length-1 members") {
    const auto res = ball_count(fam, 2.0);
    REQUIRE(res.members.size() == 4);  // ||f_sigma|| = 3/2 at length 1, 9/4 at length 2
    CHECK(res.members[0].label == "zero");
    CHECK(res.members[1].label == "d");
    CHECK(res.members[2].label == "f_0");
    CHECK(res.members[3].label == "f_1");
    CHECK(res.terminal_level == 3);
  }

  SUBCASE("radius 1/2 holds only zero") {
    const auto res = ball_count(fam, 0.5);
    REQUIRE(res.members.size() == 1);
    CHECK(res.members[0].label == "zero");
  }

  SUBCASE("members are monotone and nested in the radius") {
    const auto small = ball_count(fam, 1.6);
    const auto large = ball_count(fam, 3.3);
    CHECK(small.members.size() <= large.members.size());
    for (const auto& m : small.members) {
      CHECK(std::any_of(large.members.begin(), large.members.end(),
                        [&](const FamilyPoint& p) { return p.label == m.label; }));
    }
  }
}

TEST_CASE("ball_count refuses a family without a divergent bound") {
  LevelFamily fam;
  fam.name = "flat";
  fam.level_cap = 64;
  fam.level_points = [](int) { return std::vector<FamilyPoint>{{"p", 0.5}}; };
  fam.min_norm_bound = [](int) { return 0.0; };  // never clears any radius
  CHECK_THROWS_WITH_AS(ball_count(fam, 1.0), doctest::Contains("not certifiable"),
                       std::runtime_error);
}
