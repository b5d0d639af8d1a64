#include <doctest.h>

#include <random>

#include "lpembed/net.hpp"

using namespace lpembed;

namespace {

Eigen::VectorXd v1(double x) {
  Eigen::VectorXd v(1);
  v << x;
  return v;
}

Eigen::VectorXd v2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

double dist_to_net(const Eigen::VectorXd& p, const EuclideanPointSet& net) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& q : net.points) best = std::min(best, (p - q).norm());
  return best;
}

}  // namespace

TEST_CASE("schedule parsing") {
  const auto rec = NetSchedule::parse("1/(4n)");
  CHECK(rec.delta(1) == doctest::Approx(0.25));
  CHECK(rec.delta(4) == doctest::Approx(1.0 / 16.0));
  const auto list = NetSchedule::parse("0.5, 0.25, 0.25");
  CHECK(list.delta(2) == doctest::Approx(0.25));
  CHECK_THROWS_AS(list.delta(4), std::invalid_argument);
  CHECK_THROWS_AS(NetSchedule::parse("0.1,0.5"), std::invalid_argument);  // increasing
  CHECK_THROWS_AS(NetSchedule::parse("0,0"), std::invalid_argument);
}

TEST_CASE("segment net with delta 0.5 around seed 1 has about five points") {
  // ball of radius 1 around 1 on the line is the segment [0, 2]
  const auto res = greedy_net(v1(1.0), 1.0, 0.5, {v1(1.0)}, NetConfig{.refine_levels = 0});
  CHECK(res.net.points.size() >= 4);
  CHECK(res.net.points.size() <= 6);
  CHECK(res.net.points.front() == v1(1.0));  // seed kept first
  bool has_zero = false, has_two = false;
  for (const auto& p : res.net.points) {
    if (std::abs(p(0)) < 1e-12) has_zero = true;
    if (std::abs(p(0) - 2.0) < 1e-12) has_two = true;
  }
  CHECK(has_zero);
  CHECK(has_two);
}

TEST_CASE("a delta wider than the ball leaves a single point at the center") {
  const auto res = greedy_net(v2(0.3, -0.2), 1.0, 3.0, {});
  REQUIRE(res.net.points.size() == 1);
  CHECK((res.net.points[0] - v2(0.3, -0.2)).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("net points stay inside the closed ball") {
  const auto res = greedy_net(v2(1.0, 2.0), 1.0, 0.3, {});
  for (const auto& p : res.net.points) CHECK((p - v2(1.0, 2.0)).norm() <= 1.0 + 1e-12);
}

TEST_CASE("accepted points are delta-separated") {
  const auto res = greedy_net(v2(0.0, 0.0), 1.0, 0.4, {});
  CHECK(res.min_added_separation >= 0.4);
  const auto& pts = res.net.points;
  for (size_t i = res.seed_count; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j)
      CHECK((pts[i] - pts[j]).norm() >= 0.4 - 1e-12);
}

TEST_CASE("Monte-Carlo covering of the unit disk at delta 0.4") {
  const auto res = greedy_net(v2(0.0, 0.0), 1.0, 0.4, {});
  INFO("net size ", res.net.points.size(), " gap ", res.max_candidate_gap, " fill ",
       res.fill_radius);
  CHECK(res.max_candidate_gap >= 0.0);
  CHECK(res.max_candidate_gap < 0.4);

  std::mt19937_64 rng(20240810);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int checked = 0;
  while (checked < 10000) {
    const Eigen::VectorXd p = v2(unit(rng), unit(rng));
    if (p.norm() > 1.0) continue;
    ++checked;
    CHECK(dist_to_net(p, res.net) <= 0.4);
  }
}

TEST_CASE("seeds may break separation but are always kept") {
  const std::vector<Eigen::VectorXd> seeds = {v2(0.0, 0.0), v2(0.05, 0.0)};
  const auto res = greedy_net(v2(0.0, 0.0), 1.0, 0.5, seeds);
  CHECK(res.seed_count == 2);
  CHECK(res.net.points[0] == seeds[0]);
  CHECK(res.net.points[1] == seeds[1]);
}

TEST_CASE("a seed outside the ball is rejected") {
  CHECK_THROWS_AS(greedy_net(v2(0, 0), 1.0, 0.5, {v2(2.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("an impossible cardinality is refused up front") {
  NetConfig cfg;
  cfg.max_points = 100;
  CHECK_THROWS_WITH_AS(greedy_net(v2(0, 0), 1.0, 1e-3, {}, cfg), doctest::Contains("net too large"),
                       std::runtime_error);
}

TEST_CASE("net construction is deterministic") {
  const auto a = greedy_net(v2(0.1, 0.2), 1.0, 0.35, {});
  const auto b = greedy_net(v2(0.1, 0.2), 1.0, 0.35, {});
  REQUIRE(a.net.points.size() == b.net.points.size());
  for (size_t i = 0; i < a.net.points.size(); ++i) CHECK(a.net.points[i] == b.net.points[i]);
}
