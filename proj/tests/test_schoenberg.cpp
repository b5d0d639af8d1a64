#include <doctest.h>

#include <random>

#include "lpembed/jacobi.hpp"
#include "lpembed/linear_tuple.hpp"
#include "lpembed/metric_space.hpp"
#include "lpembed/schoenberg.hpp"

using namespace lpembed;

namespace {

FiniteMetricSpace four_cycle() {
  return FiniteMetricSpace::from_double({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}});
}

FiniteMetricSpace metric_of_points(const std::vector<Eigen::VectorXd>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<double>> d(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d[static_cast<size_t>(i)][static_cast<size_t>(j)] = (pts[static_cast<size_t>(i)] - pts[static_cast<size_t>(j)]).norm();
  return FiniteMetricSpace::from_double(d);
}

}  // namespace

TEST_CASE("jacobi diagonalizes a known 2x2") {
  Eigen::MatrixXd m(2, 2);
  m << 2, 1, 1, 2;
  const auto eig = jacobi_eigen(m);
  CHECK(eig.values(0) == doctest::Approx(3.0));
  CHECK(eig.values(1) == doctest::Approx(1.0));
  // eigenvectors reproduce the matrix
  const Eigen::MatrixXd rec =
      eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
  CHECK((rec - m).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("schoenberg matrix of three collinear points") {
  const auto s = line_metric({0, 1, 2});
  const auto sm = schoenberg_matrix(s, 0);
  CHECK(sm.g(0, 0) == doctest::Approx(1.0));
  CHECK(sm.g(0, 1) == doctest::Approx(2.0));
  CHECK(sm.g(1, 0) == doctest::Approx(2.0));
  CHECK(sm.g(1, 1) == doctest::Approx(4.0));
}

TEST_CASE("schoenberg matrix of two points") {
  const auto s = line_metric({0, 1});
  const auto sm = schoenberg_matrix(s, 0);
  CHECK(sm.g.rows() == 1);
  CHECK(sm.g(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("schoenberg matrix of the unit equilateral triangle") {
  const auto s = FiniteMetricSpace::from_double({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  const auto sm = schoenberg_matrix(s, 0);
  CHECK(sm.g(0, 0) == doctest::Approx(1.0));
  CHECK(sm.g(0, 1) == doctest::Approx(0.5));
  CHECK(sm.g(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("exact schoenberg matrix on rational input") {
  std::vector<std::vector<Rational>> rows = {{Rational(0), Rational(1), Rational(2)},
                                             {Rational(1), Rational(0), Rational(1)},
                                             {Rational(2), Rational(1), Rational(0)}};
  const auto sm = schoenberg_matrix(FiniteMetricSpace::from_rational(rows), 0);
  REQUIRE(sm.exact);
  CHECK(sm.g_exact[0][1] == Rational(2));
  CHECK(sm.g_exact[1][1] == Rational(4));
}

TEST_CASE("collinear points embed with one-dimensional coordinates") {
  const auto res = embeds_isometrically_l2(line_metric({0, 1, 2}));
  REQUIRE(res.embeddable);
  CHECK(res.coords.cols() == 1);
  CHECK(std::abs(res.coords(1, 0)) == doctest::Approx(1.0));
  CHECK(std::abs(res.coords(2, 0)) == doctest::Approx(2.0));
}

TEST_CASE("the 4-cycle does not embed and the certificate is negative") {
  const auto res = embeds_isometrically_l2(four_cycle());
  REQUIRE_FALSE(res.embeddable);
  // min eigenvalue of [[1,2,-1],[2,4,2],[-1,2,1]] is 2 - 2*sqrt(3)
  CHECK(res.min_eigenvalue == doctest::Approx(-1.4641016151377544).epsilon(1e-9));
  const auto sm = schoenberg_matrix(four_cycle(), 0);
  const Eigen::VectorXd v = res.negative_certificate;
  CHECK(v.dot(sm.g * v) < 0.0);
}

TEST_CASE("round-trip: random point sets embed and reproduce their distances") {
  std::mt19937_64 rng(424242);
  std::uniform_int_distribution<int> dim_pick(1, 6);
  std::uniform_int_distribution<int> n_pick(3, 12);
  std::normal_distribution<double> gauss(0.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = dim_pick(rng);
    const int n = n_pick(rng);
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd p(d);
      for (int k = 0; k < d; ++k) p(k) = gauss(rng);
      pts.push_back(p);
    }
    const auto space = metric_of_points(pts);
    if (!validate_space(space).empty()) continue;  // coincidences are astronomically unlikely
    const auto res = embeds_isometrically_l2(space);
    REQUIRE(res.embeddable);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const double rec = (res.coords.row(i) - res.coords.row(j)).norm();
        CHECK(rec == doctest::Approx(space.d(i, j)).epsilon(1e-7));
      }
  }
}

TEST_CASE("the embeddability verdict does not depend on the basepoint") {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Eigen::VectorXd> pts;
    for (int i = 0; i < 6; ++i) {
      Eigen::VectorXd p(3);
      for (int k = 0; k < 3; ++k) p(k) = gauss(rng);
      pts.push_back(p);
    }
    const auto good = metric_of_points(pts);
    for (int base = 0; base < 6; ++base) CHECK(embeds_isometrically_l2(good, base).embeddable);
    for (int base = 0; base < 4; ++base)
      CHECK_FALSE(embeds_isometrically_l2(four_cycle(), base).embeddable);
  }
}

TEST_CASE("check_collinear basics") {
  auto v = [](double x, double y) {
    Eigen::VectorXd p(2);
    p << x, y;
    return p;
  };
  CHECK(check_collinear({v(0, 0), v(1, 1)}, 1e-9));
  CHECK(check_collinear({v(0, 0), v(1, 1), v(2, 2)}, 1e-9));
  CHECK_FALSE(check_collinear({v(0, 0), v(1, 0), v(1, 1)}, 1e-9));
}

TEST_CASE("isometric images of linear tuples are collinear") {
  // line points pushed through a random rotation: additivity of distances
  // forces collinearity, which check_collinear must confirm
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = gauss(rng);
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  const Eigen::MatrixXd q = qr.householderQ();

  const std::vector<double> line = {0.0, 0.8, 1.7, 3.1};
  std::vector<Eigen::VectorXd> images;
  for (double x : line) {
    Eigen::VectorXd p(3);
    p << x, 0, 0;
    images.push_back(q * p);
  }
  const auto space = line_metric(line);
  CHECK(is_linear_tuple(space, {0, 1, 2, 3}));
  CHECK(check_collinear(images, 1e-9));
}
