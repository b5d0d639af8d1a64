#include "lpembed/schoenberg.hpp"

#include <cmath>
#include <stdexcept>

#include "lpembed/jacobi.hpp"

namespace lpembed {

SchoenbergMatrix schoenberg_matrix(const FiniteMetricSpace& space, int base) {
  const int n = space.size();
  if (n < 2) throw std::invalid_argument("need at least 2 points");
  if (base < 0 || base >= n) throw std::invalid_argument("basepoint out of range");

  SchoenbergMatrix out;
  out.base = base;
  out.exact = space.exact();

  std::vector<int> idx;
  idx.reserve(static_cast<size_t>(n - 1));
  for (int i = 0; i < n; ++i)
    if (i != base) idx.push_back(i);

  out.g.resize(n - 1, n - 1);
  if (out.exact)
    out.g_exact.assign(static_cast<size_t>(n - 1),
                       std::vector<Rational>(static_cast<size_t>(n - 1), Rational(0)));
  for (int a = 0; a < n - 1; ++a)
    for (int b = 0; b < n - 1; ++b) {
      const int i = idx[static_cast<size_t>(a)];
      const int j = idx[static_cast<size_t>(b)];
      if (out.exact) {
        const Rational v =
            (space.rd(base, i) * space.rd(base, i) + space.rd(base, j) * space.rd(base, j) -
             space.rd(i, j) * space.rd(i, j)) /
            2;
        out.g_exact[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
        out.g(a, b) = to_double(v);
      } else {
        out.g(a, b) = (space.d(base, i) * space.d(base, i) + space.d(base, j) * space.d(base, j) -
                       space.d(i, j) * space.d(i, j)) /
                      2.0;
      }
    }
  return out;
}

L2EmbedResult embeds_isometrically_l2(const FiniteMetricSpace& space, int base) {
  const SchoenbergMatrix sm = schoenberg_matrix(space, base);
  const auto eig = jacobi_eigen(sm.g);

  L2EmbedResult out;
  const int m = static_cast<int>(eig.values.size());
  const double scale = std::max(std::abs(eig.values(0)), std::abs(eig.values(m - 1)));
  out.psd_tolerance = 1e-9 * std::max(scale, 1e-300);
  out.min_eigenvalue = eig.values(m - 1);

  if (out.min_eigenvalue < -out.psd_tolerance) {
    out.embeddable = false;
    out.negative_certificate = eig.vectors.col(m - 1);
    return out;
  }

  out.embeddable = true;
  int rank = 0;
  for (int k = 0; k < m; ++k)
    if (eig.values(k) > out.psd_tolerance) ++rank;
  const int dim = std::max(rank, 1);

  const int n = space.size();
  out.coords = Eigen::MatrixXd::Zero(n, dim);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    if (i == sm.base) continue;  // basepoint stays at the origin
    for (int k = 0; k < dim; ++k) {
      const double lambda = std::max(eig.values(k), 0.0);
      out.coords(i, k) = eig.vectors(row, k) * std::sqrt(lambda);
    }
    ++row;
  }
  return out;
}

bool check_collinear(const std::vector<Eigen::VectorXd>& points, double tol) {
  if (points.size() < 2) return true;
  size_t bi = 0, bj = 1;
  double best = -1.0;
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j) {
      const double d = (points[i] - points[j]).norm();
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  if (best <= tol) return true;  // all points effectively coincide
  const Eigen::VectorXd dir = (points[bj] - points[bi]) / best;
  for (const auto& p : points) {
    const Eigen::VectorXd rel = p - points[bi];
    const double off = (rel - dir * dir.dot(rel)).norm();
    if (off > tol) return false;
  }
  return true;
}

}  // namespace lpembed
