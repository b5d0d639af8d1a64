#include "lpembed/jacobi.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace lpembed {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& sym, int max_sweeps) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("matrix must be square");
  const int n = static_cast<int>(sym.rows());
  Eigen::MatrixXd a = (sym + sym.transpose()) / 2.0;  // symmetrize rounding noise
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double frob = a.norm();
  const double threshold = 1e-12 * (frob > 0 ? frob : 1.0);

  EigenDecomposition out;
  if (n == 1) {
    out.values = a.diagonal();
    out.vectors = v;
    return out;
  }

  int sweep = 0;
  while (off_diagonal_norm(a) >= threshold) {
    if (sweep >= max_sweeps) {
      throw std::runtime_error("jacobi eigensolver did not converge after " +
                               std::to_string(sweep) + " sweeps");
    }
    ++sweep;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double tau = (aqq - app) / (2.0 * apq);
        // smaller-magnitude root keeps the rotation angle below pi/4
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }
  out.sweeps = sweep;

  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (a(i, i) != a(j, j)) return a(i, i) > a(j, j);
    return i < j;
  });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<size_t>(k)], order[static_cast<size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<size_t>(k)]);
  }
  return out;
}

}  // namespace lpembed
