#pragma once

#include <Eigen/Dense>

namespace lpembed {

struct EigenDecomposition {
  Eigen::VectorXd values;   // descending
  Eigen::MatrixXd vectors;  // columns, aligned with values
  int sweeps = 0;
  bool converged = true;
};

// Cyclic Jacobi diagonalization of a dense symmetric matrix. Convergence is
// declared when the off-diagonal Frobenius mass drops below 1e-12 times the
// Frobenius norm of the input; deterministic sweep order, no randomness.
// Throws std::runtime_error with the sweep count if max_sweeps is exhausted.
EigenDecomposition jacobi_eigen(const Eigen::MatrixXd& sym, int max_sweeps = 100);

}  // namespace lpembed
