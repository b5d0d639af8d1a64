#include "lpembed/simplex.hpp"

#include <stdexcept>

namespace lpembed {

Simplex::Simplex(std::vector<Eigen::VectorXd> vertices) : vertices_(std::move(vertices)) {
  const int k = static_cast<int>(vertices_.size());
  if (k < 2) throw std::invalid_argument("a simplex needs at least 2 vertices");
  const int ambient = static_cast<int>(vertices_.front().size());
  for (const auto& v : vertices_)
    if (v.size() != ambient) throw std::invalid_argument("mixed vertex dimensions");
  if (k - 1 > ambient) throw std::invalid_argument("more vertices than an ambient simplex allows");

  origin_ = vertices_[0];
  Eigen::MatrixXd edges(ambient, k - 1);
  for (int i = 1; i < k; ++i) edges.col(i - 1) = vertices_[static_cast<size_t>(i)] - origin_;

  Eigen::HouseholderQR<Eigen::MatrixXd> qr(edges);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(ambient, k - 1);
  Eigen::MatrixXd r = q.transpose() * edges;
  double scale = edges.norm();
  for (int i = 0; i < k - 1; ++i)
    if (std::abs(r(i, i)) <= 1e-12 * std::max(scale, 1.0))
      throw std::invalid_argument("no interior: vertices are affinely dependent");
  basis_ = q;

  // lambda(x) = T [x;1] with T the inverse of the vertex matrix in local
  // coordinates; row j of T is the affine form of the j-th barycentric
  // coordinate, whose zero set is the facet opposite vertex j.
  Eigen::MatrixXd a(k, k);
  for (int j = 0; j < k; ++j) {
    const Eigen::VectorXd local = basis_.transpose() * (vertices_[static_cast<size_t>(j)] - origin_);
    a.block(0, j, k - 1, 1) = local;
    a(k - 1, j) = 1.0;
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) throw std::invalid_argument("no interior: vertices are affinely dependent");
  bary_transform_ = lu.inverse();

  facet_normals_.resize(static_cast<size_t>(k));
  facet_offsets_.resize(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    Eigen::VectorXd grad = bary_transform_.block(j, 0, 1, k - 1).transpose();
    const double norm = grad.norm();
    if (norm <= 0) throw std::invalid_argument("no interior: degenerate facet");
    facet_normals_[static_cast<size_t>(j)] = grad / norm;
    facet_offsets_[static_cast<size_t>(j)] = bary_transform_(j, k - 1) / norm;
  }
}

Eigen::VectorXd Simplex::to_local(const Eigen::VectorXd& ambient) const {
  return basis_.transpose() * (ambient - origin_);
}

Eigen::VectorXd Simplex::to_ambient(const Eigen::VectorXd& local) const {
  return origin_ + basis_ * local;
}

double Simplex::span_residual(const Eigen::VectorXd& ambient) const {
  const Eigen::VectorXd rel = ambient - origin_;
  return (rel - basis_ * (basis_.transpose() * rel)).norm();
}

Eigen::VectorXd Simplex::barycentric(const Eigen::VectorXd& ambient, bool* inside) const {
  const int k = vertex_count();
  Eigen::VectorXd aug(k);
  aug.head(k - 1) = to_local(ambient);
  aug(k - 1) = 1.0;
  Eigen::VectorXd lambda = bary_transform_ * aug;

  bool ok = true;
  for (int j = 0; j < k; ++j) {
    if (lambda(j) < -1e-12) ok = false;
    if (lambda(j) < 0) lambda(j) = 0.0;
  }
  const double total = lambda.sum();
  if (total > 0) lambda /= total;
  if (inside != nullptr) *inside = ok;
  return lambda;
}

double Simplex::facet_distance_local(const Eigen::VectorXd& local, int facet) const {
  return facet_normals_[static_cast<size_t>(facet)].dot(local) +
         facet_offsets_[static_cast<size_t>(facet)];
}

ChebyshevResult chebyshev_center(const Simplex& simplex) {
  const int k = simplex.facet_count();
  // equal slack across all facets: n_j . x + off_j = r
  Eigen::MatrixXd sys(k, k);
  Eigen::VectorXd rhs(k);
  for (int j = 0; j < k; ++j) {
    sys.block(j, 0, 1, k - 1) = simplex.facet_normal(j).transpose();
    sys(j, k - 1) = -1.0;
    rhs(j) = -simplex.facet_offset(j);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
  if (!lu.isInvertible()) throw std::runtime_error("no interior: equal-slack system is singular");
  const Eigen::VectorXd sol = lu.solve(rhs);

  ChebyshevResult out;
  out.inradius = sol(k - 1);
  out.center = simplex.to_ambient(sol.head(k - 1));
  if (!(out.inradius > 0)) throw std::runtime_error("no interior: nonpositive inradius");
  return out;
}

ContainmentResult simplex_contains_ball(const Simplex& simplex, const Eigen::VectorXd& center,
                                        double radius) {
  if (center.size() != simplex.ambient_dim())
    throw std::invalid_argument("dimension mismatch: center dimension differs from simplex ambient");
  if (simplex.span_residual(center) > 1e-9)
    throw std::invalid_argument("dimension mismatch: center is off the simplex affine span");

  const Eigen::VectorXd local = simplex.to_local(center);
  ContainmentResult out;
  out.worst_clearance = std::numeric_limits<double>::infinity();
  for (int j = 0; j < simplex.facet_count(); ++j) {
    const double dist = simplex.facet_distance_local(local, j);
    if (dist < out.worst_clearance) {
      out.worst_clearance = dist;
      out.worst_facet = j;
    }
  }
  out.contains = out.worst_clearance >= radius - 1e-9;
  return out;
}

ChainResult chain_points(const Eigen::VectorXd& z, const Simplex& simplex) {
  bool inside = false;
  Eigen::VectorXd lambda = simplex.barycentric(z, &inside);
  if (!inside) throw std::domain_error("chain point lies outside the simplex");

  constexpr double kPositive = 1e-12;
  const int k = simplex.vertex_count();

  ChainResult out;
  Eigen::VectorXd current = z;

  auto positive_indices = [&](const Eigen::VectorXd& l) {
    std::vector<int> pos;
    for (int j = 0; j < k; ++j)
      if (l(j) > kPositive) pos.push_back(j);
    return pos;
  };

  while (true) {
    const auto pos = positive_indices(lambda);
    if (static_cast<int>(pos.size()) <= 2) {
      out.terminal_edge[0] = pos.empty() ? -1 : pos[0];
      out.terminal_edge[1] = pos.size() == 2 ? pos[1] : -1;
      return out;
    }
    const int drop = pos.front();  // smallest positive-weight vertex index
    const double w = lambda(drop);
    if (w > 1.0 - 1e-9) {  // numerically a vertex
      out.terminal_edge[0] = drop;
      out.terminal_edge[1] = -1;
      return out;
    }
    current = (current - w * simplex.vertices()[static_cast<size_t>(drop)]) / (1.0 - w);
    lambda /= (1.0 - w);
    lambda(drop) = 0.0;
    out.steps.push_back({current, drop, w});
    if (static_cast<int>(out.steps.size()) > k) throw std::logic_error("chain failed to terminate");
  }
}

}  // namespace lpembed
