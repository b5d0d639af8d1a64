#pragma once

#include <Eigen/Dense>
#include <vector>

namespace lpembed {

// Simplex spanned by k affinely independent vertices in ambient dimension
// >= k-1. Geometry (facets, barycentric coordinates, inscribed balls) is
// computed inside the affine span, so flat embeddings in higher-dimensional
// ambient space behave exactly like full-dimensional ones.
class Simplex {
 public:
  // Throws std::invalid_argument("no interior") when the vertices are
  // affinely dependent.
  explicit Simplex(std::vector<Eigen::VectorXd> vertices);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int ambient_dim() const { return static_cast<int>(vertices_.front().size()); }
  int affine_dim() const { return vertex_count() - 1; }
  const std::vector<Eigen::VectorXd>& vertices() const { return vertices_; }

  Eigen::VectorXd to_local(const Eigen::VectorXd& ambient) const;
  Eigen::VectorXd to_ambient(const Eigen::VectorXd& local) const;
  // Distance from a point to the affine span.
  double span_residual(const Eigen::VectorXd& ambient) const;

  // Barycentric coordinates (sum to one). Entries as low as -1e-12 are
  // clamped to zero and the vector renormalized; anything more negative is
  // reported as outside via the `inside` flag.
  Eigen::VectorXd barycentric(const Eigen::VectorXd& ambient, bool* inside = nullptr) const;

  // Signed distance (within the span) from the local point to facet j, the
  // facet opposite vertex j; positive inside.
  double facet_distance_local(const Eigen::VectorXd& local, int facet) const;
  int facet_count() const { return vertex_count(); }
  // sd_j(x) = facet_normal(j) . x + facet_offset(j), local coordinates
  const Eigen::VectorXd& facet_normal(int j) const { return facet_normals_[static_cast<size_t>(j)]; }
  double facet_offset(int j) const { return facet_offsets_[static_cast<size_t>(j)]; }

 private:
  std::vector<Eigen::VectorXd> vertices_;
  Eigen::VectorXd origin_;                 // vertices_[0]
  Eigen::MatrixXd basis_;                  // ambient x affine_dim, orthonormal columns
  Eigen::MatrixXd bary_transform_;         // k x k: lambda = T * [local;1]
  std::vector<Eigen::VectorXd> facet_normals_;  // unit inward normals (local)
  std::vector<double> facet_offsets_;           // sd_j(x) = n_j . x + off_j
};

struct ChebyshevResult {
  Eigen::VectorXd center;  // ambient coordinates
  double inradius = 0.0;
};

// Center and radius of the largest ball inscribed in the simplex (within its
// affine span): the point maximizing the minimum facet slack. The inscribed
// ball of a simplex touches every facet, so the equal-slack linear system is
// the optimum of the underlying linear program.
ChebyshevResult chebyshev_center(const Simplex& simplex);

struct ContainmentResult {
  bool contains = false;
  int worst_facet = -1;
  double worst_clearance = 0.0;  // min facet distance of the center
};

// True iff every facet clears the ball: facet distance >= radius - 1e-9.
// The center must lie on the affine span (residual <= 1e-9), otherwise a
// dimension-mismatch error is thrown.
ContainmentResult simplex_contains_ball(const Simplex& simplex, const Eigen::VectorXd& center,
                                        double radius);

struct ChainStep {
  Eigen::VectorXd point;  // w_k, ambient
  int dropped_vertex = -1;
  double drop_weight = 0.0;  // barycentric weight of the dropped vertex
};

struct ChainResult {
  std::vector<ChainStep> steps;
  // Terminal 2-vertex face carrying the last point (the input itself when no
  // steps were needed). terminal_edge[1] == -1 when that point is a vertex.
  int terminal_edge[2] = {-1, -1};
};

// Walks a point of the simplex down to an edge: at each step the vertex of
// smallest index among the strictly positive barycentric weights is dropped,
// and w_k = (w_{k-1} - lambda * s_i) / (1 - lambda) keeps w_{k-1} on the
// segment [w_k, s_i]. Points already on an edge or vertex yield an empty
// chain. Throws std::domain_error when z is outside the simplex.
ChainResult chain_points(const Eigen::VectorXd& z, const Simplex& simplex);

}  // namespace lpembed
