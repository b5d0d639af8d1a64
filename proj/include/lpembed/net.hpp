#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace lpembed {

struct EuclideanPointSet {
  int dim = 0;
  std::vector<Eigen::VectorXd> points;

  static EuclideanPointSet from(std::vector<Eigen::VectorXd> pts);
};

// Map n -> delta_n. Either the reciprocal default 1/(4n) or an explicit
// positive nonincreasing list.
class NetSchedule {
 public:
  static NetSchedule reciprocal();  // delta_n = 1/(4n)
  static NetSchedule from_list(std::vector<double> deltas);
  // "1/(4n)" or a comma-separated list of positive reals
  static NetSchedule parse(const std::string& spec);

  double delta(int n) const;
  const std::string& spec() const { return spec_; }

 private:
  bool reciprocal_ = true;
  std::vector<double> list_;
  std::string spec_;
};

struct NetConfig {
  size_t max_points = 2'000'000;   // net cardinality cap ("net too large")
  size_t max_candidates = 40'000'000;
  // extra lattice halvings applied in low dimensions, where they are cheap
  // and tighten the covering of the solid ball
  int refine_levels = 2;
  int refine_dim_cap = 2;
  bool boundary_projection = true;
  // compute the exact final candidate gap when the candidate set is small
  // enough to make the closing sweep affordable
  size_t cover_stats_budget = 3'000'000;
};

struct GreedyNetResult {
  EuclideanPointSet net;  // seeds first, then accepted points in pick order
  size_t seed_count = 0;
  // every accepted point was at least this far from the net when accepted
  double min_added_separation = 0.0;
  double lattice_spacing = 0.0;  // finest lattice used
  double fill_radius = 0.0;      // lattice fill radius at that spacing
  // exact max over all candidates of distance to the final net; negative
  // when the closing sweep was skipped for budget reasons
  double max_candidate_gap = -1.0;
  // max_candidate_gap + fill_radius <= delta: the whole solid ball is
  // covered, not just the candidate lattice
  bool continuum_certified = false;
  size_t candidates_used = 0;
};

// Farthest-point greedy net of the closed ball around `center`. Candidates
// live on a lattice of spacing delta/2 (plus sphere projections of the
// just-outside shell); the candidate with the largest distance to the net is
// accepted while that distance is >= delta, ties broken by candidate index.
// The result contains the seeds, is >= delta separated among accepted
// points, and leaves every candidate within < delta of the net.
GreedyNetResult greedy_net(const Eigen::VectorXd& center, double radius, double delta,
                           const std::vector<Eigen::VectorXd>& seeds,
                           const NetConfig& config = {});

}  // namespace lpembed
