#include "lpembed/net.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lpembed {

EuclideanPointSet EuclideanPointSet::from(std::vector<Eigen::VectorXd> pts) {
  EuclideanPointSet s;
  s.points = std::move(pts);
  s.dim = s.points.empty() ? 0 : static_cast<int>(s.points.front().size());
  for (const auto& p : s.points)
    if (p.size() != s.dim) throw std::invalid_argument("mixed dimensions in point set");
  return s;
}

NetSchedule NetSchedule::reciprocal() {
  NetSchedule s;
  s.reciprocal_ = true;
  s.spec_ = "1/(4n)";
  return s;
}

NetSchedule NetSchedule::from_list(std::vector<double> deltas) {
  NetSchedule s;
  s.reciprocal_ = false;
  if (deltas.empty()) throw std::invalid_argument("empty delta list");
  for (size_t i = 0; i < deltas.size(); ++i) {
    if (!(deltas[i] > 0)) throw std::invalid_argument("deltas must be positive");
    if (i > 0 && deltas[i] > deltas[i - 1])
      throw std::invalid_argument("delta schedule must be nonincreasing");
  }
  std::ostringstream os;
  for (size_t i = 0; i < deltas.size(); ++i) os << (i ? "," : "") << deltas[i];
  s.spec_ = os.str();
  s.list_ = std::move(deltas);
  return s;
}

NetSchedule NetSchedule::parse(const std::string& spec) {
  std::string trimmed;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) trimmed.push_back(c);
  if (trimmed.empty() || trimmed == "1/(4n)") return reciprocal();
  std::vector<double> vals;
  std::stringstream ss(trimmed);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad delta entry: '" + tok + "'");
    vals.push_back(v);
  }
  return from_list(std::move(vals));
}

double NetSchedule::delta(int n) const {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  if (reciprocal_) return 1.0 / (4.0 * n);
  if (static_cast<size_t>(n) > list_.size())
    throw std::invalid_argument("delta schedule has no entry for level " + std::to_string(n));
  return list_[static_cast<size_t>(n - 1)];
}

namespace {

// Flat candidate store with a uniform grid for radius queries.
class CandidateIndex {
 public:
  CandidateIndex(int dim, double cell, double extent) : dim_(dim), cell_(cell) {
    per_dim_ = static_cast<int>(std::floor(2.0 * extent / cell_)) + 2;
    lo_ = -extent;
    double total = 1.0;
    for (int d = 0; d < dim_; ++d) total *= per_dim_;
    if (total > 6e7) throw std::runtime_error("net grid too large for this delta and dimension");
    cells_ = static_cast<size_t>(total);
  }

  void rebuild(const std::vector<double>& coords, size_t count) {
    start_.assign(cells_ + 1, 0);
    order_.resize(count);
    std::vector<uint32_t> cell_of(count);
    for (size_t i = 0; i < count; ++i) {
      cell_of[i] = cell_id(&coords[i * static_cast<size_t>(dim_)]);
      ++start_[cell_of[i] + 1];
    }
    for (size_t c = 0; c < cells_; ++c) start_[c + 1] += start_[c];
    std::vector<uint32_t> cursor(start_.begin(), start_.end() - 1);
    for (size_t i = 0; i < count; ++i) order_[cursor[cell_of[i]]++] = static_cast<uint32_t>(i);
  }

  // Visit candidate indices in every cell intersecting the box of half-width
  // r around q (relative coordinates).
  template <typename F>
  void visit_box(const double* q, double r, F&& fn) const {
    int lo_idx[8], hi_idx[8], it[8];
    for (int d = 0; d < dim_; ++d) {
      lo_idx[d] = std::max(0, grid_coord(q[d] - r));
      hi_idx[d] = std::min(per_dim_ - 1, grid_coord(q[d] + r));
      it[d] = lo_idx[d];
      if (lo_idx[d] > hi_idx[d]) return;
    }
    while (true) {
      size_t cell = 0;
      for (int d = 0; d < dim_; ++d) cell = cell * static_cast<size_t>(per_dim_) + static_cast<size_t>(it[d]);
      for (uint32_t k = start_[cell]; k < start_[cell + 1]; ++k) fn(order_[k]);
      int d = dim_ - 1;
      while (d >= 0) {
        if (++it[d] <= hi_idx[d]) break;
        it[d] = lo_idx[d];
        --d;
      }
      if (d < 0) break;
    }
  }

 private:
  int grid_coord(double x) const {
    return static_cast<int>(std::floor((x - lo_) / cell_));
  }
  uint32_t cell_id(const double* p) const {
    size_t cell = 0;
    for (int d = 0; d < dim_; ++d) {
      int g = std::clamp(grid_coord(p[d]), 0, per_dim_ - 1);
      cell = cell * static_cast<size_t>(per_dim_) + static_cast<size_t>(g);
    }
    return static_cast<uint32_t>(cell);
  }

  int dim_;
  double cell_;
  double lo_;
  int per_dim_;
  size_t cells_ = 0;
  std::vector<uint32_t> start_;
  std::vector<uint32_t> order_;
};

inline double dist_sq(const double* a, const double* b, int dim) {
  double s = 0.0;
  for (int d = 0; d < dim; ++d) {
    const double t = a[d] - b[d];
    s += t * t;
  }
  return s;
}

// Heap key: float distance bits above a complemented index, so the max-heap
// pops the farthest candidate and, among float ties, the lowest index.
inline uint64_t encode_key(double dist, uint32_t idx) {
  float f = static_cast<float>(dist);
  uint32_t bits;
  std::memcpy(&bits, &f, sizeof bits);
  return (static_cast<uint64_t>(bits) << 32) | static_cast<uint64_t>(~idx);
}
inline uint32_t key_index(uint64_t key) { return ~static_cast<uint32_t>(key & 0xffffffffu); }
inline uint32_t key_bits(uint64_t key) { return static_cast<uint32_t>(key >> 32); }
inline uint32_t float_bits(double dist) {
  float f = static_cast<float>(dist);
  uint32_t bits;
  std::memcpy(&bits, &f, sizeof bits);
  return bits;
}

// Lattice points of spacing `s` inside the origin-centered ball, expressed
// relative to the ball center. `skip_even` drops points whose integer
// coordinates are all even (already present at the coarser level). The
// just-outside shell is radially projected onto the sphere to keep the
// boundary covered.
void generate_lattice(int dim, double radius, double s, bool skip_even, bool project_shell,
                      std::vector<double>& out) {
  const int m = static_cast<int>(std::floor(radius / s));
  const double shell = radius / s + 0.5 * std::sqrt(static_cast<double>(dim));
  const int msh = static_cast<int>(std::floor(shell));
  const double r_units_sq = (radius / s) * (radius / s);
  const double shell_sq = shell * shell;

  std::vector<int> z(static_cast<size_t>(dim), -msh);
  while (true) {
    long long nsq = 0;
    bool all_even = true;
    for (int d = 0; d < dim; ++d) {
      nsq += static_cast<long long>(z[static_cast<size_t>(d)]) * z[static_cast<size_t>(d)];
      if (z[static_cast<size_t>(d)] % 2 != 0) all_even = false;
    }
    const double nd = static_cast<double>(nsq);
    if (!(skip_even && all_even)) {
      if (nd <= r_units_sq) {
        for (int d = 0; d < dim; ++d) out.push_back(s * z[static_cast<size_t>(d)]);
      } else if (project_shell && nd <= shell_sq) {
        const double scale = radius / (s * std::sqrt(nd));
        for (int d = 0; d < dim; ++d) out.push_back(s * z[static_cast<size_t>(d)] * scale);
      }
    }
    int d = dim - 1;
    while (d >= 0) {
      if (++z[static_cast<size_t>(d)] <= msh) break;
      z[static_cast<size_t>(d)] = -msh;
      --d;
    }
    if (d < 0) break;
  }
}

}  // namespace

GreedyNetResult greedy_net(const Eigen::VectorXd& center, double radius, double delta,
                           const std::vector<Eigen::VectorXd>& seeds, const NetConfig& config) {
  const int dim = static_cast<int>(center.size());
  if (dim < 1 || dim > 8) throw std::invalid_argument("supported dimensions: 1..8");
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  if (!(radius > 0)) throw std::invalid_argument("radius must be positive");

  // Coarse covering-number estimate; refuse clearly hopeless requests before
  // allocating anything.
  {
    const double per_dim = 1.0 + 2.0 * radius / delta;
    double estimate = 1.0;
    for (int d = 0; d < dim; ++d) estimate *= per_dim;
    estimate *= 0.3;
    if (estimate > static_cast<double>(config.max_points))
      throw std::runtime_error("net too large: estimated " + std::to_string(static_cast<size_t>(estimate)) +
                               " points exceed cap " + std::to_string(config.max_points));
  }

  for (const auto& s : seeds) {
    if (s.size() != dim) throw std::invalid_argument("seed dimension mismatch");
    if ((s - center).norm() > radius + 1e-9)
      throw std::invalid_argument("seed outside the closed ball");
  }

  const int refinements = (dim <= config.refine_dim_cap) ? config.refine_levels : 0;

  GreedyNetResult result;
  result.seed_count = seeds.size();
  result.min_added_separation = std::numeric_limits<double>::infinity();

  std::vector<double> cand;  // flat, relative to center
  std::vector<double> min_dist_sq;
  std::vector<Eigen::VectorXd> net = seeds;
  std::vector<const double*> net_flat;  // relative coords of net points
  std::vector<double> net_rel_storage;
  net_rel_storage.reserve(1024 * static_cast<size_t>(dim));

  auto push_net_rel = [&](const Eigen::VectorXd& p) {
    for (int d = 0; d < dim; ++d) net_rel_storage.push_back(p(d) - center(d));
  };
  for (const auto& s : seeds) push_net_rel(s);

  const double extent = radius + delta;
  CandidateIndex grid(dim, std::max(delta, 1e-12), extent);

  std::priority_queue<uint64_t> heap;
  const uint32_t delta_key = float_bits(delta);

  size_t accepted = 0;

  auto seed_first_point_if_needed = [&]() {
    if (!net.empty()) return;
    // start from the candidate nearest the ball center
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    const size_t count = cand.size() / static_cast<size_t>(dim);
    for (size_t i = 0; i < count; ++i) {
      double dsq = 0.0;
      for (int d = 0; d < dim; ++d) dsq += cand[i * dim + d] * cand[i * dim + d];
      if (dsq < best_d) {
        best_d = dsq;
        best = i;
      }
    }
    if (count == 0) throw std::runtime_error("no candidates inside the ball");
    Eigen::VectorXd p(dim);
    for (int d = 0; d < dim; ++d) p(d) = center(d) + cand[best * dim + d];
    net.push_back(p);
    push_net_rel(p);
  };

  double spacing = delta / 2.0;
  for (int level = 0; level <= refinements; ++level, spacing /= 2.0) {
    const size_t old_count = cand.size() / static_cast<size_t>(dim);
    generate_lattice(dim, radius, spacing, level > 0, config.boundary_projection, cand);
    const size_t count = cand.size() / static_cast<size_t>(dim);
    if (count > config.max_candidates)
      throw std::runtime_error("net too large: candidate lattice exceeds budget");
    min_dist_sq.resize(count, std::numeric_limits<double>::infinity());
    grid.rebuild(cand, count);

    if (level == 0) seed_first_point_if_needed();

    // distances of fresh candidates to the existing net
    if (!net.empty()) {
      for (size_t i = old_count; i < count; ++i) {
        const double* c = &cand[i * static_cast<size_t>(dim)];
        double best = std::numeric_limits<double>::infinity();
        for (size_t j = 0; j < net.size(); ++j) {
          const double dsq = dist_sq(c, &net_rel_storage[j * static_cast<size_t>(dim)], dim);
          best = std::min(best, dsq);
        }
        min_dist_sq[i] = best;
      }
    }
    // brute-force distances above cost as much as one grid pass when the net
    // is small; switch to per-candidate grid probes once it is not
    // (handled implicitly: refinement only runs in low dimensions where the
    // net stays small).

    heap = {};
    for (size_t i = 0; i < count; ++i) {
      const double d0 = std::sqrt(min_dist_sq[i]);
      if (d0 >= delta) heap.push(encode_key(d0, static_cast<uint32_t>(i)));
    }

    while (!heap.empty()) {
      const uint64_t top = heap.top();
      if (key_bits(top) < delta_key) break;  // nothing at distance >= delta remains
      heap.pop();
      const uint32_t idx = key_index(top);
      const double cur = std::sqrt(min_dist_sq[idx]);
      if (float_bits(cur) != key_bits(top)) continue;  // stale entry
      if (!(cur >= delta)) continue;                   // retired by a newer neighbor

      // accept
      if (net.size() + 1 - seeds.size() > config.max_points)
        throw std::runtime_error("net too large: cap " + std::to_string(config.max_points) +
                                 " reached");
      Eigen::VectorXd p(dim);
      const double* crel = &cand[static_cast<size_t>(idx) * dim];
      for (int d = 0; d < dim; ++d) p(d) = center(d) + crel[d];
      net.push_back(p);
      push_net_rel(p);
      ++accepted;
      result.min_added_separation = std::min(result.min_added_separation, cur);

      // candidates closer to p than their current record shrink; only those
      // within the current covering radius can change
      grid.visit_box(crel, cur, [&](uint32_t j) {
        const double dsq = dist_sq(&cand[static_cast<size_t>(j) * dim], crel, dim);
        if (dsq < min_dist_sq[j]) {
          min_dist_sq[j] = dsq;
          const double nd = std::sqrt(dsq);
          if (nd >= delta) heap.push(encode_key(nd, j));
        }
      });
    }
  }

  result.net = EuclideanPointSet::from(std::move(net));
  result.net.dim = dim;
  result.candidates_used = cand.size() / static_cast<size_t>(dim);
  result.lattice_spacing = spacing * 2.0;  // last value actually used
  result.fill_radius = 0.5 * result.lattice_spacing * std::sqrt(static_cast<double>(dim));
  if (accepted == 0) result.min_added_separation = delta;  // vacuous

  if (result.candidates_used <= config.cover_stats_budget) {
    double worst = 0.0;
    const size_t count = result.candidates_used;
    for (size_t i = 0; i < count; ++i) worst = std::max(worst, min_dist_sq[i]);
    result.max_candidate_gap = std::sqrt(worst);
    result.continuum_certified = result.max_candidate_gap + result.fill_radius <= delta;
  }
  return result;
}

}  // namespace lpembed
