#include "lpembed/solver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "lpembed/jacobi.hpp"
#include "lpembed/schoenberg.hpp"
#include "lpembed/seeding.hpp"

namespace lpembed {

namespace {

double lp_norm(const Eigen::VectorXd& v, double p) {
  if (p == 2.0) return v.norm();
  double s = 0.0;
  for (Eigen::Index k = 0; k < v.size(); ++k) s += std::pow(std::abs(v(k)), p);
  return std::pow(s, 1.0 / p);
}

struct PairData {
  int u, v;
  double d;  // source distance
};

std::vector<PairData> pair_list(const FiniteMetricSpace& space) {
  std::vector<PairData> pairs;
  const int n = space.size();
  pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (space.d(i, j) <= 0) throw std::invalid_argument("space has a zero distance");
      pairs.push_back({i, j, space.d(i, j)});
    }
  return pairs;
}

double mean_distance(const std::vector<PairData>& pairs) {
  double s = 0.0;
  for (const auto& pr : pairs) s += pr.d;
  return s / static_cast<double>(pairs.size());
}

}  // namespace

DistortionReport evaluate_distortion(const Eigen::MatrixXd& coords,
                                     const FiniteMetricSpace& space, double p) {
  const int n = space.size();
  if (coords.rows() != n) throw std::invalid_argument("coordinate rows do not match the space");
  if (n < 2) throw std::invalid_argument("need at least 2 points");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");

  DistortionReport rep;
  bool first = true;
  double dmax = 0.0, dmin = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dy = lp_norm(coords.row(i) - coords.row(j), p);
      if (dy <= 0.0) {
        rep.finite = false;
        rep.max_pair[0] = i;
        rep.max_pair[1] = j;
        rep.distortion = std::numeric_limits<double>::infinity();
        rep.lip_up = rep.distortion;
        rep.r = 0.0;
        return rep;
      }
      const double rho = dy / space.d(i, j);
      if (first || rho > dmax) { dmax = rho; rep.max_pair[0] = i; rep.max_pair[1] = j; }
      if (first || rho < dmin) { dmin = rho; rep.min_pair[0] = i; rep.min_pair[1] = j; }
      first = false;
    }
  rep.r = dmin;
  rep.distortion = dmax == dmin ? 1.0 : dmax / dmin;
  rep.lip_down = 1.0;
  rep.lip_up = rep.distortion;
  return rep;
}

double smoothed_objective(const Eigen::MatrixXd& coords, const FiniteMetricSpace& space, double p,
                          double temperature, Eigen::MatrixXd* grad) {
  const auto pairs = pair_list(space);
  const double t = temperature;
  const size_t m = pairs.size();

  std::vector<double> logratio(m);
  std::vector<Eigen::VectorXd> diffs(m);
  std::vector<double> norms(m);
  for (size_t k = 0; k < m; ++k) {
    diffs[k] = coords.row(pairs[k].u) - coords.row(pairs[k].v);
    norms[k] = lp_norm(diffs[k], p);
    if (norms[k] <= 1e-300) norms[k] = 1e-300;
    logratio[k] = std::log(norms[k]) - std::log(pairs[k].d);
  }

  // stable log-sum-exp both ways
  const double hi = *std::max_element(logratio.begin(), logratio.end());
  const double lo = *std::min_element(logratio.begin(), logratio.end());
  double sum_hi = 0.0, sum_lo = 0.0;
  for (size_t k = 0; k < m; ++k) {
    sum_hi += std::exp((logratio[k] - hi) / t);
    sum_lo += std::exp((lo - logratio[k]) / t);
  }
  const double lse_max = hi + t * std::log(sum_hi);
  const double lse_min = lo - t * std::log(sum_lo);
  const double value = lse_max - lse_min;

  if (grad != nullptr) {
    grad->setZero(coords.rows(), coords.cols());
    for (size_t k = 0; k < m; ++k) {
      const double w_hi = std::exp((logratio[k] - hi) / t) / sum_hi;
      const double w_lo = std::exp((lo - logratio[k]) / t) / sum_lo;
      // d(lse_max)/dl_k = w_hi, d(lse_min)/dl_k = w_lo
      const double weight = w_hi - w_lo;
      // d log||z||_p / dz_k = sign(z_k)|z_k|^{p-1} / ||z||_p^p; sign(0) = 0
      Eigen::VectorXd g(diffs[k].size());
      const double denom = std::pow(norms[k], p);
      for (Eigen::Index c = 0; c < diffs[k].size(); ++c) {
        const double z = diffs[k](c);
        g(c) = z == 0.0 ? 0.0 : (z > 0 ? 1.0 : -1.0) * std::pow(std::abs(z), p - 1.0) / denom;
      }
      grad->row(pairs[k].u) += weight * g.transpose();
      grad->row(pairs[k].v) -= weight * g.transpose();
    }
  }
  return value;
}

namespace {

// Deterministic coordinate pattern polish of the exact objective.
void pattern_polish(Eigen::MatrixXd& coords, const FiniteMetricSpace& space, double p,
                    double scale) {
  double best = evaluate_distortion(coords, space, p).distortion;
  for (double h = 0.05 * scale; h > 1e-8 * scale; h *= 0.5) {
    bool improved = true;
    int rounds = 0;
    while (improved && rounds < 40) {
      improved = false;
      ++rounds;
      for (Eigen::Index i = 0; i < coords.rows(); ++i)
        for (Eigen::Index c = 0; c < coords.cols(); ++c)
          for (const double dir : {+1.0, -1.0}) {
            const double old = coords(i, c);
            coords(i, c) = old + dir * h;
            const double val = evaluate_distortion(coords, space, p).distortion;
            if (val < best - 1e-15) {
              best = val;
              improved = true;
            } else {
              coords(i, c) = old;
            }
          }
    }
  }
}

Eigen::MatrixXd spectral_init(const FiniteMetricSpace& space, int dim) {
  const auto embed = embeds_isometrically_l2(space);
  const int n = space.size();
  Eigen::MatrixXd coords = Eigen::MatrixXd::Zero(n, dim);
  if (embed.embeddable) {
    const int copy = std::min<int>(dim, static_cast<int>(embed.coords.cols()));
    coords.leftCols(copy) = embed.coords.leftCols(copy);
    return coords;
  }
  // truncate the eigenfactorization at the positive part
  const auto sm = schoenberg_matrix(space, 0);
  const auto eig = jacobi_eigen(sm.g);
  int row = 0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) continue;
    for (int k = 0; k < dim && k < eig.values.size(); ++k) {
      const double lambda = std::max(eig.values(k), 0.0);
      coords(i, k) = eig.vectors(row, k) * std::sqrt(lambda);
    }
    ++row;
  }
  return coords;
}

}  // namespace

EmbeddingResult embed_min_distortion(const FiniteMetricSpace& space, const SolveConfig& config) {
  if (!(config.p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  if (config.dim < 1) throw std::invalid_argument("dim must be >= 1");
  if (config.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  const auto violations = validate_space(space);
  if (!violations.empty())
    throw std::invalid_argument("space is not a metric: " + violations.front().message);

  const auto pairs = pair_list(space);
  const double scale = mean_distance(pairs);
  const int n = space.size();

  EmbeddingResult best;
  best.report.distortion = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < config.restarts; ++restart) {
    Eigen::MatrixXd coords;
    if (restart == 0) {
      coords = spectral_init(space, config.dim);
      // a flat init (all zeros) can happen for degenerate truncations
      if (coords.norm() <= 1e-12) coords.setOnes(n, config.dim);
    } else {
      std::mt19937_64 rng(derive_seed(config.seed, "restart" + std::to_string(restart)));
      std::normal_distribution<double> gauss(0.0, 0.5 * scale);
      coords.resize(n, config.dim);
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < config.dim; ++c) coords(i, c) = gauss(rng);
    }

    double temperature = 0.5;
    double step = config.initial_step * scale;
    Eigen::MatrixXd grad;
    Eigen::MatrixXd best_coords = coords;
    double best_val = evaluate_distortion(coords, space, config.p).distortion;
    int last_improvement = 0;
    int stall = 0;

    for (int it = 0; it < config.iterations; ++it) {
      smoothed_objective(coords, space, config.p, temperature, &grad);
      const double gnorm = grad.norm();
      if (gnorm > 1e-300) coords -= (step / gnorm) * grad;

      const double val = evaluate_distortion(coords, space, config.p).distortion;
      if (val < best_val - 1e-12) {
        best_val = val;
        best_coords = coords;
        last_improvement = it;
        stall = 0;
      } else if (++stall >= 50) {
        // plateau: cool the smoothing and shorten the step
        temperature = std::max(temperature * 0.5, 1e-7);
        step = std::max(step * 0.6, 1e-10 * scale);
        stall = 0;
      }
    }

    pattern_polish(best_coords, space, config.p, scale);
    const double polished = evaluate_distortion(best_coords, space, config.p).distortion;

    const bool converged = (config.iterations - last_improvement) > config.iterations / 5;
    if (polished < best.report.distortion) {
      best.coords = best_coords;
      best.report = evaluate_distortion(best_coords, space, config.p);
      best.converged = converged;
      best.restarts_used = restart + 1;
    }
  }
  best.restarts_used = config.restarts;
  return best;
}

namespace {

struct ParamSpace {
  std::vector<double> lo, hi;
  // decode free parameters into an n x dim configuration
  std::function<Eigen::MatrixXd(const std::vector<double>&)> decode;
};

ParamSpace make_param_space(const FiniteMetricSpace& space, double p, int dim) {
  const int n = space.size();
  const double d01 = space.d(0, 1);
  double dmax = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dmax = std::max(dmax, space.d(i, j));
  const double span = 1.6 * dmax / d01;

  ParamSpace ps;
  if (dim == 1) {
    // p0 = 0, p1 = +1 (scale and reflection quotiented)
    for (int i = 2; i < n; ++i) {
      ps.lo.push_back(-span);
      ps.hi.push_back(span);
    }
    ps.decode = [n](const std::vector<double>& v) {
      Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, 1);
      c(1, 0) = 1.0;
      for (int i = 2; i < n; ++i) c(i, 0) = v[static_cast<size_t>(i - 2)];
      return c;
    };
    return ps;
  }

  const bool rotational = (p == 2.0);
  // p0 at the origin; p1 on the unit sphere of the norm. For p = 2 every
  // direction is equivalent; otherwise only the dihedral symmetries of the
  // lp ball are, leaving one octant parameter t in [0,1].
  if (!rotational) {
    ps.lo.push_back(0.0);
    ps.hi.push_back(1.0);
  }
  const int fixed = rotational ? 0 : 1;
  for (int i = 2; i < n; ++i) {
    ps.lo.push_back(-span);
    ps.hi.push_back(span);
    // reflection across the first axis is an isometry for every p, but it
    // only fixes p1 when p1 lies on that axis
    ps.lo.push_back(rotational && i == 2 ? 0.0 : -span);
    ps.hi.push_back(span);
  }
  ps.decode = [n, p, rotational, fixed](const std::vector<double>& v) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, 2);
    if (rotational) {
      c(1, 0) = 1.0;
    } else {
      const double t = v[0];
      const double norm = std::pow(1.0 + std::pow(t, p), 1.0 / p);
      c(1, 0) = 1.0 / norm;
      c(1, 1) = t / norm;
    }
    for (int i = 2; i < n; ++i) {
      c(i, 0) = v[static_cast<size_t>(fixed + 2 * (i - 2))];
      c(i, 1) = v[static_cast<size_t>(fixed + 2 * (i - 2) + 1)];
    }
    return c;
  };
  return ps;
}

}  // namespace

OracleBracket brute_force_oracle(const FiniteMetricSpace& space, double p, int dim,
                                 double grid_resolution) {
  const int n = space.size();
  if (n < 2 || n > 5) throw std::invalid_argument("oracle handles 2..5 points");
  if (dim < 1 || dim > 2) throw std::invalid_argument("oracle handles dim 1..2");
  if (!(grid_resolution > 0)) throw std::invalid_argument("resolution must be positive");
  const auto violations = validate_space(space);
  if (!violations.empty())
    throw std::invalid_argument("space is not a metric: " + violations.front().message);

  const ParamSpace ps = make_param_space(space, p, dim);
  const size_t k = ps.lo.size();

  // coarse pass
  const int coarse_cells = (k >= 6) ? 8 : 12;
  double budget = 1.0;
  for (size_t i = 0; i < k; ++i) budget *= coarse_cells + 1;
  if (budget > 1e8)
    throw std::invalid_argument("oracle budget exceeded: coarse grid needs " +
                                std::to_string(budget) + " evaluations");

  struct Ranked {
    double val;
    std::vector<double> params;
  };
  const size_t keep = 220;
  std::vector<Ranked> top;
  auto offer = [&](double val, const std::vector<double>& params) {
    if (top.size() < keep) {
      top.push_back({val, params});
      std::push_heap(top.begin(), top.end(),
                     [](const Ranked& a, const Ranked& b) { return a.val < b.val; });
    } else if (val < top.front().val) {
      std::pop_heap(top.begin(), top.end(),
                    [](const Ranked& a, const Ranked& b) { return a.val < b.val; });
      top.back() = {val, params};
      std::push_heap(top.begin(), top.end(),
                     [](const Ranked& a, const Ranked& b) { return a.val < b.val; });
    }
  };

  std::vector<double> params(k, 0.0);
  std::vector<double> h(k);
  std::vector<int> it(k, 0);
  for (size_t i = 0; i < k; ++i) h[i] = (ps.hi[i] - ps.lo[i]) / coarse_cells;

  if (k == 0) {
    const Eigen::MatrixXd c = ps.decode({});
    const auto rep = evaluate_distortion(c, space, p);
    OracleBracket out;
    out.upper = rep.distortion;
    out.lower = std::max(1.0, rep.distortion);
    out.resolution = 0.0;
    out.best_coords = c;
    return out;
  }

  while (true) {
    for (size_t i = 0; i < k; ++i) params[i] = ps.lo[i] + h[i] * it[i];
    const auto rep = evaluate_distortion(ps.decode(params), space, p);
    if (rep.finite) offer(rep.distortion, params);
    size_t d = k;
    while (d > 0) {
      if (++it[d - 1] <= coarse_cells) break;
      it[d - 1] = 0;
      --d;
    }
    if (d == 0) break;
  }
  if (top.empty()) throw std::runtime_error("oracle found no nondegenerate configuration");

  auto best_of = [&](const std::vector<Ranked>& v) {
    double b = std::numeric_limits<double>::infinity();
    size_t arg = 0;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i].val < b) {
        b = v[i].val;
        arg = i;
      }
    return std::pair<double, size_t>(b, arg);
  };

  // refinement: shrink the step around the survivors until the target
  // resolution is reached
  double step = *std::max_element(h.begin(), h.end());
  double prev_best = best_of(top).first;
  double refine_delta = 0.0;
  while (step > grid_resolution) {
    step *= 0.5;
    std::vector<Ranked> next = top;
    for (const auto& r : top) {
      std::vector<double> probe = r.params;
      // axis sweeps around each survivor
      for (size_t i = 0; i < k; ++i)
        for (const double dir : {-1.0, +1.0}) {
          probe = r.params;
          probe[i] = std::clamp(probe[i] + dir * step, ps.lo[i], ps.hi[i]);
          const auto rep = evaluate_distortion(ps.decode(probe), space, p);
          if (rep.finite) next.push_back({rep.distortion, probe});
        }
    }
    std::sort(next.begin(), next.end(), [](const Ranked& a, const Ranked& b) {
      if (a.val != b.val) return a.val < b.val;
      return a.params < b.params;
    });
    if (next.size() > keep) next.resize(keep);
    top = std::move(next);
    const double now_best = best_of(top).first;
    refine_delta = prev_best - now_best;
    prev_best = now_best;
  }

  const auto [upper, arg] = best_of(top);
  OracleBracket out;
  out.upper = upper;
  out.refine_delta = std::abs(refine_delta);
  out.resolution = step;
  out.lower = std::max(1.0, upper - std::max(5.0 * step, 3.0 * out.refine_delta));
  out.best_coords = ps.decode(top[arg].params);
  return out;
}

}  // namespace lpembed
