#include "lpembed/scaffold.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace lpembed {

namespace {

std::string byte_key(const Eigen::VectorXd& v) {
  return std::string(reinterpret_cast<const char*>(v.data()),
                     sizeof(double) * static_cast<size_t>(v.size()));
}

std::vector<Eigen::VectorXd> level_vertices(const LevelParams& p) {
  const int n = p.n;
  std::vector<Eigen::VectorXd> verts;
  verts.reserve(static_cast<size_t>(n) + 1);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(i) = p.t;
    verts.push_back(v);
  }
  Eigen::VectorXd apex = Eigen::VectorXd::Zero(n);
  apex(n - 1) = p.u;
  verts.push_back(apex);
  return verts;
}

}  // namespace

LevelParams LevelParams::defaults(int n) {
  LevelParams p;
  p.n = n;
  if (n == 1) {
    p.t = 0.0;
    p.u = 2.0;
  } else {
    p.t = 4.0 * n * (n + 1);
    p.u = 2.0 * p.t;
  }
  return p;
}

Simplex SimplexScaffold::make_simplex() const { return Simplex(level_vertices(params)); }

SimplexScaffold build_level(int n, const NetSchedule& schedule,
                            std::optional<LevelParams> params_in, const NetConfig& net_config) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  LevelParams params = params_in.value_or(LevelParams::defaults(n));
  if (params.n != n) throw std::invalid_argument("params built for a different level");
  if (!(params.u > params.t)) throw std::invalid_argument("level params need u > t");
  if (n >= 2 && !(params.t > 0)) throw std::invalid_argument("level params need t > 0 for n >= 2");

  SimplexScaffold out;
  out.n = n;
  out.params = params;
  out.delta = schedule.delta(n);

  const auto verts = level_vertices(params);
  Simplex simplex(verts);

  const auto cheb = chebyshev_center(simplex);
  out.shift = cheb.center;
  out.inradius = cheb.inradius;

  const auto containment = simplex_contains_ball(simplex, out.shift, 1.0);
  out.containment_certificate = containment.contains;
  if (!out.containment_certificate)
    throw std::runtime_error("level " + std::to_string(n) +
                             " construction: ball containment certificate failed (inradius " +
                             std::to_string(out.inradius) + " < 1)");

  std::vector<Eigen::VectorXd> seeds;
  if (n == 1) {
    Eigen::VectorXd e1(1);
    e1(0) = 1.0;
    seeds.push_back(e1);  // the segment net always carries e_1
  }
  const auto net = greedy_net(out.shift, 1.0, out.delta, seeds, net_config);

  // registry: origin, vertices (dropping coincidences with the origin, which
  // happens exactly for the first vertex of level 1), net, chain points
  out.registry.push_back({"0", Eigen::VectorXd::Zero(n), ScaffoldPointKind::Origin});
  std::unordered_map<std::string, int> seen;
  seen.emplace(byte_key(out.registry[0].coords), 0);

  std::vector<int> vertex_ids;
  for (size_t j = 0; j < verts.size(); ++j) {
    const std::string key = byte_key(verts[j]);
    auto it = seen.find(key);
    if (it != seen.end()) {
      vertex_ids.push_back(it->second);
      continue;
    }
    const int id = static_cast<int>(out.registry.size());
    out.registry.push_back({"s" + std::to_string(j + 1), verts[j], ScaffoldPointKind::Vertex});
    seen.emplace(key, id);
    vertex_ids.push_back(id);
  }

  out.net_begin = static_cast<int>(out.registry.size());
  std::vector<int> net_ids;
  for (const auto& p : net.net.points) {
    const std::string key = byte_key(p);
    if (seen.count(key)) continue;  // endpoint of the segment net that is already a vertex
    const int id = static_cast<int>(out.registry.size());
    out.registry.push_back({"z" + std::to_string(net_ids.size()), p, ScaffoldPointKind::Net});
    seen.emplace(key, id);
    net_ids.push_back(id);
  }
  out.net_count = static_cast<int>(net_ids.size());

  out.chain_begin = static_cast<int>(out.registry.size());
  for (size_t zi = 0; zi < net_ids.size(); ++zi) {
    const int zid = net_ids[zi];
    const auto chain = chain_points(out.registry[static_cast<size_t>(zid)].coords, simplex);
    ScaffoldChain sc;
    sc.net_registry_id = zid;
    sc.terminal_edge[0] = chain.terminal_edge[0];
    sc.terminal_edge[1] = chain.terminal_edge[1];
    for (size_t k = 0; k < chain.steps.size(); ++k) {
      const auto& step = chain.steps[k];
      const std::string key = byte_key(step.point);
      auto it = seen.find(key);
      int id;
      if (it != seen.end()) {
        id = it->second;
      } else {
        id = static_cast<int>(out.registry.size());
        out.registry.push_back({"w" + std::to_string(zi) + "." + std::to_string(k), step.point,
                                ScaffoldPointKind::Chain});
        seen.emplace(key, id);
      }
      sc.step_ids.push_back(id);
      sc.dropped.push_back(step.dropped_vertex);
    }
    out.chains.push_back(std::move(sc));
  }

  out.min_member_norm = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < out.registry.size(); ++i)
    out.min_member_norm = std::min(out.min_member_norm, out.registry[i].coords.norm());

  if (n == 1) {
    // the segment [0, 2e_1] reaches the origin; finiteness of M_1 is its own
    // certificate at this level
    out.distance_certificate = true;
  } else {
    out.distance_certificate = out.min_member_norm >= static_cast<double>(n) - 1e-9;
    if (!out.distance_certificate)
      throw std::runtime_error("level " + std::to_string(n) +
                               " construction: distance certificate failed (min member norm " +
                               std::to_string(out.min_member_norm) + " < " + std::to_string(n) + ")");
  }
  return out;
}

WitnessSpace build_space(int n_max, const NetSchedule& schedule, const NetConfig& net_config) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  WitnessSpace out;
  out.n_max = n_max;
  out.schedule_spec = schedule.spec();

  for (int n = 1; n <= n_max; ++n)
    out.levels.push_back(build_level(n, schedule, std::nullopt, net_config));

  out.alphas.resize(static_cast<size_t>(n_max));
  out.alphas[0] = 1.0;  // e_1 is a net member of level 1
  for (int i = 2; i <= n_max; ++i)
    out.alphas[static_cast<size_t>(i - 1)] = out.levels[static_cast<size_t>(i - 1)].params.t;

  auto lift = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd g = Eigen::VectorXd::Zero(n_max);
    g.head(v.size()) = v;
    return g;
  };

  std::unordered_set<std::string> seen;
  out.points.push_back({"0", Eigen::VectorXd::Zero(n_max), 0});
  seen.insert(byte_key(out.points[0].coords));
  for (const auto& level : out.levels) {
    for (size_t i = 1; i < level.registry.size(); ++i) {
      Eigen::VectorXd g = lift(level.registry[i].coords);
      const std::string key = byte_key(g);
      if (seen.count(key)) continue;
      seen.insert(key);
      out.points.push_back(
          {"L" + std::to_string(level.n) + "/" + level.registry[i].label, std::move(g), level.n});
    }
  }
  return out;
}

FiniteMetricSpace WitnessSpace::to_metric_space(size_t point_cap) const {
  const size_t n = points.size();
  if (n > point_cap)
    throw std::runtime_error("cardinality cap exceeded: " + std::to_string(n) + " points > cap " +
                             std::to_string(point_cap));
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : points) labels.push_back(p.label);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      dist[i][j] = dist[j][i] = (points[i].coords - points[j].coords).norm();
  return FiniteMetricSpace::from_double(std::move(dist), std::move(labels));
}

LevelFamily WitnessSpace::level_family() const {
  LevelFamily fam;
  fam.name = "strictly-convex-witness";
  fam.first_level = 0;
  const auto levels_copy = std::make_shared<std::vector<SimplexScaffold>>(levels);
  const int built = n_max;
  fam.level_points = [levels_copy, built](int level) {
    std::vector<FamilyPoint> pts;
    if (level == 0) {
      pts.push_back({"0", 0.0});
      return pts;
    }
    if (level > built)
      throw std::runtime_error("witness is built to level " + std::to_string(built) +
                               "; larger balls need a deeper build");
    const auto& reg = (*levels_copy)[static_cast<size_t>(level - 1)].registry;
    for (size_t i = 1; i < reg.size(); ++i)
      pts.push_back({"L" + std::to_string(level) + "/" + reg[i].label, reg[i].coords.norm()});
    return pts;
  };
  fam.min_norm_bound = [](int level) {
    return level <= 1 ? 0.0 : static_cast<double>(level);
  };
  return fam;
}

std::vector<Eigen::VectorXd> rigidity_registry(const SimplexScaffold& level,
                                               const std::vector<double>& alphas) {
  if (level.n >= 2 && static_cast<int>(alphas.size()) < level.n - 1)
    throw std::invalid_argument("need alpha_1..alpha_" + std::to_string(level.n - 1) +
                                " to anchor the shared rays");
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(level.registry.size() + static_cast<size_t>(level.n));
  for (const auto& p : level.registry) pts.push_back(p.coords);
  for (int i = 1; i <= level.n - 1; ++i) {
    Eigen::VectorXd a = Eigen::VectorXd::Zero(level.n);
    a(i - 1) = alphas[static_cast<size_t>(i - 1)];
    pts.push_back(a);
  }
  return pts;
}

std::vector<std::string> rigidity_labels(const SimplexScaffold& level,
                                         const std::vector<double>& alphas) {
  (void)alphas;
  std::vector<std::string> labels;
  for (const auto& p : level.registry) labels.push_back(p.label);
  for (int i = 1; i <= level.n - 1; ++i) labels.push_back("a" + std::to_string(i));
  return labels;
}

namespace {

// Registry ids of the simplex vertices. Level 1 maps its first vertex onto
// the origin entry.
std::vector<int> vertex_registry_ids(const SimplexScaffold& level) {
  std::vector<int> ids;
  if (level.n == 1) {
    ids = {0, 1};
  } else {
    for (int j = 0; j <= level.n; ++j) ids.push_back(1 + j);
  }
  return ids;
}

}  // namespace

std::vector<RigidityConstraint> rigidity_constraints(const SimplexScaffold& level,
                                                     const std::vector<double>& alphas) {
  const auto vids = vertex_registry_ids(level);
  std::vector<RigidityConstraint> out;

  if (level.n >= 2) {
    RigidityConstraint apex;
    apex.kind = ConstraintKind::ApexTuple;
    apex.a = 0;
    apex.b = vids[static_cast<size_t>(level.n - 1)];
    apex.c = vids[static_cast<size_t>(level.n)];
    apex.description = "0, s" + std::to_string(level.n) + ", s" + std::to_string(level.n + 1) +
                       " lie on the ray of axis " + std::to_string(level.n);
    out.push_back(apex);
  }

  for (const auto& chain : level.chains) {
    const auto& reg = level.registry;
    const std::string zlabel = reg[static_cast<size_t>(chain.net_registry_id)].label;
    const size_t len = chain.step_ids.size();
    for (size_t k = 0; k < len; ++k) {
      RigidityConstraint c;
      c.kind = ConstraintKind::ChainStep;
      c.a = vids[static_cast<size_t>(chain.dropped[k])];
      c.b = (k == 0) ? chain.net_registry_id : chain.step_ids[k - 1];
      c.c = chain.step_ids[k];
      c.description = zlabel + " chain step " + std::to_string(k + 1);
      out.push_back(c);
    }
    if (chain.terminal_edge[1] >= 0) {
      RigidityConstraint c;
      c.kind = len == 0 ? ConstraintKind::NetEdge : ConstraintKind::TerminalEdge;
      c.a = vids[static_cast<size_t>(chain.terminal_edge[0])];
      c.b = len == 0 ? chain.net_registry_id : chain.step_ids[len - 1];
      c.c = vids[static_cast<size_t>(chain.terminal_edge[1])];
      c.description = zlabel + (len == 0 ? " lies on edge [s" : " terminal point on edge [s") +
                      std::to_string(chain.terminal_edge[0] + 1) + ",s" +
                      std::to_string(chain.terminal_edge[1] + 1) + "]";
      out.push_back(c);
    }
  }

  const int anchor_base = static_cast<int>(level.registry.size());
  for (int i = 1; i <= level.n - 1; ++i) {
    RigidityConstraint c;
    c.kind = ConstraintKind::AxisTuple;
    c.a = 0;
    c.b = anchor_base + (i - 1);
    c.c = vids[static_cast<size_t>(i - 1)];
    c.description = "0, a" + std::to_string(i) + ", s" + std::to_string(i) + " share ray " +
                    std::to_string(i);
    if (alphas.size() >= static_cast<size_t>(i) &&
        alphas[static_cast<size_t>(i - 1)] < level.params.t)
      out.push_back(c);
  }
  return out;
}

RigidityReport verify_embedding_rigidity(const SimplexScaffold& level,
                                         const std::vector<double>& alphas,
                                         const std::vector<Eigen::VectorXd>& image, double tol) {
  const auto sources = rigidity_registry(level, alphas);
  if (image.size() != sources.size())
    throw std::invalid_argument("image must assign a point to every registry entry (" +
                                std::to_string(sources.size()) + ")");
  if (image[0].norm() > tol)
    throw std::invalid_argument("image must map the origin to the origin");
  const int d_img = static_cast<int>(image[0].size());
  for (const auto& p : image)
    if (p.size() != d_img) throw std::invalid_argument("mixed image dimensions");

  RigidityReport rep;

  // constraint pass
  const auto constraints = rigidity_constraints(level, alphas);
  rep.constraints_ok = true;
  for (const auto& c : constraints) {
    const auto& pa = image[static_cast<size_t>(c.a)];
    const auto& pb = image[static_cast<size_t>(c.b)];
    const auto& pc = image[static_cast<size_t>(c.c)];
    const double dab = (pa - pb).norm();
    const double dbc = (pb - pc).norm();
    const double dac = (pa - pc).norm();
    const double residual = std::abs(dac - dab - dbc);
    if (residual > rep.worst_constraint_residual) rep.worst_constraint_residual = residual;
    const bool ordered = dab < dac + tol;
    if (residual > tol || !ordered) {
      rep.constraints_ok = false;
      if (!rep.violated) rep.violated = c;
    }
  }

  // isometry pass: orthogonal fit first, exact pair hunt only when it fails
  const size_t count = sources.size();
  const int d_src = level.n;
  const int d_fit = std::max(d_img, d_src);  // zero-pad narrow images
  Eigen::MatrixXd x(count, d_src), y(count, d_fit);
  y.setZero();
  for (size_t i = 0; i < count; ++i) {
    x.row(static_cast<Eigen::Index>(i)) = sources[i].transpose();
    y.row(static_cast<Eigen::Index>(i)).head(d_img) = image[i].transpose();
  }
  Eigen::MatrixXd cross = x.transpose() * y;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::MatrixXd q = svd.matrixU() * svd.matrixV().transpose().topRows(d_src);
  const Eigen::MatrixXd residuals = x * q - y;
  Eigen::Index worst_row = 0;
  double worst_fit = 0.0;
  for (Eigen::Index i = 0; i < residuals.rows(); ++i) {
    const double r = residuals.row(i).norm();
    if (r > worst_fit) {
      worst_fit = r;
      worst_row = i;
    }
  }
  if (2.0 * worst_fit <= tol) {
    // every pair distance is preserved within tol: |d_Y - d_X| <= r_i + r_j
    rep.isometry_ok = true;
    rep.worst_pair_error = 2.0 * worst_fit;
  } else {
    // locate an offending pair exactly
    double worst = 0.0;
    int wi = -1, wj = -1;
    auto scan_row = [&](size_t i) {
      for (size_t j = 0; j < count; ++j) {
        if (j == i) continue;
        const double err =
            std::abs((sources[i] - sources[j]).norm() - (image[i] - image[j]).norm());
        if (err > worst) {
          worst = err;
          wi = static_cast<int>(std::min(i, j));
          wj = static_cast<int>(std::max(i, j));
        }
      }
    };
    if (count <= 3000) {
      for (size_t i = 0; i < count; ++i) scan_row(i);
    } else {
      scan_row(static_cast<size_t>(worst_row));
      scan_row(0);
    }
    rep.worst_pair_error = worst;
    rep.worst_pair[0] = wi;
    rep.worst_pair[1] = wj;
    rep.isometry_ok = worst <= tol;
  }

  // span data for the axis images
  {
    const auto vids = vertex_registry_ids(level);
    Eigen::MatrixXd axes(level.n, d_img);
    for (int i = 0; i < level.n; ++i) {
      // level 1's first vertex is the origin; its ray is pinned by the far
      // endpoint of the segment instead
      const int id = (level.n == 1) ? vids[1] : vids[static_cast<size_t>(i)];
      axes.row(i) = image[static_cast<size_t>(id)].transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> axis_svd(axes, Eigen::ComputeFullV);
    const auto& sv = axis_svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > 1e-9 * std::max(smax, 1e-300)) ++rank;
    rep.axis_span_rank = rank;
    const Eigen::MatrixXd basis = axis_svd.matrixV().leftCols(rank);
    double worst_span = 0.0;
    for (size_t i = 0; i < count; ++i) {
      const Eigen::VectorXd p = image[i];
      worst_span = std::max(worst_span, (p - basis * (basis.transpose() * p)).norm());
    }
    rep.span_residual_max = worst_span;
  }

  rep.passed = rep.isometry_ok && rep.constraints_ok;
  if (!rep.passed) {
    if (rep.violated)
      rep.detail = "violated constraint: " + rep.violated->description;
    else
      rep.detail = "not an isometry: pair (" + std::to_string(rep.worst_pair[0]) + "," +
                   std::to_string(rep.worst_pair[1]) + ") off by " +
                   std::to_string(rep.worst_pair_error);
  } else {
    rep.detail = "pass";
  }
  return rep;
}

}  // namespace lpembed
