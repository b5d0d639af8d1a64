#include "lpembed/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace lpembed {

namespace {

json vector_to_json(const Eigen::VectorXd& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v(i));
  return arr;
}

Eigen::VectorXd vector_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coordinate array");
  Eigen::VectorXd v(j.size());
  for (size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = j[i].get<double>();
  return v;
}

}  // namespace

json space_to_json(const FiniteMetricSpace& space) {
  json j;
  const int n = space.size();
  j["n"] = n;
  j["arith"] = space.exact() ? "rational" : "double";
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) {
      if (space.exact())
        row.push_back(rational_to_string(space.rd(i, k)));
      else
        row.push_back(space.d(i, k));
    }
    rows.push_back(std::move(row));
  }
  j["dist"] = std::move(rows);
  j["labels"] = space.labels();
  return j;
}

FiniteMetricSpace space_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const std::string arith = j.at("arith").get<std::string>();
    const auto& rows = j.at("dist");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw std::invalid_argument("dist row count does not match n");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();

    if (arith == "rational") {
      std::vector<std::vector<Rational>> dist;
      for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(rational_from_string(cell.get<std::string>()));
        dist.push_back(std::move(r));
      }
      return FiniteMetricSpace::from_rational(std::move(dist), std::move(labels));
    }
    if (arith == "double") {
      std::vector<std::vector<double>> dist;
      for (const auto& row : rows) dist.push_back(row.get<std::vector<double>>());
      return FiniteMetricSpace::from_double(std::move(dist), std::move(labels));
    }
    throw std::invalid_argument("arith must be 'rational' or 'double'");
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed metric space JSON: ") + e.what());
  }
}

json pointset_to_json(const EuclideanPointSet& ps) {
  json j;
  j["dim"] = ps.dim;
  json pts = json::array();
  for (const auto& p : ps.points) pts.push_back(vector_to_json(p));
  j["points"] = std::move(pts);
  return j;
}

EuclideanPointSet pointset_from_json(const json& j) {
  try {
    EuclideanPointSet ps;
    ps.dim = j.at("dim").get<int>();
    for (const auto& p : j.at("points")) {
      ps.points.push_back(vector_from_json(p));
      if (ps.points.back().size() != ps.dim)
        throw std::invalid_argument("point dimension mismatch");
    }
    return ps;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed point set JSON: ") + e.what());
  }
}

json interval_vector_to_json(const IntervalVector& v) {
  json entries = json::object();
  for (const auto& [i, val] : v.entries) entries[std::to_string(i)] = rational_to_string(val);
  json j;
  j["entries"] = std::move(entries);
  return j;
}

IntervalVector interval_vector_from_json(const json& j) {
  try {
    IntervalVector v;
    for (const auto& [key, val] : j.at("entries").items())
      v.set(std::stoll(key), rational_from_string(val.get<std::string>()));
    return v;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed interval vector JSON: ") + e.what());
  }
}

namespace {

json chain_to_json(const ScaffoldChain& c) {
  json j;
  j["z"] = c.net_registry_id;
  j["steps"] = c.step_ids;
  j["dropped"] = c.dropped;
  j["edge"] = {c.terminal_edge[0], c.terminal_edge[1]};
  return j;
}

ScaffoldChain chain_from_json(const json& j) {
  ScaffoldChain c;
  c.net_registry_id = j.at("z").get<int>();
  c.step_ids = j.at("steps").get<std::vector<int>>();
  c.dropped = j.at("dropped").get<std::vector<int>>();
  c.terminal_edge[0] = j.at("edge")[0].get<int>();
  c.terminal_edge[1] = j.at("edge")[1].get<int>();
  return c;
}

const char* kind_name(ScaffoldPointKind k) {
  switch (k) {
    case ScaffoldPointKind::Origin: return "origin";
    case ScaffoldPointKind::Vertex: return "vertex";
    case ScaffoldPointKind::Net: return "net";
    case ScaffoldPointKind::Chain: return "chain";
  }
  return "origin";
}

ScaffoldPointKind kind_from_name(const std::string& s) {
  if (s == "origin") return ScaffoldPointKind::Origin;
  if (s == "vertex") return ScaffoldPointKind::Vertex;
  if (s == "net") return ScaffoldPointKind::Net;
  if (s == "chain") return ScaffoldPointKind::Chain;
  throw std::invalid_argument("unknown registry point kind: " + s);
}

}  // namespace

json scaffold_to_json(const SimplexScaffold& level) {
  json j;
  j["n"] = level.n;
  j["params"] = {{"t", level.params.t}, {"u", level.params.u}};
  j["delta"] = level.delta;
  j["y"] = vector_to_json(level.shift);
  j["inradius"] = level.inradius;
  j["net_begin"] = level.net_begin;
  j["net_count"] = level.net_count;
  j["chain_begin"] = level.chain_begin;
  j["min_member_norm"] = level.min_member_norm;
  j["certificates"] = {{"containment", level.containment_certificate},
                       {"distance", level.distance_certificate}};
  json reg = json::array();
  for (const auto& p : level.registry)
    reg.push_back(
        {{"label", p.label}, {"kind", kind_name(p.kind)}, {"coords", vector_to_json(p.coords)}});
  j["registry"] = std::move(reg);
  json chains = json::array();
  for (const auto& c : level.chains) chains.push_back(chain_to_json(c));
  j["chains"] = std::move(chains);
  json verts = json::array();
  for (int i = 0; i <= level.n; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(level.n);
    v(std::min(i, level.n - 1)) = (i < level.n) ? level.params.t : level.params.u;
    verts.push_back(vector_to_json(v));
  }
  j["vertices"] = std::move(verts);
  return j;
}

SimplexScaffold scaffold_from_json(const json& j) {
  try {
    SimplexScaffold s;
    s.n = j.at("n").get<int>();
    s.params.n = s.n;
    s.params.t = j.at("params").at("t").get<double>();
    s.params.u = j.at("params").at("u").get<double>();
    s.delta = j.at("delta").get<double>();
    s.shift = vector_from_json(j.at("y"));
    s.inradius = j.at("inradius").get<double>();
    s.net_begin = j.at("net_begin").get<int>();
    s.net_count = j.at("net_count").get<int>();
    s.chain_begin = j.at("chain_begin").get<int>();
    s.min_member_norm = j.at("min_member_norm").get<double>();
    s.containment_certificate = j.at("certificates").at("containment").get<bool>();
    s.distance_certificate = j.at("certificates").at("distance").get<bool>();
    for (const auto& p : j.at("registry"))
      s.registry.push_back({p.at("label").get<std::string>(),
                            vector_from_json(p.at("coords")),
                            kind_from_name(p.at("kind").get<std::string>())});
    for (const auto& c : j.at("chains")) s.chains.push_back(chain_from_json(c));
    return s;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed scaffold JSON: ") + e.what());
  }
}

json witness_sidecar_json(const WitnessSpace& w) {
  json j;
  j["n_max"] = w.n_max;
  j["schedule"] = w.schedule_spec;
  j["alphas"] = w.alphas;
  json levels = json::array();
  for (const auto& level : w.levels) levels.push_back(scaffold_to_json(level));
  j["levels"] = std::move(levels);
  return j;
}

json embedding_result_to_json(const EmbeddingResult& r) {
  json coords = json::array();
  for (Eigen::Index i = 0; i < r.coords.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < r.coords.cols(); ++c) row.push_back(r.coords(i, c));
    coords.push_back(std::move(row));
  }
  json j;
  j["coords"] = std::move(coords);
  j["distortion"] = r.report.distortion;
  j["r"] = r.report.r;
  j["converged"] = r.converged;
  j["restarts_used"] = r.restarts_used;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace lpembed
