#pragma once

#include <json.hpp>
#include <string>

#include "lpembed/interval_vector.hpp"
#include "lpembed/metric_space.hpp"
#include "lpembed/net.hpp"
#include "lpembed/scaffold.hpp"
#include "lpembed/solver.hpp"

namespace lpembed {

using json = nlohmann::json;

// { "n": int, "arith": "rational"|"double", "dist": [[...]], "labels": [...] }
// Rational entries travel as "p/q" strings.
json space_to_json(const FiniteMetricSpace& space);
FiniteMetricSpace space_from_json(const json& j);

// { "dim": int, "points": [[...]] }
json pointset_to_json(const EuclideanPointSet& ps);
EuclideanPointSet pointset_from_json(const json& j);

// { "entries": { "<coordinate>": "p/q", ... } }
json interval_vector_to_json(const IntervalVector& v);
IntervalVector interval_vector_from_json(const json& j);

json scaffold_to_json(const SimplexScaffold& level);
SimplexScaffold scaffold_from_json(const json& j);

// Sidecar with every level plus the axis scalars.
json witness_sidecar_json(const WitnessSpace& w);

json embedding_result_to_json(const EmbeddingResult& r);

void write_json_file(const std::string& path, const json& j);
json read_json_file(const std::string& path);

}  // namespace lpembed
