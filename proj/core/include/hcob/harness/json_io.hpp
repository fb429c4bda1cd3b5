#pragma once

// JSON encodings used by the CLI and reports.
//   ZeroManifold   [1, -1, ...]
//   BoundaryPoint  ["src" | "tgt", index]
//   Bordism        {"source", "target", "arcs": [[from, to], ...], "circles"}
//   Chain          {"objects", "morphisms"}
//   configuration  {"word": [...]}
//   Rational       "n/d" (also accepts {"num", "den"})
//   cyclic map     {"n", "m", "values"}

#include <vector>

#include <nlohmann/json.hpp>

#include "hcob/bordism.hpp"
#include "hcob/chain.hpp"
#include "hcob/cocycles.hpp"
#include "hcob/cyclic_category.hpp"
#include "hcob/cyclic_sign.hpp"
#include "hcob/error.hpp"
#include "hcob/rational.hpp"

namespace hcob::harness {

using json = nlohmann::json;

/// Malformed input (wrong shape or type). Invariant violations in otherwise
/// well-formed input surface as InvariantViolation from the core.
class SchemaError : public Error {
  public:
    using Error::Error;
};

json to_json(const ZeroManifold& m);
json to_json(BoundaryPoint p);
json to_json(const Bordism& w);
json to_json(const Chain& c);
json to_json(const CyclicConfiguration& c);
json to_json(const Rational& r);
json to_json(const CyclicMap& f);
json to_json(const std::vector<CyclicMap>& maps);
json to_json(const CircleTrace& t);
json to_json(const GammaResult& g);

ZeroManifold zero_manifold_from_json(const json& j);
BoundaryPoint boundary_point_from_json(const json& j);
Bordism bordism_from_json(const json& j);
Chain chain_from_json(const json& j);
CyclicConfiguration config_from_json(const json& j);
Rational rational_from_json(const json& j);
CyclicMap cyclic_map_from_json(const json& j);
/// Array of maps, checked for composability.
std::vector<CyclicMap> cyclic_chain_from_json(const json& j);

} // namespace hcob::harness
