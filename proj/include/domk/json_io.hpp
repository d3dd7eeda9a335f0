#pragma once

#include <json.hpp>

#include "domk/colouring.hpp"
#include "domk/model.hpp"
#include "domk/subdivision.hpp"

namespace domk {

using Json = nlohmann::json;

// {"budget": c, "colours": [c1, ..., cn]}
Json to_json(const Colouring& col);
Colouring colouring_from_json(const Json& j);

// {"t": t, "branch_sets": [[...], ...]}
Json to_json(const DominatingModel& m);
DominatingModel model_from_json(const Json& j);

// {"pattern": "K5" | "K5hat" | ..., "branch_map": {"0": v, ...}, "paths": [[...], ...]}
Json to_json(const SubdivisionEmbedding& e);
/// Recognises the pattern names K4, K5 and K5hat.
SubdivisionEmbedding embedding_from_json(const Json& j);

Json to_json(const ModelViolation& v);
Json to_json(const ColouringViolation& v);
Json to_json(const SubdivisionViolation& v);

template <class V>
Json violations_json(const std::vector<V>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) arr.push_back(to_json(v));
    return arr;
}

}  // namespace domk
