#include "domk/json_io.hpp"

#include "domk/constructions.hpp"

namespace domk {

Json to_json(const Colouring& col) { return Json{{"budget", col.budget}, {"colours", col.colours}}; }

Colouring colouring_from_json(const Json& j) {
    try {
        return Colouring{j.at("budget").get<int>(), j.at("colours").get<std::vector<int>>()};
    } catch (const Json::exception& e) {
        throw GraphError(std::string("malformed colouring JSON: ") + e.what());
    }
}

Json to_json(const DominatingModel& m) {
    Json sets = Json::array();
    for (const auto& b : m.branch_sets) sets.push_back(b.to_vector());
    return Json{{"t", m.t()}, {"branch_sets", sets}};
}

DominatingModel model_from_json(const Json& j) {
    try {
        DominatingModel m;
        for (const auto& s : j.at("branch_sets")) {
            auto vs = s.get<std::vector<Vertex>>();
            for (Vertex v : vs)
                if (v < 0) throw GraphError("negative vertex in branch set");
            m.branch_sets.push_back(VertexSet::of(vs));
        }
        if (j.contains("t") && j.at("t").get<int>() != m.t()) throw GraphError("model 't' disagrees with branch_sets");
        return m;
    } catch (const Json::exception& e) {
        throw GraphError(std::string("malformed model JSON: ") + e.what());
    }
}

Json to_json(const SubdivisionEmbedding& e) {
    Json map = Json::object();
    for (std::size_t i = 0; i < e.branch_map.size(); ++i) map[std::to_string(i)] = e.branch_map[i];
    return Json{{"pattern", e.pattern_name}, {"branch_map", map}, {"paths", e.paths}};
}

SubdivisionEmbedding embedding_from_json(const Json& j) {
    try {
        SubdivisionEmbedding e;
        e.pattern_name = j.at("pattern").get<std::string>();
        if (e.pattern_name == "K4") e.pattern = complete(4);
        else if (e.pattern_name == "K5") e.pattern = complete(5);
        else if (e.pattern_name == "K5hat") e.pattern = k5_hat();
        else throw GraphError("unknown pattern '" + e.pattern_name + "'");
        const auto& map = j.at("branch_map");
        e.branch_map.assign(static_cast<std::size_t>(e.pattern.order()), -1);
        for (auto it = map.begin(); it != map.end(); ++it) {
            auto idx = std::stoul(it.key());
            if (idx >= e.branch_map.size()) throw GraphError("branch_map key out of range");
            e.branch_map[idx] = it.value().get<Vertex>();
        }
        e.paths = j.at("paths").get<std::vector<std::vector<Vertex>>>();
        return e;
    } catch (const Json::exception& ex) {
        throw GraphError(std::string("malformed embedding JSON: ") + ex.what());
    } catch (const std::logic_error& ex) {
        throw GraphError(std::string("malformed embedding JSON: ") + ex.what());
    }
}

Json to_json(const ModelViolation& v) {
    Json j{{"clause", v.name()}, {"message", v.describe()}};
    if (v.i) j["i"] = v.i;
    if (v.j) j["j"] = v.j;
    if (v.vertex >= 0) j["vertex"] = v.vertex;
    return j;
}

Json to_json(const ColouringViolation& v) {
    Json j{{"message", v.describe()}, {"colour", v.colour}};
    if (v.kind == ColouringViolation::Kind::monochromatic_edge) {
        j["clause"] = "monochromatic_edge";
        j["edge"] = {v.u, v.v};
    } else {
        j["clause"] = "out_of_budget";
        j["vertex"] = v.u;
    }
    return j;
}

Json to_json(const SubdivisionViolation& v) {
    Json j{{"clause", v.name()}, {"message", v.describe()}};
    if (v.path >= 0) j["path"] = v.path;
    if (v.vertex >= 0) j["vertex"] = v.vertex;
    return j;
}

}  // namespace domk
