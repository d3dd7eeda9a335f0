#include "domk/model.hpp"

#include <algorithm>

namespace domk {

VertexSet DominatingModel::support() const {
    VertexSet s;
    for (const auto& b : branch_sets) s |= b;
    return s;
}

std::string ModelViolation::name() const {
    switch (kind) {
        case Kind::out_of_range: return "out_of_range";
        case Kind::empty: return "empty";
        case Kind::overlap: return "overlap";
        case Kind::disconnected: return "disconnected";
        case Kind::undominated: return "undominated";
        case Kind::not_adjacent: return "not_adjacent";
    }
    return "unknown";
}

std::string ModelViolation::describe() const {
    const auto si = std::to_string(i), sj = std::to_string(j), sv = std::to_string(vertex);
    switch (kind) {
        case Kind::out_of_range: return "vertex " + sv + " of T" + si + " is not in the graph";
        case Kind::empty: return "T" + si + " is empty";
        case Kind::overlap: return "vertex " + sv + " lies in T" + si + " and T" + sj;
        case Kind::disconnected: return "T" + si + " does not induce a connected subgraph";
        case Kind::undominated: return "vertex " + sv + " in T" + sj + " has no neighbour in T" + si;
        case Kind::not_adjacent: return "no edge between T" + si + " and T" + sj;
    }
    return "unknown violation";
}

void check_ordered_clique(const Graph& g, const OrderedClique& l) {
    if (l.size() > 2) throw ModelError("ordered clique has more than two vertices");
    for (Vertex v : l.vertices)
        if (v < 0 || v >= g.order()) throw ModelError("clique vertex " + std::to_string(v) + " out of range");
    if (l.size() == 2 && (l[0] == l[1] || !g.adjacent(l[0], l[1])))
        throw ModelError("clique vertices " + std::to_string(l[0]) + "," + std::to_string(l[1]) + " are not adjacent");
}

int index_of(const DominatingModel& model, Vertex v) {
    for (int i = 1; i <= model.t(); ++i)
        if (model.set(i).contains(v)) return i;
    return 0;
}

int index_of(const Graph& g, const DominatingModel& model, Vertex v) {
    g.check_vertex(v);
    return index_of(model, v);
}

namespace {

// Clauses shared by both model notions: range, non-empty, disjoint, connected.
std::vector<ModelViolation> check_shape(const Graph& g, const DominatingModel& model) {
    using K = ModelViolation::Kind;
    std::vector<ModelViolation> out;
    for (int i = 1; i <= model.t(); ++i) {
        for (Vertex v : model.set(i))
            if (v >= g.order()) out.push_back({K::out_of_range, i, 0, v});
        if (model.set(i).empty()) out.push_back({K::empty, i, 0, -1});
    }
    if (!out.empty()) return out;
    for (int i = 1; i <= model.t(); ++i)
        for (int j = i + 1; j <= model.t(); ++j)
            for (Vertex v : model.set(i) & model.set(j)) out.push_back({K::overlap, i, j, v});
    for (int i = 1; i <= model.t(); ++i)
        if (!is_connected_subset(g, model.set(i))) out.push_back({K::disconnected, i, 0, -1});
    return out;
}

}  // namespace

std::vector<ModelViolation> verify_dominating_model(const Graph& g, const DominatingModel& model) {
    auto out = check_shape(g, model);
    if (!out.empty() && out.front().kind == ModelViolation::Kind::out_of_range) return out;
    for (int i = 1; i <= model.t(); ++i)
        for (int j = i + 1; j <= model.t(); ++j)
            for (Vertex v : model.set(j))
                if (!g.neighbours(v).intersects(model.set(i)))
                    out.push_back({ModelViolation::Kind::undominated, i, j, v});
    return out;
}

std::vector<ModelViolation> verify_standard_model(const Graph& g, const DominatingModel& model) {
    auto out = check_shape(g, model);
    if (!out.empty() && out.front().kind == ModelViolation::Kind::out_of_range) return out;
    for (int i = 1; i <= model.t(); ++i) {
        for (int j = i + 1; j <= model.t(); ++j) {
            const auto& tj = model.set(j);
            bool touch = std::any_of(tj.begin(), tj.end(),
                                     [&](Vertex v) { return g.neighbours(v).intersects(model.set(i)); });
            if (!touch) out.push_back({ModelViolation::Kind::not_adjacent, i, j, -1});
        }
    }
    return out;
}

bool is_L_compatible(const Graph& g, const DominatingModel& model, const OrderedClique& l) {
    check_ordered_clique(g, l);
    for (std::size_t k = 0; k < l.size(); ++k)
        if (index_of(model, l[k]) > static_cast<int>(k) + 1) return false;
    if (l.size() == 2 && index_of(model, l[1]) == 2 && index_of(model, l[0]) != 1) return false;
    return true;
}

DominatingModel singleton_normalize(const Graph& g, const DominatingModel& model) {
    if (model.t() < 2) throw ModelError("singleton normalisation needs at least two branch sets");
    if (!verify_dominating_model(g, model).empty()) throw ModelError("input model fails verification");
    const int t = model.t();
    const Vertex v = model.set(t).first();
    const Vertex w = (g.neighbours(v) & model.set(t - 1)).first();
    DominatingModel out = model;
    out.branch_sets[static_cast<std::size_t>(t - 2)] = VertexSet{w};
    out.branch_sets[static_cast<std::size_t>(t - 1)] = VertexSet{v};
    return out;
}

DominatingModel induced_cycle_normalize(const Graph& g, const DominatingModel& model) {
    if (model.t() != 5) throw ModelError("induced-cycle normalisation needs a 5-model");
    if (model.set(4).size() != 1 || model.set(5).size() != 1)
        throw ModelError("input is not singleton-normalised (T4 and T5 must be single vertices)");
    if (!verify_dominating_model(g, model).empty()) throw ModelError("input model fails verification");
    const Vertex w = model.set(4).first();
    const Vertex v = model.set(5).first();
    const auto& t3 = model.set(3);
    auto path = shortest_path(g, g.neighbours(v) & t3, g.neighbours(w) & t3, t3);
    if (path.empty()) throw ModelError("no path inside T3 between the neighbourhoods of T4 and T5");
    DominatingModel out = model;
    out.branch_sets[2] = VertexSet::of(path);
    return out;
}

bool is_induced_cycle(const Graph& g, const VertexSet& s) {
    if (s.size() < 3 || !is_connected_subset(g, s)) return false;
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return (g.neighbours(v) & s).size() == 2; });
}

}  // namespace domk
