#include "domk/catalog.hpp"

#include <map>

#include "domk/canonical.hpp"
#include "domk/graph6.hpp"

namespace domk {

namespace {

// Classes on n vertices from the classes on n - 1: every n-vertex graph is
// some (n-1)-vertex class plus a vertex with a chosen neighbourhood.
std::vector<Graph> next_layer(const std::vector<Graph>& layer, Vertex n) {
    std::map<std::string, Graph> classes;
    const Vertex fresh = n - 1;
    for (const Graph& base : layer) {
        const auto base_edges = base.edges();
        for (Mask nb = 0; nb < (Mask{1} << fresh); ++nb) {
            auto edges = base_edges;
            for_each_bit(nb, [&](Vertex u) { edges.emplace_back(u, fresh); });
            auto form = canonical_form(Graph::from_edges(n, edges));
            if (!classes.contains(form)) classes.emplace(form, parse_graph6(form));
        }
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [form, g] : classes) out.push_back(std::move(g));
    return out;
}

}  // namespace

std::vector<Graph> graphs_of_order(Vertex n) {
    if (n < 0 || n > 10) throw GraphError("catalog enumeration supports 0..10 vertices");
    std::vector<Graph> layer{Graph::from_edges(0, {})};
    for (Vertex k = 1; k <= n; ++k) layer = next_layer(layer, k);
    return layer;
}

std::vector<Graph> graph_catalog(Vertex max_n) {
    if (max_n < 0 || max_n > 10) throw GraphError("catalog enumeration supports 0..10 vertices");
    std::vector<Graph> out;
    std::vector<Graph> layer{Graph::from_edges(0, {})};
    for (Vertex n = 1; n <= max_n; ++n) {
        layer = next_layer(layer, n);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

}  // namespace domk
