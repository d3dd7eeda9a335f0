#pragma once

// Random inputs satisfying the dominating-K4 constructor's hypotheses.

#include <random>
#include <vector>

#include "domk/constructions.hpp"

namespace instances {

using namespace domk;

/// Every ordered clique L with which g satisfies the hypotheses.
inline std::vector<OrderedClique> admissible_cliques(const Graph& g) {
    std::vector<OrderedClique> out;
    std::vector<OrderedClique> candidates{OrderedClique{}};
    for (Vertex u = 0; u < g.order(); ++u) {
        candidates.push_back({{u}});
        for (Vertex v : g.neighbours(u)) candidates.push_back({{u, v}});
    }
    for (auto& l : candidates)
        if (k4_constructor_hypotheses(g, l).empty()) out.push_back(l);
    return out;
}

struct Instance {
    Graph g;
    OrderedClique l;
};

/// Connected graph on 4..max_n vertices, with low-degree vertices patched
/// by extra edges until an admissible clique exists.
inline Instance random_instance(std::mt19937_64& rng, Vertex max_n) {
    while (true) {
        const Vertex n = static_cast<Vertex>(4 + rng() % static_cast<unsigned>(max_n - 3));
        const double p = 0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        Graph g = random_graph(n, p, rng);
        auto edges = g.edges();
        for (int round = 0; round < 4 * n; ++round) {
            std::vector<Vertex> low;
            for (Vertex v = 0; v < n; ++v)
                if (g.degree(v) <= 2) low.push_back(v);
            if (is_connected(g) && low.size() <= static_cast<std::size_t>(rng() % 3)) break;
            Vertex u = low.empty() ? static_cast<Vertex>(rng() % static_cast<unsigned>(n)) : low[rng() % low.size()];
            Vertex w = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
            if (u != w) edges.emplace_back(u, w);
            g = Graph::from_edges(n, edges);
        }
        auto ls = admissible_cliques(g);
        if (ls.empty()) continue;
        return {g, ls[rng() % ls.size()]};
    }
}

}  // namespace instances
