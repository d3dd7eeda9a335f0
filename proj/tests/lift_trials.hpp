#pragma once

// Randomised round trips through the four lifting kinds: transform a random
// graph, find an L'-compatible 5-model in the result (after a random
// relabelling), lift it and check it in the original graph.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "domk/constructions.hpp"
#include "domk/lifting.hpp"

namespace trials {

using namespace domk;

struct LiftTally {
    int passed = 0;
    int failed = 0;
    int resampled = 0;
    std::string first_failure;
};

inline OrderedClique random_clique(const Graph& g, std::mt19937_64& rng, std::size_t max_size) {
    OrderedClique l;
    if (max_size == 0 || g.order() == 0) return l;
    Vertex v1 = static_cast<Vertex>(rng() % static_cast<unsigned>(g.order()));
    l.vertices.push_back(v1);
    auto nb = g.neighbours(v1).to_vector();
    if (max_size >= 2 && !nb.empty() && rng() % 4 != 0) l.vertices.push_back(nb[rng() % nb.size()]);
    return l;
}

// A random connected set inside `within` grown from `root`, with the tree
// edges used to grow it.
inline std::pair<VertexSet, std::vector<Edge>> grow(const Graph& g, Vertex root, const VertexSet& within,
                                                   std::size_t target, std::mt19937_64& rng) {
    VertexSet s{root};
    std::vector<Edge> tree;
    while (s.size() < target) {
        std::vector<Edge> frontier;
        for (Vertex u : s)
            for (Vertex w : g.neighbours(u))
                if (within.contains(w) && !s.contains(w)) frontier.emplace_back(u, w);
        if (frontier.empty()) break;
        auto e = frontier[rng() % frontier.size()];
        s.insert(e.second);
        tree.push_back(e);
    }
    return {s, tree};
}

// Search G' for an L'-compatible dominating 5-model through a random relabelling.
inline std::optional<DominatingModel> planted_model(const Graph& g, const OrderedClique& l, std::mt19937_64& rng) {
    std::vector<Vertex> order;
    Graph h = random_relabel(g, rng, &order);
    std::vector<Vertex> pos(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<Vertex>(i);
    OrderedClique lh;
    for (Vertex v : l.vertices) lh.vertices.push_back(pos[static_cast<std::size_t>(v)]);
    auto m = find_dominating_model(h, 5, lh);
    if (!m) return std::nullopt;
    DominatingModel back;
    for (const auto& b : m->branch_sets) {
        VertexSet s;
        for (Vertex v : b) s.insert(order[static_cast<std::size_t>(v)]);
        back.branch_sets.push_back(s);
    }
    return back;
}

inline void record(LiftTally& tally, const Graph& g, const DominatingModel& lifted, const OrderedClique& l,
                   const std::string& what) {
    const bool ok = verify_dominating_model(g, lifted).empty() && is_L_compatible(g, lifted, l);
    if (ok) {
        ++tally.passed;
    } else {
        if (tally.first_failure.empty()) tally.first_failure = what;
        ++tally.failed;
    }
}

/// Runs until `count` trials have produced a model to lift (or a hard cap of
/// attempts is reached). Exceptions from a lift count as failures.
inline LiftTally run_lift_trials(LiftKind kind, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    LiftTally tally;
    for (int attempt = 0; tally.passed + tally.failed < count && attempt < 200 * count; ++attempt) {
        const Vertex n = static_cast<Vertex>(7 + rng() % 6);
        const double p = 0.55 + 0.3 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = random_graph(n, p, rng);
        try {
            switch (kind) {
                case LiftKind::contract_first: {
                    OrderedClique l = random_clique(g, rng, 2);
                    auto [h1, tree] = grow(g, l[0], VertexSet::range(n), 1 + rng() % 4, rng);
                    auto w = contract_edges(g, tree);
                    auto lp = contract_clique(l, w);
                    auto m = planted_model(w.result, lp, rng);
                    if (!m) {
                        ++tally.resampled;
                        continue;
                    }
                    record(tally, g, lift_contraction(kind, w, *m, l, lp), l, "contract_first");
                    break;
                }
                case LiftKind::contract_second: {
                    OrderedClique l = random_clique(g, rng, 2);
                    if (l.size() < 2) {
                        ++tally.resampled;
                        continue;
                    }
                    auto [h2, tree] = grow(g, l[1], g.neighbours(l[0]), 1 + rng() % 3, rng);
                    auto w = contract_edges(g, tree);
                    auto lp = contract_clique(l, w);
                    auto m = planted_model(w.result, lp, rng);
                    if (!m) {
                        ++tally.resampled;
                        continue;
                    }
                    record(tally, g, lift_contraction(kind, w, *m, l, lp), l, "contract_second");
                    break;
                }
                case LiftKind::restrict: {
                    OrderedClique l = random_clique(g, rng, 2);
                    VertexSet a = VertexSet::range(n);
                    const int drop = 1 + static_cast<int>(rng() % 3);
                    for (int k = 0; k < drop; ++k) a.erase(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
                    auto w = induced_subgraph(g, a);
                    auto lp = restrict_clique(l, w);
                    auto m = planted_model(w.graph, lp, rng);
                    if (!m) {
                        ++tally.resampled;
                        continue;
                    }
                    record(tally, g, lift_contraction(kind, w, *m, l, lp), l, "restrict");
                    break;
                }
                case LiftKind::extend: {
                    OrderedClique lp = random_clique(g, rng, 2);
                    OrderedClique l{std::vector<Vertex>(lp.vertices.begin(),
                                                        lp.vertices.begin() +
                                                            static_cast<std::ptrdiff_t>(rng() % (lp.size() + 1)))};
                    auto m = planted_model(g, lp, rng);
                    if (!m) {
                        ++tally.resampled;
                        continue;
                    }
                    record(tally, g, lift_contraction(kind, g, *m, l, lp), l, "extend");
                    break;
                }
            }
        } catch (const std::exception& e) {
            if (tally.first_failure.empty()) tally.first_failure = e.what();
            ++tally.failed;
        }
    }
    return tally;
}

}  // namespace trials
