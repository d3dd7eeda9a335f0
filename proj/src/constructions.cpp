#include "domk/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "domk/canonical.hpp"

namespace domk {

Graph complete(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph path(Vertex n) {
    std::vector<Edge> e;
    for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph cycle(Vertex n) {
    if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(Vertex a, Vertex b) {
    std::vector<Edge> e;
    for (Vertex i = 0; i < a; ++i)
        for (Vertex j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return Graph::from_edges(a + b, e);
}

Graph petersen() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
        e.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, e);
}

Graph k55_minus_matching() {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = 0; j < 5; ++j)
            if (i != j) e.emplace_back(i, 5 + j);
    return Graph::from_edges(10, e);
}

Graph k5_hat() {
    std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 0}, {4, 1}, {5, 2}, {5, 3}, {4, 5}};
    return Graph::from_edges(6, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    auto e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(u + g.order(), v + g.order());
    return Graph::from_edges(g.order() + h.order(), e);
}

Graph join(const Graph& g, const Graph& h) {
    auto e = disjoint_union(g, h).edges();
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) e.emplace_back(u, g.order() + v);
    return Graph::from_edges(g.order() + h.order(), e);
}

Graph wheel(Vertex n) { return join(complete(1), cycle(n)); }

Graph gen(const std::string& raw_name, const std::vector<int>& params) {
    std::string name = raw_name;
    std::replace(name.begin(), name.end(), '_', '-');
    auto want = [&](std::size_t k) {
        if (params.size() != k)
            throw GraphError("generator '" + name + "' takes " + std::to_string(k) + " parameter(s), got " +
                             std::to_string(params.size()));
    };
    auto positive = [&](int x) {
        if (x < 0 || x > 64) throw GraphError("generator '" + name + "': parameter out of range");
        return static_cast<Vertex>(x);
    };
    if (name == "complete") return want(1), complete(positive(params[0]));
    if (name == "path") return want(1), path(positive(params[0]));
    if (name == "cycle") return want(1), cycle(positive(params[0]));
    if (name == "wheel") return want(1), wheel(positive(params[0]));
    if (name == "complete-bipartite") return want(2), complete_bipartite(positive(params[0]), positive(params[1]));
    if (name == "petersen") return want(0), petersen();
    if (name == "k55-minus-matching") return want(0), k55_minus_matching();
    if (name == "k5-hat") return want(0), k5_hat();
    throw GraphError("unknown generator '" + raw_name + "'");
}

Graph one_subdivision(const Graph& g) {
    std::vector<Edge> e;
    Vertex next = g.order();
    for (auto [u, v] : g.edges()) {
        e.emplace_back(u, next);
        e.emplace_back(next, v);
        ++next;
    }
    return Graph::from_edges(next, e);
}

Graph split_k5(const SplitSpec& spec) {
    for (int p : spec)
        if (p < 0 || p > 3) throw GraphError("split choice must be 0..3, got " + std::to_string(p));
    std::array<Vertex, 5> second{};
    Vertex next = 5;
    for (Vertex i = 0; i < 5; ++i) second[static_cast<std::size_t>(i)] = spec[static_cast<std::size_t>(i)] ? next++ : -1;

    // Which half of split vertex i keeps the edge to j: half 0 holds the pair
    // containing i's smallest neighbour.
    auto endpoint = [&](Vertex i, Vertex j) -> Vertex {
        const int p = spec[static_cast<std::size_t>(i)];
        if (p == 0) return i;
        std::vector<Vertex> nb;
        for (Vertex x = 0; x < 5; ++x)
            if (x != i) nb.push_back(x);
        const auto pos = std::find(nb.begin(), nb.end(), j) - nb.begin();
        // Partner of position 0 under pairing p is position p.
        const bool half0 = pos == 0 || pos == p;
        return half0 ? i : second[static_cast<std::size_t>(i)];
    };

    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i)
        for (Vertex j = i + 1; j < 5; ++j) e.emplace_back(endpoint(i, j), endpoint(j, i));
    for (Vertex i = 0; i < 5; ++i)
        if (second[static_cast<std::size_t>(i)] >= 0) e.emplace_back(i, second[static_cast<std::size_t>(i)]);
    return Graph::from_edges(next, e);
}

std::vector<Graph> enumerate_k5_splits() {
    std::set<std::pair<Vertex, std::string>> seen;
    std::vector<std::pair<std::pair<Vertex, std::string>, Graph>> reps;
    for (int code = 0; code < 1024; ++code) {
        SplitSpec spec{};
        for (std::size_t i = 0; i < 5; ++i) spec[i] = (code >> (2 * i)) & 3;
        Graph g = split_k5(spec);
        auto key = std::make_pair(g.order(), canonical_form(g));
        if (seen.insert(key).second) reps.emplace_back(key, std::move(g));
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& [key, g] : reps) out.push_back(std::move(g));
    return out;
}

Graph random_cubic(Vertex n, std::mt19937_64& rng) {
    if (n < 4 || n % 2 != 0) throw GraphError("cubic graphs need an even vertex count of at least 4");
    std::vector<Vertex> points;
    for (Vertex v = 0; v < n; ++v)
        for (int k = 0; k < 3; ++k) points.push_back(v);
    for (;;) {
        std::shuffle(points.begin(), points.end(), rng);
        std::set<Edge> edges;
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            Vertex a = std::min(points[i], points[i + 1]), b = std::max(points[i], points[i + 1]);
            if (a == b || !edges.insert({a, b}).second) simple = false;
        }
        if (!simple) continue;
        Graph g = Graph::from_edges(n, {edges.begin(), edges.end()});
        if (is_connected(g)) return g;
    }
}

Graph random_graph(Vertex n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph random_relabel(const Graph& g, std::mt19937_64& rng, std::vector<Vertex>* order) {
    std::vector<Vertex> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    if (order) *order = perm;
    std::vector<Vertex> pos(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pos[static_cast<std::size_t>(perm[i])] = static_cast<Vertex>(i);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) e.emplace_back(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return Graph::from_edges(g.order(), e);
}

}  // namespace domk
