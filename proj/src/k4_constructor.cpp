#include <algorithm>

#include "domk/constructions.hpp"

namespace domk {

std::string k4_constructor_hypotheses(const Graph& g, const OrderedClique& l) {
    if (g.order() < 4) return "graph has fewer than four vertices";
    if (!is_connected(g)) return "graph is not connected";
    if (l.size() > 2) return "L has more than two vertices";
    for (Vertex v : l.vertices)
        if (v < 0 || v >= g.order()) return "L vertex out of range";
    if (l.size() == 2 && (l[0] == l[1] || !g.adjacent(l[0], l[1]))) return "L is not a clique";
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) <= 2 && std::find(l.vertices.begin(), l.vertices.end(), v) == l.vertices.end())
            return "vertex " + std::to_string(v) + " has degree at most 2 but is not in L";
    if (l.size() == 2 && (g.degree(l[0]) >= 3 || g.degree(l[1]) >= 3))
        return "a vertex of L has degree at least 3 but |L| = 2";
    return {};
}

namespace {

using Cycle = std::vector<Vertex>;

// Any cycle of G[within], via DFS back edges; empty for a forest.
Cycle find_cycle(const Graph& g, const VertexSet& within) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
    for (Vertex root : within) {
        if (parent[static_cast<std::size_t>(root)] != -2) continue;
        parent[static_cast<std::size_t>(root)] = -1;
        std::vector<Vertex> stack{root};
        std::vector<int> depth(static_cast<std::size_t>(g.order()), 0);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbours(u)) {
                if (!within.contains(w) || w == parent[static_cast<std::size_t>(u)]) continue;
                if (parent[static_cast<std::size_t>(w)] == -2) {
                    parent[static_cast<std::size_t>(w)] = u;
                    depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
                    stack.push_back(w);
                    continue;
                }
                // Non-tree edge u-w: splice the two tree paths at their meeting point.
                std::vector<Vertex> a{u}, b{w};
                while (a.back() != b.back()) {
                    auto& deeper = depth[static_cast<std::size_t>(a.back())] >= depth[static_cast<std::size_t>(b.back())] ? a : b;
                    deeper.push_back(parent[static_cast<std::size_t>(deeper.back())]);
                }
                b.pop_back();
                a.insert(a.end(), b.rbegin(), b.rend());
                if (a.size() >= 3) return a;
            }
        }
    }
    return {};
}

// Shortcut chords until the cycle is induced, keeping the shorter side.
Cycle make_induced(const Graph& g, Cycle c) {
    for (bool changed = true; changed;) {
        changed = false;
        const std::size_t k = c.size();
        for (std::size_t i = 0; i < k && !changed; ++i) {
            for (std::size_t j = i + 2; j < k && !changed; ++j) {
                if (i == 0 && j == k - 1) continue;
                if (!g.adjacent(c[i], c[j])) continue;
                Cycle inner(c.begin() + static_cast<std::ptrdiff_t>(i), c.begin() + static_cast<std::ptrdiff_t>(j) + 1);
                Cycle outer(c.begin() + static_cast<std::ptrdiff_t>(j), c.end());
                outer.insert(outer.end(), c.begin(), c.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                c = inner.size() <= outer.size() ? std::move(inner) : std::move(outer);
                changed = true;
            }
        }
    }
    return c;
}

VertexSet host_component(const Graph& g, const VertexSet& outside, const OrderedClique& l) {
    if (!l.empty()) return reach(g, l[0], outside);
    VertexSet best;
    for (auto& comp : components_within(g, outside))
        if (comp.size() > best.size()) best = comp;
    return best;
}

// Arc of the cycle from position i to position j that avoids position `avoid`.
Cycle arc_avoiding(const Cycle& c, std::size_t i, std::size_t j, std::size_t avoid) {
    const std::size_t k = c.size();
    for (int dir : {1, -1}) {
        Cycle arc;
        bool ok = true;
        for (std::size_t p = i;; p = (p + k + static_cast<std::size_t>(dir == 1 ? 1 : k - 1)) % k) {
            if (p == avoid) {
                ok = false;
                break;
            }
            arc.push_back(c[p]);
            if (p == j) break;
        }
        if (ok) return arc;
    }
    throw std::logic_error("no arc avoids the given cycle vertex");
}

DominatingModel two_connected_case(const Graph& g, const OrderedClique& l) {
    const VertexSet all = VertexSet::range(g.order());
    Cycle c = find_cycle(g, all - VertexSet::of(l.vertices));
    if (c.empty()) throw ModelError("G - L is a forest; hypotheses cannot hold");

    for (int round = 0; round <= g.order() + 1; ++round) {
        c = make_induced(g, c);
        const VertexSet on_cycle = VertexSet::of(c);
        const VertexSet h = host_component(g, all - on_cycle, l);
        VertexSet h_nbrs;
        for (Vertex v : h) h_nbrs |= g.neighbours(v);

        auto lonely = std::find_if(c.begin(), c.end(), [&](Vertex v) { return !h_nbrs.contains(v); });
        if (lonely == c.end()) {
            // Least edge xy of C; the model is (H, C - x - y, {x}, {y}).
            std::pair<Vertex, Vertex> best{g.order(), g.order()};
            for (std::size_t i = 0; i < c.size(); ++i) {
                Vertex a = c[i], b = c[(i + 1) % c.size()];
                best = std::min(best, std::make_pair(std::min(a, b), std::max(a, b)));
            }
            auto [x, y] = best;
            VertexSet rest = on_cycle;
            rest.erase(x);
            rest.erase(y);
            return DominatingModel{{h, rest, VertexSet{x}, VertexSet{y}}};
        }

        // Exchange: reroute C through a component J at the lonely vertex v so
        // that H together with an attachment vertex y lands in one component.
        const std::size_t vi = static_cast<std::size_t>(lonely - c.begin());
        const Vertex v = *lonely;
        VertexSet j_comp;
        for (auto& comp : components_within(g, all - on_cycle)) {
            if (comp == h) continue;
            if (g.neighbours(v).intersects(comp)) {
                j_comp = comp;
                break;
            }
        }
        if (j_comp.empty()) throw std::logic_error("lonely cycle vertex has no outside neighbour");
        VertexSet j_nbrs;
        for (Vertex u : j_comp) j_nbrs |= g.neighbours(u);

        std::size_t wi = c.size();
        for (std::size_t p = 0; p < c.size(); ++p)
            if (p != vi && j_nbrs.contains(c[p])) {
                wi = p;
                break;
            }
        if (wi == c.size()) throw std::logic_error("component attaches to the cycle at one vertex only");
        std::size_t yi = c.size();
        for (std::size_t p = 0; p < c.size(); ++p)
            if (p != wi && h_nbrs.contains(c[p])) {
                yi = p;
                break;
            }
        if (yi == c.size()) throw std::logic_error("H attaches to the cycle at one vertex only");

        Cycle arc = arc_avoiding(c, vi, wi, yi);
        auto through = shortest_path(g, g.neighbours(v) & j_comp, g.neighbours(c[wi]) & j_comp, j_comp);
        Cycle next = arc;
        next.insert(next.end(), through.rbegin(), through.rend());
        c = std::move(next);
    }
    throw std::logic_error("cycle exchange did not converge");
}

DominatingModel construct(const Graph& g, const OrderedClique& l) {
    const Vertex n = g.order();
    if (n == 4) {
        if (g.size() != 6) throw ModelError("four-vertex instance is not K4");
        const Vertex first = l.empty() ? 0 : l[0];
        DominatingModel m{{VertexSet{first}}};
        for (Vertex v = 0; v < 4; ++v)
            if (v != first) m.branch_sets.push_back(VertexSet{v});
        return m;
    }

    const VertexSet cuts = cut_vertices(g);
    if (!cuts.empty()) {
        const Vertex v = cuts.first();
        VertexSet others = VertexSet::range(n);
        others.erase(v);
        VertexSet side;
        for (auto& comp : components_within(g, others)) {
            bool has_l = std::any_of(l.vertices.begin(), l.vertices.end(), [&](Vertex x) { return comp.contains(x); });
            if (!has_l) {
                side = comp;
                break;
            }
        }
        VertexSet b = side;
        b.insert(v);
        const VertexSet a = VertexSet::range(n) - side;
        auto sub = induced_subgraph(g, b);
        auto inner = construct(sub.graph, OrderedClique{{sub.vertex_map[static_cast<std::size_t>(v)]}});
        DominatingModel m;
        for (const auto& s : inner.branch_sets) m.branch_sets.push_back(sub.lift(s));
        m.branch_sets[0] |= a;
        return m;
    }
    return two_connected_case(g, l);
}

}  // namespace

DominatingModel dominating_k4_constructor(const Graph& g, const OrderedClique& l) {
    if (g.order() > 32) throw ModelError("dominating K4 constructor is limited to 32 vertices");
    if (auto why = k4_constructor_hypotheses(g, l); !why.empty()) throw ModelError("hypothesis violated: " + why);
    return construct(g, l);
}

}  // namespace domk
