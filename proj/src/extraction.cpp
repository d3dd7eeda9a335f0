#include <algorithm>
#include <array>
#include <deque>

#include "domk/constructions.hpp"
#include "domk/subdivision.hpp"

namespace domk {

namespace {

// BFS spanning tree of G[within] rooted at its smallest vertex.
class SpanningTree {
public:
    SpanningTree(const Graph& g, const VertexSet& within)
        : parent_(static_cast<std::size_t>(g.order()), -2), depth_(static_cast<std::size_t>(g.order()), 0) {
        const Vertex root = within.first();
        parent_[static_cast<std::size_t>(root)] = -1;
        std::deque<Vertex> q{root};
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : g.neighbours(u)) {
                if (!within.contains(w) || parent_[static_cast<std::size_t>(w)] != -2) continue;
                parent_[static_cast<std::size_t>(w)] = u;
                depth_[static_cast<std::size_t>(w)] = depth_[static_cast<std::size_t>(u)] + 1;
                q.push_back(w);
            }
        }
    }

    Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
    bool tree_edge(Vertex a, Vertex b) const { return parent(a) == b || parent(b) == a; }

    /// Tree path a .. b, both ends included.
    std::vector<Vertex> path(Vertex a, Vertex b) const {
        std::vector<Vertex> up{a}, down{b};
        while (up.back() != down.back()) {
            auto& deeper = depth_[static_cast<std::size_t>(up.back())] >= depth_[static_cast<std::size_t>(down.back())] ? up : down;
            deeper.push_back(parent(deeper.back()));
        }
        down.pop_back();
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }

    /// Smallest subtree containing `targets`: prune non-target leaves.
    VertexSet minimal_subtree(const VertexSet& within, const VertexSet& targets) const {
        VertexSet t = within;
        for (bool changed = true; changed;) {
            changed = false;
            for (Vertex u : t) {
                if (targets.contains(u)) continue;
                if (tree_degree(u, t) <= 1) {
                    t.erase(u);
                    changed = true;
                    break;
                }
            }
        }
        return t;
    }

    int tree_degree(Vertex u, const VertexSet& t) const {
        int d = 0;
        if (parent(u) >= 0 && t.contains(parent(u))) ++d;
        for (Vertex w : t)
            if (parent(w) == u) ++d;
        return d;
    }

private:
    std::vector<Vertex> parent_;
    std::vector<int> depth_;
};

// Second vertex on the tree path from x toward v, or -1 when v == x.
Vertex branch_toward(const SpanningTree& tree, Vertex x, Vertex v) {
    if (v == x) return -1;
    return tree.path(x, v)[1];
}

// Can the targets be reached from x along tree paths that share only x,
// all avoiding the branch at x that leads to `avoid` (-1 for none)?
bool fans_out(const SpanningTree& tree, Vertex x, const std::vector<Vertex>& targets, Vertex avoid) {
    std::vector<Vertex> used;
    if (avoid >= 0) {
        if (std::find(targets.begin(), targets.end(), avoid) != targets.end()) return false;
        used.push_back(branch_toward(tree, x, avoid));
    }
    for (Vertex v : targets) {
        Vertex b = branch_toward(tree, x, v);
        if (b < 0) continue;
        if (std::find(used.begin(), used.end(), b) != used.end()) return false;
        used.push_back(b);
    }
    return true;
}

std::vector<Vertex> reversed(std::vector<Vertex> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

// Path realising pattern edge (a, b) of the inner K4, whose branch map is
// inner_map, oriented from inner vertex a to inner vertex b.
std::vector<Vertex> inner_path(const SubdivisionEmbedding& inner, Vertex a, Vertex b) {
    const auto edges = inner.pattern.edges();
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (edges[k] == Edge{a, b}) return inner.paths[k];
        if (edges[k] == Edge{b, a}) return reversed(inner.paths[k]);
    }
    throw std::logic_error("inner K4 lacks a pattern edge");
}

}  // namespace

Extraction extract_k5_or_k5hat(const Graph& g, const DominatingModel& model) {
    if (model.t() != 5) throw ModelError("extraction needs a dominating 5-model");
    if (!verify_dominating_model(g, model).empty()) throw ModelError("input model fails verification");

    Extraction ex;
    const VertexSet& t1 = model.set(1);
    VertexSet rest;
    for (int i = 2; i <= 5; ++i) rest |= model.set(i);

    // (1) K4 subdivision inside G[T2 ∪ ... ∪ T5], preferring one whose edges
    // 01 and 02 are single edges.
    auto sub = induced_subgraph(g, rest);
    const Graph k4 = complete(4);
    auto found = find_subdivision(sub.graph, k4, SubdivisionOptions{{0, 1}});
    if (!found) found = find_subdivision(sub.graph, k4);
    if (!found) throw std::logic_error("no K4 subdivision inside a dominating 4-model");
    ex.inner = *found;
    ex.inner.pattern_name = "K4";
    for (auto& b : ex.inner.branch_map) b = sub.original[static_cast<std::size_t>(b)];
    for (auto& p : ex.inner.paths)
        for (auto& v : p) v = sub.original[static_cast<std::size_t>(v)];
    const auto& b = ex.inner.branch_map;

    // (2) attachments: smallest neighbour in T1 of each branch vertex.
    VertexSet targets;
    for (Vertex bi : b) {
        Vertex vi = (g.neighbours(bi) & t1).first();
        ex.attachments.push_back(vi);
        targets.insert(vi);
    }

    // (3) smallest subtree of a BFS spanning tree of G[T1].
    const SpanningTree tree(g, t1);
    ex.subtree = tree.minimal_subtree(t1, targets);
    for (Vertex u : ex.subtree)
        if (tree.tree_degree(u, ex.subtree) <= 1) ex.subtree_leaves.insert(u);

    // (4) split the subtree at one vertex (K5) or along a path x..y (K5-hat).
    const auto& v = ex.attachments;
    auto to_center = [&](int i, Vertex center) {
        std::vector<Vertex> p{b[static_cast<std::size_t>(i)]};
        auto tail = tree.path(v[static_cast<std::size_t>(i)], center);
        p.insert(p.end(), tail.begin(), tail.end());
        return p;
    };

    for (Vertex x : ex.subtree) {
        if (!fans_out(tree, x, v, -1)) continue;
        ex.middle = {x};
        SubdivisionEmbedding& emb = ex.embedding;
        emb.pattern = complete(5);
        emb.pattern_name = "K5";
        emb.branch_map = {b[0], b[1], b[2], b[3], x};
        for (auto [p, q] : emb.pattern.edges())
            emb.paths.push_back(q == 4 ? to_center(p, x) : inner_path(ex.inner, p, q));
        if (!verify_subdivision(g, emb).empty()) throw std::logic_error("K5 assembly fails verification");
        return ex;
    }

    static constexpr std::array<std::array<int, 4>, 6> kSplits{{
        {0, 1, 2, 3}, {2, 3, 0, 1}, {0, 2, 1, 3}, {1, 3, 0, 2}, {0, 3, 1, 2}, {1, 2, 0, 3},
    }};
    for (Vertex x : ex.subtree) {
        for (Vertex y : ex.subtree) {
            if (y == x) continue;
            for (const auto& split : kSplits) {
                std::vector<Vertex> xs{v[static_cast<std::size_t>(split[0])], v[static_cast<std::size_t>(split[1])]};
                std::vector<Vertex> ys{v[static_cast<std::size_t>(split[2])], v[static_cast<std::size_t>(split[3])]};
                if (!fans_out(tree, x, xs, y) || !fans_out(tree, y, ys, x)) continue;

                ex.middle = tree.path(x, y);
                SubdivisionEmbedding& emb = ex.embedding;
                emb.pattern = k5_hat();
                emb.pattern_name = "K5hat";
                // Pattern 0,1 hang off x (pattern 4); 2,3 off y (pattern 5).
                std::array<int, 4> inner_of{split[0], split[1], split[2], split[3]};
                emb.branch_map = {b[static_cast<std::size_t>(split[0])], b[static_cast<std::size_t>(split[1])],
                                  b[static_cast<std::size_t>(split[2])], b[static_cast<std::size_t>(split[3])], x, y};
                for (auto [p, q] : emb.pattern.edges()) {
                    if (q < 4) emb.paths.push_back(inner_path(ex.inner, inner_of[static_cast<std::size_t>(p)],
                                                              inner_of[static_cast<std::size_t>(q)]));
                    else if (p == 4 && q == 5) emb.paths.push_back(ex.middle);
                    else emb.paths.push_back(to_center(inner_of[static_cast<std::size_t>(p)], q == 4 ? x : y));
                }
                if (!verify_subdivision(g, emb).empty()) throw std::logic_error("K5-hat assembly fails verification");
                return ex;
            }
        }
    }
    throw std::logic_error("subtree admits no K5 or K5-hat decomposition");
}

}  // namespace domk
