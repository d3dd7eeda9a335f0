#include "domk/subdivision.hpp"

#include <algorithm>
#include <numeric>

#include "domk/constructions.hpp"

namespace domk {

std::string SubdivisionViolation::name() const {
    switch (kind) {
        case Kind::shape: return "shape";
        case Kind::bad_branch_vertex: return "bad_branch_vertex";
        case Kind::bad_endpoints: return "bad_endpoints";
        case Kind::missing_edge: return "missing_edge";
        case Kind::shared_vertex: return "shared_vertex";
    }
    return "unknown";
}

std::string SubdivisionViolation::describe() const {
    const auto p = std::to_string(path), v = std::to_string(vertex);
    switch (kind) {
        case Kind::shape: return "embedding does not match the pattern's vertex or edge count";
        case Kind::bad_branch_vertex: return "branch vertex " + v + " is out of range or repeated";
        case Kind::bad_endpoints: return "path " + p + " does not join its edge's branch vertices";
        case Kind::missing_edge: return "path " + p + " uses a non-edge at vertex " + v;
        case Kind::shared_vertex: return "path " + p + " reuses vertex " + v;
    }
    return "unknown violation";
}

namespace {

class SubdivisionSearch {
public:
    SubdivisionSearch(const Graph& g, const Graph& h, const SubdivisionOptions& opt)
        : g_(g), h_(h), h_edges_(h.edges()), map_(static_cast<std::size_t>(h.order()), -1),
          paths_(h_edges_.size()), direct_(h_edges_.size(), false) {
        for (int k : opt.direct_edges) direct_.at(static_cast<std::size_t>(k)) = true;
        // Required-direct edges first, then by pattern order.
        edge_order_.resize(h_edges_.size());
        std::iota(edge_order_.begin(), edge_order_.end(), 0);
        std::stable_sort(edge_order_.begin(), edge_order_.end(),
                         [&](std::size_t a, std::size_t b) { return direct_[a] && !direct_[b]; });
        // Pattern vertices by decreasing degree.
        vertex_order_.resize(static_cast<std::size_t>(h.order()));
        std::iota(vertex_order_.begin(), vertex_order_.end(), 0);
        std::stable_sort(vertex_order_.begin(), vertex_order_.end(),
                         [&](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    }

    std::optional<SubdivisionEmbedding> run() {
        if (h_.order() > g_.order()) return std::nullopt;
        if (!assign(0)) return std::nullopt;
        SubdivisionEmbedding emb{h_, {}, map_, paths_};
        return emb;
    }

private:
    bool assign(std::size_t depth) {
        if (depth == vertex_order_.size()) {
            used_ = 0;
            for (Vertex b : map_) used_ |= bit(b);
            if (!routable()) return false;
            return route(0);
        }
        const Vertex hv = vertex_order_[depth];
        for (Vertex gv = 0; gv < g_.order(); ++gv) {
            if (g_.degree(gv) < h_.degree(hv)) continue;
            if (std::find(map_.begin(), map_.end(), gv) != map_.end()) continue;
            map_[static_cast<std::size_t>(hv)] = gv;
            if (consistent_direct() && assign(depth + 1)) return true;
            map_[static_cast<std::size_t>(hv)] = -1;
        }
        return false;
    }

    bool consistent_direct() const {
        for (std::size_t k = 0; k < h_edges_.size(); ++k) {
            if (!direct_[k]) continue;
            Vertex a = map_[static_cast<std::size_t>(h_edges_[k].first)];
            Vertex b = map_[static_cast<std::size_t>(h_edges_[k].second)];
            if (a >= 0 && b >= 0 && !g_.adjacent(a, b)) return false;
        }
        return true;
    }

    // Every unrouted edge still has its ends joined through free vertices.
    bool routable() const {
        const Mask free = g_.all() & ~used_;
        for (std::size_t idx = routed_; idx < edge_order_.size(); ++idx) {
            auto [a, b] = h_edges_[edge_order_[idx]];
            Vertex ga = map_[static_cast<std::size_t>(a)], gb = map_[static_cast<std::size_t>(b)];
            if (g_.adjacent(ga, gb)) continue;
            Mask reach = g_.row(ga) & free, frontier = reach;
            while (frontier) {
                Mask next = 0;
                for_each_bit(frontier, [&](Vertex u) { next |= g_.row(u); });
                next &= free & ~reach;
                reach |= next;
                frontier = next;
            }
            bool ok = false;
            for_each_bit(reach, [&](Vertex u) { ok = ok || g_.adjacent(u, gb); });
            if (!ok) return false;
        }
        return true;
    }

    bool route(std::size_t idx) {
        if (idx == edge_order_.size()) return true;
        const std::size_t k = edge_order_[idx];
        const Vertex from = map_[static_cast<std::size_t>(h_edges_[k].first)];
        const Vertex to = map_[static_cast<std::size_t>(h_edges_[k].second)];
        std::vector<Vertex> path{from};
        return extend(idx, k, path, to);
    }

    bool extend(std::size_t idx, std::size_t k, std::vector<Vertex>& path, Vertex to) {
        const Vertex at = path.back();
        if (g_.adjacent(at, to)) {
            path.push_back(to);
            paths_[k] = path;
            routed_ = idx + 1;
            if (routable() && route(idx + 1)) return true;
            routed_ = idx;
            path.pop_back();
        }
        if (direct_[k]) return false;
        const Mask options = g_.row(at) & g_.all() & ~used_;
        for (Mask m = options; m; m &= m - 1) {
            const Vertex next = std::countr_zero(m);
            used_ |= bit(next);
            path.push_back(next);
            if (extend(idx, k, path, to)) return true;
            path.pop_back();
            used_ &= ~bit(next);
        }
        return false;
    }

    const Graph& g_;
    const Graph& h_;
    std::vector<Edge> h_edges_;
    std::vector<Vertex> map_;
    std::vector<std::vector<Vertex>> paths_;
    std::vector<bool> direct_;
    std::vector<std::size_t> edge_order_;
    std::vector<Vertex> vertex_order_;
    Mask used_ = 0;
    std::size_t routed_ = 0;
};

}  // namespace

std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, const Graph& pattern,
                                                     const SubdivisionOptions& options) {
    if (pattern.order() > 6) throw GraphError("subdivision patterns are limited to 6 vertices");
    if (g.order() > 32) throw GraphError("subdivision search is limited to 32 host vertices");
    auto emb = SubdivisionSearch(g, pattern, options).run();
    if (emb) {
        if (pattern == complete(4)) emb->pattern_name = "K4";
        else if (pattern == complete(5)) emb->pattern_name = "K5";
        else if (pattern == k5_hat()) emb->pattern_name = "K5hat";
    }
    return emb;
}

std::vector<SubdivisionViolation> verify_subdivision(const Graph& g, const SubdivisionEmbedding& emb) {
    using K = SubdivisionViolation::Kind;
    std::vector<SubdivisionViolation> out;
    const auto h_edges = emb.pattern.edges();
    if (static_cast<Vertex>(emb.branch_map.size()) != emb.pattern.order() || emb.paths.size() != h_edges.size()) {
        out.push_back({K::shape});
        return out;
    }
    VertexSet branch;
    for (Vertex b : emb.branch_map) {
        if (b < 0 || b >= g.order() || branch.contains(b)) out.push_back({K::bad_branch_vertex, -1, b});
        else branch.insert(b);
    }
    if (!out.empty()) return out;

    VertexSet internal;
    for (std::size_t k = 0; k < h_edges.size(); ++k) {
        const auto& p = emb.paths[k];
        const int pk = static_cast<int>(k);
        const Vertex a = emb.branch_map[static_cast<std::size_t>(h_edges[k].first)];
        const Vertex b = emb.branch_map[static_cast<std::size_t>(h_edges[k].second)];
        if (p.size() < 2 || p.front() != a || p.back() != b) {
            out.push_back({K::bad_endpoints, pk});
            continue;
        }
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i] < 0 || p[i] >= g.order()) {
                out.push_back({K::missing_edge, pk, p[i]});
                break;
            }
            if (i + 1 < p.size() && (p[i + 1] < 0 || p[i + 1] >= g.order() || !g.adjacent(p[i], p[i + 1])))
                out.push_back({K::missing_edge, pk, p[i]});
            if (i == 0 || i + 1 == p.size()) continue;
            if (branch.contains(p[i]) || internal.contains(p[i])) out.push_back({K::shared_vertex, pk, p[i]});
            internal.insert(p[i]);
        }
    }
    return out;
}

bool check_unsubdivided_incident_edges(const SubdivisionEmbedding& emb) {
    Vertex core;
    if (emb.pattern_name == "K5") core = 5;
    else if (emb.pattern_name == "K5hat") core = 4;
    else throw GraphError("unsubdivided-edge check applies to K5 and K5hat embeddings only");
    const auto edges = emb.pattern.edges();
    std::vector<int> direct_at(static_cast<std::size_t>(core), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        auto [a, b] = edges[k];
        if (a >= core || b >= core || emb.paths[k].size() != 2) continue;
        ++direct_at[static_cast<std::size_t>(a)];
        ++direct_at[static_cast<std::size_t>(b)];
    }
    return std::any_of(direct_at.begin(), direct_at.end(), [](int c) { return c >= 2; });
}

}  // namespace domk
