#include "domk/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace domk {

Graph Graph::from_edges(Vertex n, const std::vector<Edge>& edges) {
    if (n < 0) throw GraphError("negative vertex count");
    Graph g;
    g.adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)].insert(v);
        g.adj_[static_cast<std::size_t>(v)].insert(u);
    }
    std::size_t deg_sum = 0;
    for (const auto& row : g.adj_) deg_sum += row.size();
    g.edge_count_ = deg_sum / 2;
    if (n <= kFastLimit) {
        g.rows_.reserve(static_cast<std::size_t>(n));
        for (const auto& row : g.adj_) g.rows_.push_back(row.low_mask());
    }
    return g;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<Vertex> Graph::degree_sequence() const {
    std::vector<Vertex> d;
    for (Vertex v = 0; v < order(); ++v) d.push_back(degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
    if (labels.size() != adj_.size()) throw GraphError("label count does not match vertex count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= order())
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
}

void Graph::check_set(const VertexSet& s) const {
    if (s.bound() > order())
        throw GraphError("vertex " + std::to_string(s.bound() - 1) + " out of range for n=" +
                         std::to_string(order()));
}

VertexSet ContractionWitness::preimage(Vertex v) const {
    VertexSet s;
    for (std::size_t old = 0; old < vertex_map.size(); ++old)
        if (vertex_map[old] == v) s.insert(static_cast<Vertex>(old));
    return s;
}

VertexSet InducedSubgraph::lift(const VertexSet& s) const {
    VertexSet out;
    for (Vertex v : s) out.insert(original.at(static_cast<std::size_t>(v)));
    return out;
}

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent;
};

}  // namespace

ContractionWitness contract_edges(const Graph& g, const std::vector<Edge>& f) {
    const auto n = static_cast<std::size_t>(g.order());
    UnionFind uf(n);
    for (auto [u, v] : f) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (!g.adjacent(u, v))
            throw GraphError("cannot contract non-edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
        uf.unite(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
    }
    // Roots are class minima, so scanning in index order numbers classes by
    // their smallest member.
    std::vector<Vertex> map(n, -1);
    Vertex next = 0;
    for (std::size_t v = 0; v < n; ++v) {
        auto r = uf.find(v);
        if (r == v) map[v] = next++;
        else map[v] = map[r];
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = map[static_cast<std::size_t>(u)], b = map[static_cast<std::size_t>(v)];
        if (a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return ContractionWitness{g, Graph::from_edges(next, edges), std::move(map)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    g.check_set(s);
    InducedSubgraph out;
    out.host = g;
    out.support = s;
    out.vertex_map.assign(static_cast<std::size_t>(g.order()), -1);
    for (Vertex v : s) {
        out.vertex_map[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.original.size());
        out.original.push_back(v);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        Vertex a = out.vertex_map[static_cast<std::size_t>(u)], b = out.vertex_map[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) edges.emplace_back(a, b);
    }
    out.graph = Graph::from_edges(static_cast<Vertex>(out.original.size()), edges);
    return out;
}

VertexSet reach(const Graph& g, Vertex from, const VertexSet& within) {
    VertexSet seen{from};
    std::vector<Vertex> stack{from};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : g.neighbours(u)) {
            if (!seen.contains(w) && within.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        auto c = reach(g, left.first(), within);
        left -= c;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_within(g, VertexSet::range(g.order())); }

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    g.check_set(s);
    if (s.empty()) return false;
    return reach(g, s.first(), s) == s;
}

bool is_connected(const Graph& g) { return g.order() == 0 || is_connected_subset(g, VertexSet::range(g.order())); }

std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                                  const VertexSet& within) {
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -2);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (!within.contains(s)) continue;
        parent[static_cast<std::size_t>(s)] = -1;
        queue.push_back(s);
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (targets.contains(u)) {
            std::vector<Vertex> path;
            for (Vertex x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (Vertex w : g.neighbours(u)) {
            if (within.contains(w) && parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = u;
                queue.push_back(w);
            }
        }
    }
    return {};
}

namespace {

// Maximum number of internally disjoint s-t paths, capped at `cap`.
// Vertex splitting: v_in = 2v, v_out = 2v+1, unit capacity inside v.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int cap) {
    const int n = g.order();
    const int nodes = 2 * n;
    std::vector<std::vector<int>> cap_m(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
    auto in = [](Vertex v) { return 2 * v; };
    auto out = [](Vertex v) { return 2 * v + 1; };
    for (Vertex v = 0; v < n; ++v) cap_m[in(v)][out(v)] = (v == s || v == t) ? n : 1;
    for (auto [u, v] : g.edges()) {
        cap_m[out(u)][in(v)] = n;
        cap_m[out(v)][in(u)] = n;
    }
    int flow = 0;
    const int src = out(s), dst = in(t);
    while (flow < cap) {
        std::vector<int> par(static_cast<std::size_t>(nodes), -1);
        par[src] = src;
        std::deque<int> q{src};
        while (!q.empty() && par[dst] == -1) {
            int x = q.front();
            q.pop_front();
            for (int y = 0; y < nodes; ++y) {
                if (par[y] == -1 && cap_m[x][y] > 0) {
                    par[y] = x;
                    q.push_back(y);
                }
            }
        }
        if (par[dst] == -1) break;
        for (int y = dst; y != src; y = par[y]) {
            cap_m[par[y]][y] -= 1;
            cap_m[y][par[y]] += 1;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

bool vertex_connectivity_at_least(const Graph& g, int k) {
    if (k < 0) throw GraphError("connectivity threshold must be non-negative");
    const Vertex n = g.order();
    if (n <= k) return false;
    if (k == 0) return true;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v) && local_connectivity(g, u, v, k) < k) return false;
    return true;
}

VertexSet cut_vertices(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<int> disc(n, -1), low(n, 0);
    VertexSet cuts;
    int timer = 0;
    // Iterative Tarjan: frame = (vertex, parent, neighbour cursor, child count).
    struct Frame {
        Vertex v, parent;
        std::vector<Vertex> nbrs;
        std::size_t next = 0;
        int children = 0;
    };
    for (Vertex root = 0; root < g.order(); ++root) {
        if (disc[static_cast<std::size_t>(root)] != -1) continue;
        std::vector<Frame> stack;
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
        stack.push_back({root, -1, g.neighbours(root).to_vector()});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < f.nbrs.size()) {
                Vertex w = f.nbrs[f.next++];
                auto wi = static_cast<std::size_t>(w);
                if (disc[wi] == -1) {
                    ++f.children;
                    disc[wi] = low[wi] = timer++;
                    Vertex parent = f.v;
                    stack.push_back({w, parent, g.neighbours(w).to_vector()});
                } else if (w != f.parent) {
                    low[static_cast<std::size_t>(f.v)] = std::min(low[static_cast<std::size_t>(f.v)], disc[wi]);
                }
                continue;
            }
            Frame done = std::move(stack.back());
            stack.pop_back();
            if (stack.empty()) {
                if (done.children >= 2) cuts.insert(done.v);
                continue;
            }
            Frame& parent = stack.back();
            auto pv = static_cast<std::size_t>(parent.v), dv = static_cast<std::size_t>(done.v);
            low[pv] = std::min(low[pv], low[dv]);
            if (parent.parent != -1 && low[dv] >= disc[pv]) cuts.insert(parent.v);
        }
    }
    return cuts;
}

bool is_proper_separation(const Graph& g, const Separation& sep, int max_order) {
    g.check_set(sep.a);
    g.check_set(sep.b);
    if ((sep.a | sep.b) != VertexSet::range(g.order())) return false;
    auto only_a = sep.a - sep.b, only_b = sep.b - sep.a;
    if (only_a.empty() || only_b.empty()) return false;
    for (Vertex v : only_a)
        if (g.neighbours(v).intersects(only_b)) return false;
    if (max_order >= 0 && static_cast<int>((sep.a & sep.b).size()) > max_order) return false;
    return true;
}

int girth(const Graph& g) {
    int best = std::numeric_limits<int>::max();
    const auto n = static_cast<std::size_t>(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        std::vector<int> dist(n, -1), par(n, -1);
        dist[static_cast<std::size_t>(s)] = 0;
        std::deque<Vertex> q{s};
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop_front();
            for (Vertex w : g.neighbours(u)) {
                auto wi = static_cast<std::size_t>(w), ui = static_cast<std::size_t>(u);
                if (dist[wi] == -1) {
                    dist[wi] = dist[ui] + 1;
                    par[wi] = u;
                    q.push_back(w);
                } else if (par[ui] != w) {
                    best = std::min(best, dist[ui] + dist[wi] + 1);
                }
            }
        }
    }
    return best == std::numeric_limits<int>::max() ? 0 : best;
}

}  // namespace domk
