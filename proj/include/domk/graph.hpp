#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "domk/vertex_set.hpp"

namespace domk {

using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency rows are kept both as growable vertex sets and, for graphs of at
/// most 64 vertices, as single machine words; the search code in this
/// library works on the word rows.
class Graph {
public:
    static constexpr Vertex kFastLimit = 64;

    Graph() = default;

    /// Throws GraphError on an out-of-range endpoint or a self-loop.
    /// Duplicate pairs are merged.
    static Graph from_edges(Vertex n, const std::vector<Edge>& edges);

    Vertex order() const { return static_cast<Vertex>(adj_.size()); }
    std::size_t size() const { return edge_count_; }
    const VertexSet& neighbours(Vertex v) const { return adj_.at(static_cast<std::size_t>(v)); }
    Vertex degree(Vertex v) const { return static_cast<Vertex>(neighbours(v).size()); }
    bool adjacent(Vertex u, Vertex v) const { return neighbours(u).contains(v); }

    bool fast() const { return order() <= kFastLimit; }
    /// Adjacency row as one word. Only valid when fast().
    Mask row(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
    /// All vertices as one word. Only valid when fast().
    Mask all() const { return order() == 64 ? ~Mask{0} : (Mask{1} << order()) - 1; }

    /// Edges (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;
    std::vector<Vertex> degree_sequence() const;

    const std::vector<std::string>& labels() const { return labels_; }
    Graph with_labels(std::vector<std::string> labels) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

    /// Throws GraphError if v is not a vertex.
    void check_vertex(Vertex v) const;
    void check_set(const VertexSet& s) const;

private:
    std::vector<VertexSet> adj_;
    std::vector<Mask> rows_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
};

/// A cover (a, b) of V(G) with both private parts non-empty and no edge
/// between them.
struct Separation {
    VertexSet a;
    VertexSet b;
};

/// Records a contraction: vertex_map[old] is the result vertex that old was
/// merged into.
struct ContractionWitness {
    Graph host;
    Graph result;
    std::vector<Vertex> vertex_map;

    /// All host vertices mapped onto result vertex v.
    VertexSet preimage(Vertex v) const;
};

/// G[S] together with the index maps in both directions.
struct InducedSubgraph {
    Graph host;
    Graph graph;
    VertexSet support;
    /// vertex_map[old] is the new index, or -1 when old is outside S.
    std::vector<Vertex> vertex_map;
    /// original[new] is the host index.
    std::vector<Vertex> original;

    VertexSet lift(const VertexSet& s) const;
};

/// Contract every component of (V, F) to one vertex. Result vertices are
/// numbered in order of their smallest preimage. Throws GraphError if some
/// pair in F is not an edge.
ContractionWitness contract_edges(const Graph& g, const std::vector<Edge>& f);

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Connected components, each a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Components of G[within].
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& within);

/// True iff S is non-empty and G[S] is connected.
bool is_connected_subset(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

/// Vertices reachable from `from` inside G[within] (from must be in within).
VertexSet reach(const Graph& g, Vertex from, const VertexSet& within);

/// Shortest path from any source to any target inside G[within], endpoints
/// included; empty when none exists. Ties resolve toward smaller indices.
std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& sources, const VertexSet& targets,
                                  const VertexSet& within);

/// Vertex k-connectivity: |V| > k and no separator of fewer than k vertices.
/// Decided from pairwise internally disjoint path counts.
bool vertex_connectivity_at_least(const Graph& g, int k);

/// Vertices whose removal disconnects their component.
VertexSet cut_vertices(const Graph& g);

/// Checks the proper-separation conditions; `max_order` bounds |A ∩ B|
/// when non-negative.
bool is_proper_separation(const Graph& g, const Separation& sep, int max_order = -1);

/// Length of a shortest cycle, or 0 for a forest.
int girth(const Graph& g);

}  // namespace domk
