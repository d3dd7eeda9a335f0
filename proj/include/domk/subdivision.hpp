#pragma once

#include <optional>
#include <string>
#include <vector>

#include "domk/graph.hpp"
#include "domk/model.hpp"

namespace domk {

/// A subdivision of `pattern` inside a host graph. paths[k] realises the k-th
/// edge (a, b) of pattern.edges(), running from branch_map[a] to
/// branch_map[b] with both ends included.
struct SubdivisionEmbedding {
    Graph pattern;
    std::string pattern_name;
    std::vector<Vertex> branch_map;
    std::vector<std::vector<Vertex>> paths;
};

struct SubdivisionViolation {
    enum class Kind {
        shape,               // wrong number of branch vertices or paths
        bad_branch_vertex,   // out of range or repeated
        bad_endpoints,       // path k does not join the mapped endpoints
        missing_edge,        // consecutive path vertices not adjacent
        shared_vertex,       // an internal vertex is reused or is a branch vertex
    };
    Kind kind;
    int path = -1;
    Vertex vertex = -1;

    std::string name() const;
    std::string describe() const;
};

struct SubdivisionOptions {
    /// Pattern edges (as indices into pattern.edges()) that must be realised
    /// by single host edges.
    std::vector<int> direct_edges;
};

/// Exhaustive search: branch vertices filtered by degree, then internally
/// disjoint paths routed edge by edge with backtracking. Throws GraphError
/// when the pattern has more than 6 vertices or the host more than 32.
std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, const Graph& pattern,
                                                     const SubdivisionOptions& options = {});

std::vector<SubdivisionViolation> verify_subdivision(const Graph& g, const SubdivisionEmbedding& emb);

/// Output of the K5 / K5-hat extraction with the intermediate objects kept
/// for inspection.
struct Extraction {
    SubdivisionEmbedding embedding;
    /// K4 subdivision found inside G[T2 ∪ ... ∪ T5], in host indices.
    SubdivisionEmbedding inner;
    /// Attachment vertices v_i in T1, one per inner branch vertex.
    std::vector<Vertex> attachments;
    /// Smallest subtree of the BFS spanning tree of G[T1] containing the
    /// attachments, and its leaves.
    VertexSet subtree;
    VertexSet subtree_leaves;
    /// The middle path P (one vertex when its length is 0).
    std::vector<Vertex> middle;

    int middle_length() const { return static_cast<int>(middle.size()) - 1; }
};

/// Builds a subdivision of K5 (when P has length 0) or K5-hat from a
/// verified dominating 5-model. Throws ModelError when the model does not
/// verify.
Extraction extract_k5_or_k5hat(const Graph& g, const DominatingModel& model);

/// True iff two incident pattern edges are single host edges; for K5-hat
/// only edges of its K4 (pattern vertices 0..3) count. Throws GraphError
/// for other patterns.
bool check_unsubdivided_incident_edges(const SubdivisionEmbedding& emb);

}  // namespace domk
