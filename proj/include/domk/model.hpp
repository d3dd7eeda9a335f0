#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domk/graph.hpp"

namespace domk {

/// An ordered sequence of branch sets (T1, ..., Tt). The same value type
/// carries standard K_t-models; which conditions it must meet is decided by
/// the verifier it is checked with.
struct DominatingModel {
    std::vector<VertexSet> branch_sets;

    int t() const { return static_cast<int>(branch_sets.size()); }
    /// 1-based access, matching the usual T_i numbering.
    const VertexSet& set(int i) const { return branch_sets.at(static_cast<std::size_t>(i - 1)); }
    VertexSet support() const;

    bool operator==(const DominatingModel&) const = default;
};

/// Ordered clique L = (v1, ..., vk) with k <= 2.
struct OrderedClique {
    std::vector<Vertex> vertices;

    std::size_t size() const { return vertices.size(); }
    bool empty() const { return vertices.empty(); }
    Vertex operator[](std::size_t i) const { return vertices.at(i); }

    bool operator==(const OrderedClique&) const = default;
};

class ModelError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ModelViolation {
    enum class Kind {
        out_of_range,  // vertex outside the host
        empty,         // branch set i is empty
        overlap,       // vertex lies in sets i and j
        disconnected,  // G[T_i] is disconnected
        undominated,   // vertex of T_j has no neighbour in T_i
        not_adjacent,  // no edge between T_i and T_j (standard models)
    };
    Kind kind;
    int i = 0;
    int j = 0;
    Vertex vertex = -1;

    std::string name() const;
    std::string describe() const;
    bool operator==(const ModelViolation&) const = default;
};

/// Throws ModelError unless L has at most two distinct, adjacent vertices of g.
void check_ordered_clique(const Graph& g, const OrderedClique& l);

/// Index of the branch set containing v (1-based), or 0.
int index_of(const DominatingModel& model, Vertex v);
/// As above, after checking that v is a vertex of g.
int index_of(const Graph& g, const DominatingModel& model, Vertex v);

std::vector<ModelViolation> verify_dominating_model(const Graph& g, const DominatingModel& model);
std::vector<ModelViolation> verify_standard_model(const Graph& g, const DominatingModel& model);

/// ind(v_i) <= i for each i, and ind(v2) = 2 forces ind(v1) = 1.
/// Throws ModelError when L is not an ordered clique of g.
bool is_L_compatible(const Graph& g, const DominatingModel& model, const OrderedClique& l);

enum class SearchMode { general, singleton_reduced };

/// Exact search for an L-compatible dominating K_t-model. Branch sets are
/// grown as connected sets from T_t down to T_2; T_1 is then any component
/// of what is left that dominates everything placed.
///
/// singleton_reduced (t = 4 or 5) fixes T_t and T_{t-1} as the ends of an
/// edge whose endpoints have degree at least t - 1.
///
/// Throws ModelError for t outside 1..6, for singleton_reduced with another
/// t, or when L is not an ordered clique; GraphError above 64 vertices.
std::optional<DominatingModel> find_dominating_model(const Graph& g, int t, const OrderedClique& l = {},
                                                     SearchMode mode = SearchMode::general);

/// Exact search for a K_t-minor model (every pair of branch sets adjacent).
std::optional<DominatingModel> find_standard_model(const Graph& g, int t);

/// (T1, ..., T_{t-2}, {w}, {v}) with v the smallest vertex of T_t and w its
/// smallest neighbour in T_{t-1}. Throws ModelError if the input fails
/// verification.
DominatingModel singleton_normalize(const Graph& g, const DominatingModel& model);

/// Replace T3 by a shortest path in G[T3] from a neighbour of v (T5 = {v}) to
/// a neighbour of w (T4 = {w}). Throws ModelError unless the input is a
/// verified 5-model with singleton T4 and T5.
DominatingModel induced_cycle_normalize(const Graph& g, const DominatingModel& model);

/// True iff G[S] is a cycle (connected, 2-regular, at least 3 vertices).
bool is_induced_cycle(const Graph& g, const VertexSet& s);

}  // namespace domk
