#pragma once

#include <string>
#include <vector>

#include "domk/graph.hpp"

namespace domk {

inline constexpr Vertex kCanonicalLimit = 12;

/// Canonical ordering of the vertices: result[i] is the vertex placed at
/// position i. Equitable-partition refinement with individualisation,
/// pruned by the automorphisms discovered along the way.
/// Throws GraphError above kCanonicalLimit vertices.
std::vector<Vertex> canonical_labelling(const Graph& g);

/// graph6 text of the canonically relabelled graph; equal for two graphs
/// iff they are isomorphic.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// Relabel so that new vertex i is old vertex order[i].
Graph permute(const Graph& g, const std::vector<Vertex>& order);

}  // namespace domk
