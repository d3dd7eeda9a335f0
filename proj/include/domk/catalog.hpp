#pragma once

#include <vector>

#include "domk/graph.hpp"

namespace domk {

/// One representative per isomorphism class of graphs on exactly n
/// vertices (n <= 10), canonically labelled and sorted by canonical form.
/// Built by adding a vertex with every possible neighbourhood to each class
/// on n - 1 vertices and deduplicating by canonical form.
std::vector<Graph> graphs_of_order(Vertex n);

/// Classes on 1..max_n vertices, grouped by order.
std::vector<Graph> graph_catalog(Vertex max_n);

}  // namespace domk
