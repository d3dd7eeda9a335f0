#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "domk/graph.hpp"
#include "domk/model.hpp"

namespace domk {

// Named families. Labellings:
//   complete(n), path(n), cycle(n): 0..n-1 in order along the path/cycle.
//   complete_bipartite(a, b): sides 0..a-1 and a..a+b-1.
//   petersen: outer 5-cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5),
//     spokes i ~ i+5.
//   k55_minus_matching: sides 0..4 and 5..9, i ~ 5+j iff i != j.
//   k5_hat: K4 on 0..3; 4 ~ 0,1,5; 5 ~ 2,3,4. 4 and 5 are the split pair.
//   join(g, h): g's vertices first, then h's shifted by |g|.
//   wheel(n): hub 0 joined to the cycle 1..n.
Graph complete(Vertex n);
Graph path(Vertex n);
Graph cycle(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph petersen();
Graph k55_minus_matching();
Graph k5_hat();
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph wheel(Vertex n);

/// Generator lookup by name ("complete", "cycle", "path", "complete-bipartite",
/// "petersen", "k55-minus-matching", "k5-hat", "wheel"); underscores are
/// accepted in place of hyphens. Throws GraphError for unknown names or bad
/// parameters.
Graph gen(const std::string& name, const std::vector<int>& params = {});

/// Every edge replaced by a path of length 2; subdivision vertices follow the
/// originals in edge order.
Graph one_subdivision(const Graph& g);

/// Per-vertex split choice: 0 keeps the vertex, p in 1..3 picks the p-th
/// perfect matching of its four neighbours (listed ascending as a<b<c<d):
/// 1 = {ab|cd}, 2 = {ac|bd}, 3 = {ad|bc}.
using SplitSpec = std::array<int, 5>;

/// K5 with the chosen vertices split into two adjacent halves, each keeping
/// one neighbour pair. Half 0 keeps the original index; the second halves
/// are numbered from 5 in vertex order. Throws GraphError on a bad entry.
Graph split_k5(const SplitSpec& spec);

/// All 4^5 split specs, deduplicated up to isomorphism, sorted by (vertex
/// count, canonical form).
std::vector<Graph> enumerate_k5_splits();

/// Connected cubic graph on n vertices (n even, n >= 4) from the pairing
/// model with rejection of loops, multi-edges and disconnected outcomes.
Graph random_cubic(Vertex n, std::mt19937_64& rng);

/// G(n, p) Erdős–Rényi sample.
Graph random_graph(Vertex n, double p, std::mt19937_64& rng);

/// Uniformly relabel the vertices; order[i] is the old vertex placed at i.
Graph random_relabel(const Graph& g, std::mt19937_64& rng, std::vector<Vertex>* order = nullptr);

/// Hypotheses under which a dominating K4-model with L in T1 is constructed:
/// g connected with at least four vertices, L a clique of at most two
/// vertices containing every vertex of degree at most 2, and |L| = 1 when
/// some vertex of L has degree at least 3. Empty string when they hold,
/// otherwise the first failing hypothesis.
std::string k4_constructor_hypotheses(const Graph& g, const OrderedClique& l);

/// Builds a dominating K4-model (T1, T2, T3, T4) with L ⊆ T1 by peeling
/// proper 1-separations and, in the 2-connected case, choosing a cycle C
/// and component H of G - C that contains L with every vertex of C adjacent
/// to H. Throws ModelError naming the failing hypothesis. Limited to 32
/// vertices.
DominatingModel dominating_k4_constructor(const Graph& g, const OrderedClique& l);

}  // namespace domk
