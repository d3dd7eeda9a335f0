#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domk/graph.hpp"

namespace domk {

/// Vertex colours in 1..budget.
struct Colouring {
    int budget = 0;
    std::vector<int> colours;

    bool operator==(const Colouring&) const = default;
};

struct ColouringViolation {
    enum class Kind { monochromatic_edge, out_of_budget };
    Kind kind;
    Vertex u = -1;
    Vertex v = -1;  // second endpoint for monochromatic edges
    int colour = 0;

    std::string describe() const;
};

/// Exact k-colouring by DSATUR-ordered backtracking. The colouring is
/// relabelled so colours appear in first-occurrence order by vertex index.
/// Requires g.fast().
std::optional<Colouring> k_colour(const Graph& g, int k);

int chromatic_number(const Graph& g);

/// Empty result means proper within budget. Throws GraphError when the
/// assignment does not cover V(G) or leaves a vertex uncoloured (colour 0).
std::vector<ColouringViolation> verify_colouring(const Graph& g, const Colouring& col);

/// Rename colours to first-occurrence order.
Colouring canonicalise(Colouring col);

/// Given a graph and budget, returns a proper colouring or nothing.
using ColouringOracle = std::function<std::optional<Colouring>(const Graph&, int)>;

class StitchError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The graph handed to the oracle during stitching: G[B] plus a clique on
/// A ∩ B, with each colour class of chi_a on A ∩ B merged to one vertex.
struct StitchInstance {
    ContractionWitness merged;
    InducedSubgraph side_b;
    /// class_vertex[i - 1] is the merged vertex carrying colour i, or -1.
    std::vector<Vertex> class_vertex;
};

/// chi_a colours G[A] with vertices listed in increasing order of A.
StitchInstance stitch_instance(const Graph& g, const Separation& sep, const Colouring& chi_a);

/// Combine a colouring of G[A] with an oracle colouring of the merged B side
/// into a colouring of G. Throws GraphError when the separation or chi_a
/// fails its preconditions and StitchError when the oracle misbehaves.
Colouring stitch_colourings(const Graph& g, const Separation& sep, const Colouring& chi_a,
                            const ColouringOracle& oracle);

}  // namespace domk
