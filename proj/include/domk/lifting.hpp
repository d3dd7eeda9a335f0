#pragma once

#include <variant>

#include "domk/graph.hpp"
#include "domk/model.hpp"

namespace domk {

/// The four ways a compatible model is carried back from a transformed graph:
///   contract_first  - G' = G / E(H1), H1 connected and containing v1
///   contract_second - G' = G / E(H2), H2 connected inside G[N(v1)] and containing v2
///   restrict        - G' = G[A]
///   extend          - G' = G, L an initial segment of L'
enum class LiftKind { contract_first, contract_second, restrict, extend };

class LiftError : public ModelError {
public:
    using ModelError::ModelError;
};

/// The clique carried through a contraction: each result vertex takes the
/// lowest position of any clique vertex merged into it.
OrderedClique contract_clique(const OrderedClique& l, const ContractionWitness& w);

/// L ∩ A, in order, renumbered into G[A].
OrderedClique restrict_clique(const OrderedClique& l, const InducedSubgraph& w);

/// Witness for each kind: ContractionWitness for the two contractions,
/// InducedSubgraph for restrict, the unchanged Graph for extend.
using LiftWitness = std::variant<ContractionWitness, InducedSubgraph, Graph>;

/// Carry an L'-compatible dominating model of the transformed graph back to
/// an L-compatible dominating model of the original. Throws LiftError when a
/// hypothesis of the chosen kind fails, or when `model` does not verify or is
/// not L'-compatible in the transformed graph.
DominatingModel lift_contraction(LiftKind kind, const LiftWitness& witness, const DominatingModel& model,
                                 const OrderedClique& l, const OrderedClique& l_prime);

DominatingModel lift_contract_first(const ContractionWitness& w, const DominatingModel& model,
                                    const OrderedClique& l, const OrderedClique& l_prime);
DominatingModel lift_contract_second(const ContractionWitness& w, const DominatingModel& model,
                                     const OrderedClique& l, const OrderedClique& l_prime);
DominatingModel lift_restriction(const InducedSubgraph& w, const DominatingModel& model, const OrderedClique& l,
                                 const OrderedClique& l_prime);
DominatingModel lift_extension(const Graph& g, const DominatingModel& model, const OrderedClique& l,
                               const OrderedClique& l_prime);

}  // namespace domk
