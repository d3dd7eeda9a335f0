#include "domk/lifting.hpp"

#include <algorithm>

namespace domk {

OrderedClique contract_clique(const OrderedClique& l, const ContractionWitness& w) {
    OrderedClique out;
    for (Vertex v : l.vertices) {
        Vertex img = w.vertex_map.at(static_cast<std::size_t>(v));
        if (std::find(out.vertices.begin(), out.vertices.end(), img) == out.vertices.end()) out.vertices.push_back(img);
    }
    return out;
}

OrderedClique restrict_clique(const OrderedClique& l, const InducedSubgraph& w) {
    OrderedClique out;
    for (Vertex v : l.vertices) {
        Vertex img = w.vertex_map.at(static_cast<std::size_t>(v));
        if (img >= 0) out.vertices.push_back(img);
    }
    return out;
}

namespace {

void require(bool cond, const std::string& what) {
    if (!cond) throw LiftError(what);
}

void check_input_model(const Graph& transformed, const DominatingModel& model, const OrderedClique& l_prime) {
    require(verify_dominating_model(transformed, model).empty(), "model fails verification in the transformed graph");
    require(is_L_compatible(transformed, model, l_prime), "model is not L'-compatible in the transformed graph");
}

// The single result vertex with more than one preimage, or -1 when the
// contraction is trivial. Throws if several vertices were merged apart.
Vertex contracted_vertex(const ContractionWitness& w) {
    std::vector<int> count(static_cast<std::size_t>(w.result.order()), 0);
    for (Vertex img : w.vertex_map) ++count[static_cast<std::size_t>(img)];
    Vertex found = -1;
    for (Vertex v = 0; v < w.result.order(); ++v) {
        if (count[static_cast<std::size_t>(v)] > 1) {
            require(found < 0, "contracted edges do not form one connected subgraph");
            found = v;
        }
    }
    return found;
}

DominatingModel preimage_model(const ContractionWitness& w, const DominatingModel& model) {
    DominatingModel out;
    for (const auto& b : model.branch_sets) {
        VertexSet lifted;
        for (Vertex old = 0; old < w.host.order(); ++old)
            if (b.contains(w.vertex_map[static_cast<std::size_t>(old)])) lifted.insert(old);
        out.branch_sets.push_back(std::move(lifted));
    }
    return out;
}

DominatingModel checked_output(const Graph& g, DominatingModel out, const OrderedClique& l) {
    // These hold whenever the hypotheses did; a failure here is a defect.
    if (!verify_dominating_model(g, out).empty() || !is_L_compatible(g, out, l))
        throw std::logic_error("lifted model fails verification");
    return out;
}

}  // namespace

DominatingModel lift_contract_first(const ContractionWitness& w, const DominatingModel& model,
                                    const OrderedClique& l, const OrderedClique& l_prime) {
    check_ordered_clique(w.host, l);
    require(!l.empty(), "contracting H1 needs v1 in L");
    const Vertex v1 = l[0];
    const Vertex merged = contracted_vertex(w);
    const Vertex v1_star = w.vertex_map[static_cast<std::size_t>(v1)];
    require(merged < 0 || merged == v1_star, "contracted subgraph H1 does not contain v1");
    require(l_prime == contract_clique(l, w), "L' is not the contracted image of L");
    check_input_model(w.result, model, l_prime);

    // ind(v1*) is 0 or 1 by compatibility. At 0 nothing merged is used; at
    // 1 the un-contraction lands in T1. Either way the preimage is the lift.
    const int ind = index_of(model, v1_star);
    require(ind <= 1, "v1* lies outside T1");
    return checked_output(w.host, preimage_model(w, model), l);
}

DominatingModel lift_contract_second(const ContractionWitness& w, const DominatingModel& model,
                                     const OrderedClique& l, const OrderedClique& l_prime) {
    check_ordered_clique(w.host, l);
    require(l.size() == 2, "contracting H2 needs L = (v1, v2)");
    const Vertex v1 = l[0], v2 = l[1];
    const Vertex merged = contracted_vertex(w);
    const Vertex v2_star = w.vertex_map[static_cast<std::size_t>(v2)];
    require(merged < 0 || merged == v2_star, "contracted subgraph H2 does not contain v2");
    const VertexSet h2 = w.preimage(v2_star);
    require(!h2.contains(v1), "H2 contains v1");
    require(h2.subset_of(w.host.neighbours(v1)), "H2 is not inside N(v1)");
    require(l_prime == contract_clique(l, w), "L' is not the contracted image of L");
    check_input_model(w.result, model, l_prime);

    // ind(v2*) = 2 un-contracts into T2; every vertex of H2 then sees v1,
    // and ind(v1) = 1 by compatibility, so T1 still dominates T2.
    const int ind = index_of(model, v2_star);
    require(ind <= 2, "v2* lies beyond T2");
    return checked_output(w.host, preimage_model(w, model), l);
}

DominatingModel lift_restriction(const InducedSubgraph& w, const DominatingModel& model, const OrderedClique& l,
                                 const OrderedClique& l_prime) {
    check_ordered_clique(w.host, l);
    require(l_prime == restrict_clique(l, w), "L' is not L restricted to A");
    check_input_model(w.graph, model, l_prime);
    DominatingModel out;
    for (const auto& b : model.branch_sets) out.branch_sets.push_back(w.lift(b));
    return checked_output(w.host, std::move(out), l);
}

DominatingModel lift_extension(const Graph& g, const DominatingModel& model, const OrderedClique& l,
                               const OrderedClique& l_prime) {
    check_ordered_clique(g, l);
    check_ordered_clique(g, l_prime);
    require(l.size() <= l_prime.size() && std::equal(l.vertices.begin(), l.vertices.end(), l_prime.vertices.begin()),
            "L is not an initial segment of L'");
    check_input_model(g, model, l_prime);
    return checked_output(g, model, l);
}

DominatingModel lift_contraction(LiftKind kind, const LiftWitness& witness, const DominatingModel& model,
                                 const OrderedClique& l, const OrderedClique& l_prime) {
    auto need = [&](auto* p) {
        require(p != nullptr, "witness type does not match the lift kind");
        return p;
    };
    switch (kind) {
        case LiftKind::contract_first:
            return lift_contract_first(*need(std::get_if<ContractionWitness>(&witness)), model, l, l_prime);
        case LiftKind::contract_second:
            return lift_contract_second(*need(std::get_if<ContractionWitness>(&witness)), model, l, l_prime);
        case LiftKind::restrict:
            return lift_restriction(*need(std::get_if<InducedSubgraph>(&witness)), model, l, l_prime);
        case LiftKind::extend:
            return lift_extension(*need(std::get_if<Graph>(&witness)), model, l, l_prime);
    }
    throw LiftError("unknown lift kind");
}

}  // namespace domk
