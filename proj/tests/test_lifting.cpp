#include <doctest.h>

#include "domk/constructions.hpp"
#include "domk/lifting.hpp"
#include "lift_trials.hpp"

using namespace domk;

namespace {

DominatingModel singletons(std::initializer_list<Vertex> vs) {
    DominatingModel m;
    for (Vertex v : vs) m.branch_sets.push_back(VertexSet{v});
    return m;
}

}  // namespace

TEST_CASE("clique images") {
    auto w = contract_edges(complete(4), {{0, 1}});
    CHECK(contract_clique(OrderedClique{{1, 2}}, w).vertices == std::vector<Vertex>{0, 1});
    CHECK(contract_clique(OrderedClique{{0, 1}}, w).vertices == std::vector<Vertex>{0});
    auto s = induced_subgraph(complete(4), VertexSet{1, 3});
    CHECK(restrict_clique(OrderedClique{{0, 3}}, s).vertices == std::vector<Vertex>{1});
}

TEST_CASE("contracting nothing leaves the model unchanged") {
    auto g = complete(6);
    auto w = contract_edges(g, {});
    OrderedClique l{{0}};
    auto m = singletons({0, 1, 2, 3, 4});
    CHECK(lift_contraction(LiftKind::contract_first, w, m, l, contract_clique(l, w)) == m);
}

TEST_CASE("contract_first un-contracts into T1") {
    // K6 with v1 = 0 and H1 = {0, 5}: contracting gives K5 with v1* = 0.
    auto g = complete(6);
    auto w = contract_edges(g, {{0, 5}});
    OrderedClique l{{0}};
    auto lp = contract_clique(l, w);
    auto lifted = lift_contract_first(w, singletons({0, 1, 2, 3, 4}), l, lp);
    CHECK(lifted.set(1) == VertexSet{0, 5});
    CHECK(verify_dominating_model(g, lifted).empty());
}

TEST_CASE("contract_second un-contracts into T2") {
    // v1 = 0 adjacent to everything; H2 = {1, 2} inside N(0).
    auto g = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {1, 5},
                                   {3, 4}, {3, 5}, {4, 5}, {2, 3}});
    auto w = contract_edges(g, {{1, 2}});
    OrderedClique l{{0, 1}};
    auto lp = contract_clique(l, w);
    REQUIRE(lp.vertices == std::vector<Vertex>{0, 1});
    DominatingModel m = singletons({0, 1, 2, 3, 4});  // in G' the vertices 2..4 are old 3..5
    REQUIRE(verify_dominating_model(w.result, m).empty());
    auto lifted = lift_contract_second(w, m, l, lp);
    CHECK(lifted.set(2) == VertexSet{1, 2});
    CHECK(verify_dominating_model(g, lifted).empty());
    CHECK(is_L_compatible(g, lifted, l));
}

TEST_CASE("restriction reinterprets the sets in G") {
    auto g = disjoint_union(complete(5), path(2));
    auto w = induced_subgraph(g, VertexSet{0, 1, 2, 3, 4});
    OrderedClique l{{5, 6}};
    auto lp = restrict_clique(l, w);
    CHECK(lp.empty());
    auto lifted = lift_restriction(w, singletons({0, 1, 2, 3, 4}), l, lp);
    CHECK(lifted == singletons({0, 1, 2, 3, 4}));
    CHECK(is_L_compatible(g, lifted, l));
}

TEST_CASE("extension drops the tail of L'") {
    auto g = complete(5);
    auto m = singletons({0, 1, 2, 3, 4});
    CHECK(lift_extension(g, m, OrderedClique{{0}}, OrderedClique{{0, 1}}) == m);
    CHECK_THROWS_AS(lift_extension(g, m, OrderedClique{{1}}, OrderedClique{{0, 1}}), LiftError);
}

TEST_CASE("lifting rejects violated hypotheses") {
    auto g = complete(6);
    auto m = singletons({0, 1, 2, 3, 4});

    auto w = contract_edges(g, {{1, 5}});
    OrderedClique l{{0}};
    CHECK_THROWS_AS(lift_contract_first(w, m, l, contract_clique(l, w)), LiftError);  // H1 misses v1
    CHECK_THROWS_AS(lift_contract_first(w, m, OrderedClique{}, OrderedClique{}), LiftError);

    auto w2 = contract_edges(g, {{0, 5}});
    // L' = (0) is v1*, but a model placing v1* in T2 is not L'-compatible.
    CHECK_THROWS_AS(lift_contract_first(w2, singletons({1, 0, 2, 3, 4}), l, contract_clique(l, w2)), LiftError);
    // Model that does not verify.
    CHECK_THROWS_AS(lift_contract_first(w2, DominatingModel{{{0, 1}, {1}}}, l, contract_clique(l, w2)), LiftError);
    // L' that is not the image of L.
    CHECK_THROWS_AS(lift_contract_first(w2, m, l, OrderedClique{{1}}), LiftError);

    // H2 must avoid v1 and sit inside N(v1).
    auto p = path(4);
    auto w3 = contract_edges(p, {{1, 2}});
    OrderedClique l2{{0, 1}};
    CHECK_THROWS_AS(lift_contract_second(w3, DominatingModel{{{0}}}, l2, contract_clique(l2, w3)), LiftError);

    // Wrong witness type for the kind.
    CHECK_THROWS_AS(lift_contraction(LiftKind::restrict, g, m, l, l), LiftError);
}

TEST_CASE("randomised lifting round trips") {
    for (auto kind : {LiftKind::contract_first, LiftKind::contract_second, LiftKind::restrict, LiftKind::extend}) {
        auto tally = trials::run_lift_trials(kind, 60, 1000 + static_cast<std::uint64_t>(kind));
        INFO(tally.first_failure);
        CHECK(tally.failed == 0);
        CHECK(tally.passed == 60);
    }
}
