#include <doctest.h>

#include <random>

#include "domk/catalog.hpp"
#include "domk/colouring.hpp"
#include "domk/constructions.hpp"
#include "domk/subdivision.hpp"
#include "oracles.hpp"

using namespace domk;

namespace {

Graph c5_join_k2() { return join(cycle(5), complete(2)); }

SubdivisionEmbedding k5_in_k6() {
    SubdivisionEmbedding e;
    e.pattern = complete(5);
    e.pattern_name = "K5";
    e.branch_map = {0, 1, 2, 3, 4};
    for (auto [a, b] : e.pattern.edges()) e.paths.push_back({a, b});
    return e;
}

bool has_kind(const std::vector<SubdivisionViolation>& vs, SubdivisionViolation::Kind k) {
    return std::any_of(vs.begin(), vs.end(), [&](const SubdivisionViolation& v) { return v.kind == k; });
}

}  // namespace

TEST_CASE("find_subdivision examples") {
    auto k6 = complete(6);
    auto e = find_subdivision(k6, complete(5));
    REQUIRE(e);
    CHECK(verify_subdivision(k6, *e).empty());
    for (const auto& p : e->paths) CHECK(p.size() == 2);

    CHECK_FALSE(find_subdivision(petersen(), k5_hat()));
    CHECK_FALSE(find_subdivision(petersen(), complete(5)));

    auto g = c5_join_k2();
    auto f = find_subdivision(g, complete(5));
    REQUIRE(f);
    CHECK(verify_subdivision(g, *f).empty());
    int join_vertices = 0;
    for (Vertex b : f->branch_map) join_vertices += b >= 5;
    CHECK(join_vertices == 2);

    CHECK(find_subdivision(petersen(), complete(4)));
    CHECK_FALSE(find_subdivision(cycle(8), complete(4)));
    CHECK_THROWS_AS(find_subdivision(complete(5), complete(7)), GraphError);
    CHECK_THROWS_AS(find_subdivision(complete(33), complete(4)), GraphError);
}

TEST_CASE("direct-edge preference") {
    auto k4 = complete(4);
    auto g = complete(5);
    auto e = find_subdivision(g, k4, SubdivisionOptions{{0, 1}});
    REQUIRE(e);
    CHECK(e->paths[0].size() == 2);
    CHECK(e->paths[1].size() == 2);
    // A subdivided K4 with every edge subdivided admits no direct edges.
    CHECK_FALSE(find_subdivision(one_subdivision(k4), k4, SubdivisionOptions{{0}}));
    CHECK(find_subdivision(one_subdivision(k4), k4));
}

TEST_CASE("K4 subdivisions agree with the exhaustive oracle up to seven vertices") {
    for (const auto& g : oracle::atlas(7)) {
        auto e = find_subdivision(g, complete(4));
        CHECK(e.has_value() == oracle::has_k4_subdivision(g));
        if (e) CHECK(verify_subdivision(g, *e).empty());
    }
}

TEST_CASE("verify_subdivision") {
    auto k6 = complete(6);
    CHECK(verify_subdivision(k6, k5_in_k6()).empty());

    auto shared = k5_in_k6();
    shared.paths[0] = {0, 5, 1};
    shared.paths[1] = {0, 5, 2};
    CHECK(has_kind(verify_subdivision(k6, shared), SubdivisionViolation::Kind::shared_vertex));

    auto through_branch = k5_in_k6();
    through_branch.paths[0] = {0, 2, 1};
    CHECK(has_kind(verify_subdivision(k6, through_branch), SubdivisionViolation::Kind::shared_vertex));

    auto wrong_end = k5_in_k6();
    wrong_end.paths[0] = {0, 2};
    CHECK(has_kind(verify_subdivision(k6, wrong_end), SubdivisionViolation::Kind::bad_endpoints));

    auto missing = k5_in_k6();
    CHECK(has_kind(verify_subdivision(cycle(6), missing), SubdivisionViolation::Kind::missing_edge));

    auto repeated = k5_in_k6();
    repeated.branch_map[4] = 0;
    CHECK(has_kind(verify_subdivision(k6, repeated), SubdivisionViolation::Kind::bad_branch_vertex));

    auto short_paths = k5_in_k6();
    short_paths.paths.pop_back();
    CHECK(has_kind(verify_subdivision(k6, short_paths), SubdivisionViolation::Kind::shape));
}

TEST_CASE("unsubdivided incident edges") {
    CHECK(check_unsubdivided_incident_edges(k5_in_k6()));

    auto sub = one_subdivision(complete(5));
    auto e = find_subdivision(sub, complete(5));
    REQUIRE(e);
    CHECK(verify_subdivision(sub, *e).empty());
    CHECK_FALSE(check_unsubdivided_incident_edges(*e));

    SubdivisionEmbedding k4;
    k4.pattern = complete(4);
    k4.pattern_name = "K4";
    CHECK_THROWS_AS(check_unsubdivided_incident_edges(k4), GraphError);
}

TEST_CASE("extraction from K6") {
    DominatingModel m{{{5}, {0}, {1}, {2}, {3}}};
    auto ex = extract_k5_or_k5hat(complete(6), m);
    CHECK(ex.embedding.pattern_name == "K5");
    CHECK(ex.middle_length() == 0);
    CHECK(ex.subtree == VertexSet{5});
    CHECK(verify_subdivision(complete(6), ex.embedding).empty());
}

TEST_CASE("extraction from K5-hat") {
    auto hat = k5_hat();
    DominatingModel m{{{4, 5}, {0}, {1}, {2}, {3}}};
    auto ex = extract_k5_or_k5hat(hat, m);
    CHECK(ex.embedding.pattern_name == "K5hat");
    CHECK(ex.middle_length() == 1);
    CHECK(VertexSet::of(ex.middle) == VertexSet{4, 5});
    CHECK(verify_subdivision(hat, ex.embedding).empty());
    CHECK(check_unsubdivided_incident_edges(ex.embedding));
}

TEST_CASE("extraction rejects unverified models") {
    CHECK_THROWS_AS(extract_k5_or_k5hat(path(5), DominatingModel{{{0}, {1}, {2}, {3}, {4}}}), ModelError);
    CHECK_THROWS_AS(extract_k5_or_k5hat(complete(4), DominatingModel{{{0}, {1}, {2}, {3}}}), ModelError);
}

TEST_CASE("extraction invariants on the 5-chromatic catalog and random models") {
    std::vector<std::pair<Graph, DominatingModel>> cases;
    for (const auto& g : graph_catalog(7))
        if (chromatic_number(g) >= 5) {
            auto m = find_dominating_model(g, 5);
            REQUIRE(m);
            cases.emplace_back(g, *m);
        }
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 150; ++trial) {
        auto g = random_graph(static_cast<Vertex>(8 + rng() % 5), 0.65, rng);
        if (auto m = find_dominating_model(g, 5)) cases.emplace_back(g, *m);
    }
    for (const auto& [g, m] : cases) {
        auto ex = extract_k5_or_k5hat(g, m);
        CHECK(verify_subdivision(g, ex.embedding).empty());
        CHECK((ex.embedding.pattern_name == "K5") == (ex.middle_length() == 0));
        CHECK(ex.subtree_leaves.subset_of(VertexSet::of(ex.attachments)));
        CHECK(ex.subtree.subset_of(m.set(1)));
        // Branch vertices outside T1 are exactly the inner K4's.
        VertexSet outside;
        for (Vertex b : ex.embedding.branch_map)
            if (!m.set(1).contains(b)) outside.insert(b);
        CHECK(outside == VertexSet::of(ex.inner.branch_map));
    }
}
