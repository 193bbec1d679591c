#include "doctest.h"

#include "cubic/families.hpp"
#include "cubic/structure.hpp"
#include "cubic/substitution.hpp"

using namespace cubic;

TEST_CASE("attachment profile") {
    // Petersen, edge {0,1}: neighbours of 0 are {1,4,5}, of 1 are {0,2,6}
    auto prof = attachment_profile(families::petersen(), Edge(0, 1));
    CHECK(prof == std::array<int, 4>{4, 5, 2, 6});

    // triangles force overlapping attachments
    CHECK_THROWS_WITH_AS(attachment_profile(families::complete(4), Edge(0, 1)),
                         doctest::Contains("not distinct"), error);
    CHECK_THROWS_AS(attachment_profile(families::petersen(), Edge(0, 2)), error);  // not an edge
}

TEST_CASE("substitute: vertex counts and cubicity") {
    Graph pet = families::petersen();
    MultiGraph f2 = families::double_edge_frame();
    auto [g, bm] = substitute(pet, Edge(0, 1), f2);
    CHECK(g.vertex_count() == (10 - 2) * 2);
    CHECK(is_cubic(g));
    CHECK(g.valid());
    CHECK(bm.block_count == 2);
    CHECK(bm.block_size == 8);

    auto [g5, bm5] = substitute(families::flower_snark(5), Edge(0, 1), families::complete_multigraph(5));
    CHECK(g5.vertex_count() == (20 - 2) * 5);  // 90
    CHECK(is_cubic(g5));

    auto [g36, bm36] = substitute(families::flower_snark(5), Edge(0, 1), f2);
    CHECK(g36.vertex_count() == 36);
    CHECK(is_cubic(g36));
}

TEST_CASE("substitute: precondition errors") {
    MultiGraph not_regular(3);
    not_regular.add_edge(0, 1);
    CHECK_THROWS_WITH_AS(substitute(families::petersen(), Edge(0, 1), not_regular),
                         doctest::Contains("4-regular"), error);

    MultiGraph disconnected(4);  // two pairs of doubled-doubled edges
    for (int i = 0; i < 4; ++i) disconnected.add_edge(i / 2 ? 2 : 0, i / 2 ? 3 : 1);
    for (int i = 0; i < 4; ++i) disconnected.add_edge(i / 2 ? 2 : 0, i / 2 ? 3 : 1);
    CHECK_THROWS_WITH_AS(substitute(families::petersen(), Edge(0, 1), disconnected),
                         doctest::Contains("connected"), error);

    CHECK_THROWS_AS(substitute(families::complete(5), Edge(0, 1), families::double_edge_frame()), error);
    CHECK_THROWS_AS(substitute(families::petersen(), Edge(0, 2), families::double_edge_frame()), error);
}

TEST_CASE("validate_substitution passes on construction output") {
    Graph pet = families::petersen();
    for (const MultiGraph& f : {families::double_edge_frame(), families::complete_multigraph(5)}) {
        auto [g, bm] = substitute(pet, Edge(2, 3), f);
        ValidationReport rep = validate_substitution(g, bm, pet, Edge(2, 3), f, true);
        std::string failure = rep.failed() ? rep.failed()->name + ": " + rep.failed()->detail : "ok";
        INFO(failure);
        CHECK(rep.ok());
        CHECK(rep.girth >= 4);
    }
}

TEST_CASE("validate_substitution: rewired external edge is caught and named") {
    Graph pet = families::petersen();
    MultiGraph f2 = families::double_edge_frame();
    auto [g, bm] = substitute(pet, Edge(0, 1), f2);

    // swap the far ends of two external edges: blocks stay intact, the
    // contraction stays isomorphic, but the tagged realization breaks
    auto a0 = bm.attachments[0][0];
    auto a1 = bm.attachments[0][1];
    int b0 = bm.attachment_vertex(1, a0.second);
    int b1 = bm.attachment_vertex(1, a1.second);
    Graph mutated(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if ((e == Edge(a0.first, b0)) || (e == Edge(a1.first, b1))) continue;
        mutated.add_edge(e.u, e.v);
    }
    mutated.add_edge(a0.first, b1);
    mutated.add_edge(a1.first, b0);
    ValidationReport rep = validate_substitution(mutated, bm, pet, Edge(0, 1), f2);
    CHECK_FALSE(rep.ok());
    REQUIRE(rep.failed() != nullptr);
    CHECK(rep.failed()->name == "contraction_isomorphic_to_f");

    // break a block isomorphism while keeping the graph cubic: trade an
    // external edge (a0,b0) and an internal edge (u,v) of block 1 for the
    // crossing pair (a0,u), (b0,v)
    Edge internal(0, 1);
    bool found = false;
    for (const Edge& e : g.edges()) {
        if (bm.block_of[static_cast<size_t>(e.u)] != 1 || bm.block_of[static_cast<size_t>(e.v)] != 1) continue;
        if (e.u == b0 || e.v == b0 || e.u == a0.first || e.v == a0.first) continue;
        if (g.has_edge(b0, e.v)) continue;  // the swap must not duplicate an edge
        internal = e;
        found = true;
        break;
    }
    REQUIRE(found);
    Graph mutated2(g.vertex_count());
    for (const Edge& e : g.edges()) {
        if (e == Edge(a0.first, b0) || e == internal) continue;
        mutated2.add_edge(e.u, e.v);
    }
    mutated2.add_edge(a0.first, internal.u);
    mutated2.add_edge(b0, internal.v);
    REQUIRE(is_cubic(mutated2));
    ValidationReport rep2 = validate_substitution(mutated2, bm, pet, Edge(0, 1), f2);
    CHECK_FALSE(rep2.ok());
    REQUIRE(rep2.failed() != nullptr);
    CHECK(rep2.failed()->name == "block_isomorphism");
}

TEST_CASE("linking policies: deterministic, both validate") {
    Graph pet = families::petersen();
    MultiGraph k5 = families::complete_multigraph(5);
    auto canonical1 = substitute(pet, Edge(0, 1), k5, LinkingPolicy::canonical);
    auto canonical2 = substitute(pet, Edge(0, 1), k5, LinkingPolicy::canonical);
    CHECK(canonical1.graph == canonical2.graph);

    auto seeded1 = substitute(pet, Edge(0, 1), k5, LinkingPolicy::seeded, 42);
    auto seeded2 = substitute(pet, Edge(0, 1), k5, LinkingPolicy::seeded, 42);
    CHECK(seeded1.graph == seeded2.graph);
    CHECK(validate_substitution(seeded1.graph, seeded1.map, pet, Edge(0, 1), k5).ok());

    auto seeded3 = substitute(pet, Edge(0, 1), k5, LinkingPolicy::seeded, 7);
    CHECK(validate_substitution(seeded3.graph, seeded3.map, pet, Edge(0, 1), k5).ok());
}

TEST_CASE("Lemma 1 at desk scale: substitution of Petersen into F2 is cyclically 4-edge connected") {
    auto [g, bm] = substitute(families::petersen(), Edge(0, 1), families::double_edge_frame());
    REQUIRE(g.vertex_count() == 16);
    // the four external edges of a block form a cyclic 4-cut, so equality
    CHECK(cyclic_edge_connectivity(g) == 4);
}
