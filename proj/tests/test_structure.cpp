#include "doctest.h"

#include "cubic/families.hpp"
#include "cubic/structure.hpp"
#include "oracles.hpp"

using namespace cubic;

TEST_CASE("girth of the standard fixtures") {
    CHECK(girth(families::complete(4)) == 3);
    CHECK(girth(families::petersen()) == 5);
    CHECK(girth(families::moebius_ladder(8)) == 4);
    CHECK(girth(families::heawood()) == 6);
    CHECK(girth(families::complete_bipartite(3, 3)) == 4);

    Graph path(4);  // acyclic
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(!girth(path).has_value());
}

TEST_CASE("girth agrees with the enumeration oracle on cubic fixtures") {
    for (const Graph& g : {families::complete(4), families::prism(), families::moebius_ladder(8),
                           families::hypercube3(), families::petersen(), families::tietze()}) {
        CHECK(*girth(g) == oracle::shortest_cycle(g));
    }
}

TEST_CASE("3-edge-colorability with proper witnesses") {
    for (const Graph& g : {families::complete(4), families::complete_bipartite(3, 3), families::prism(),
                           families::moebius_ladder(8), families::heawood()}) {
        EdgeColoring c = three_edge_coloring(g);
        CHECK(c.colorable);
        CHECK(is_proper_three_edge_coloring(g, c.colors));
    }
    CHECK_FALSE(is_three_edge_colorable(families::petersen()));
    CHECK_FALSE(is_three_edge_colorable(families::tietze()));
    CHECK_FALSE(is_three_edge_colorable(families::flower_snark(5)));
    CHECK_THROWS_AS(three_edge_coloring(families::complete(5)), error);
}

TEST_CASE("3-edge-colorability agrees with the plain backtracking oracle") {
    for (const Graph& g : {families::complete(4), families::prism(), families::moebius_ladder(8),
                           families::hypercube3(), families::petersen(), families::tietze(), families::heawood()}) {
        CHECK(is_three_edge_colorable(g) == oracle::three_edge_colorable(g));
    }
}

TEST_CASE("multigraph edge connectivity via flow") {
    CHECK(is_k_edge_connected(families::double_edge_frame(), 4));
    CHECK_FALSE(is_k_edge_connected(families::double_edge_frame(), 5));
    CHECK(is_k_edge_connected(families::complete_multigraph(5), 4));
    CHECK_FALSE(is_k_edge_connected(families::complete_multigraph(5), 5));

    MultiGraph c5(5);  // 5-cycle: every nontrivial cut has 2 edges
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    CHECK(is_k_edge_connected(c5, 2));
    CHECK_FALSE(is_k_edge_connected(c5, 4));

    MultiGraph split(2);  // disconnected
    CHECK_FALSE(is_k_edge_connected(split, 1));
}

TEST_CASE("cyclic edge connectivity: known values") {
    CHECK(cyclic_edge_connectivity(families::petersen()) == 5);
    CHECK(cyclic_edge_connectivity(families::moebius_ladder(8)) == 4);
    CHECK(cyclic_edge_connectivity(families::prism()) == 3);
    CHECK(!cyclic_edge_connectivity(families::complete(4)).has_value());
    CHECK(!cyclic_edge_connectivity(families::complete_bipartite(3, 3)).has_value());
}

TEST_CASE("cyclic edge connectivity equals brute force on every cubic fixture up to 14 vertices") {
    for (const Graph& g : {families::complete(4), families::complete_bipartite(3, 3), families::prism(),
                           families::moebius_ladder(8), families::hypercube3(), families::petersen(),
                           families::tietze(), families::heawood()}) {
        auto mine = cyclic_edge_connectivity(g);
        int brute = oracle::brute_cyclic_edge_connectivity(g, g.edge_count());
        if (mine)
            CHECK(*mine == brute);
        else
            CHECK(brute == -1);
    }
}

TEST_CASE("has_cyclic_cut_at_most matches the exact value") {
    CHECK_FALSE(has_cyclic_cut_at_most(families::petersen(), 4));
    CHECK(has_cyclic_cut_at_most(families::petersen(), 5));
    CHECK(has_cyclic_cut_at_most(families::prism(), 3));
    CHECK_FALSE(has_cyclic_cut_at_most(families::moebius_ladder(8), 3));
}

TEST_CASE("classification") {
    SnarkClass p = classify(families::petersen());
    CHECK(p.classification == SnarkKind::snark);
    CHECK(p.girth == 5);
    CHECK(p.cyclic_edge_connectivity == 5);

    CHECK(classify(families::complete_bipartite(3, 3)).classification == SnarkKind::three_edge_colorable);
    CHECK(classify(families::heawood()).classification == SnarkKind::three_edge_colorable);
    CHECK(classify(families::complete(4)).classification == SnarkKind::three_edge_colorable);

    // not 3-edge-colorable but killed by its triangle cut: neither snark class
    SnarkClass t = classify(families::tietze());
    CHECK(t.classification == SnarkKind::uncolorable);
    CHECK(t.girth == 3);
    CHECK(t.cyclic_edge_connectivity == 3);

    SnarkClass j5 = classify(families::flower_snark(5));
    CHECK(j5.classification == SnarkKind::snark);
    CHECK(j5.girth == 5);

    CHECK_THROWS_AS(classify(families::complete(5)), error);
}
