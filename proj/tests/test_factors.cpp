#include "doctest.h"

#include <set>

#include "cubic/factors.hpp"
#include "cubic/families.hpp"
#include "oracles.hpp"

using namespace cubic;

namespace {

/// The smallest cubic graph with no perfect matching: a center joined to
/// three 5-vertex blobs (each blob is K4 with one edge subdivided).
Graph no_matching_cubic() {
    Graph g(16);
    int center = 15;
    for (int b = 0; b < 3; ++b) {
        int p = 5 * b, q = 5 * b + 1, r = 5 * b + 2, s = 5 * b + 3, t = 5 * b + 4;
        g.add_edge(p, q);
        g.add_edge(p, r);
        g.add_edge(q, s);
        g.add_edge(q, t);
        g.add_edge(r, s);
        g.add_edge(r, t);
        g.add_edge(s, t);
        g.add_edge(p, center);
    }
    return g;
}

}  // namespace

TEST_CASE("perfect matching counts match the DP oracle") {
    for (const Graph& g : {families::complete(4), families::complete_bipartite(3, 3), families::prism(),
                           families::moebius_ladder(8), families::hypercube3(), families::petersen(),
                           families::tietze(), families::heawood()}) {
        CHECK(count_perfect_matchings(g) == oracle::count_perfect_matchings_dp(g));
    }
    CHECK(count_perfect_matchings(families::petersen()) == 6);
    CHECK(count_perfect_matchings(families::complete(4)) == 3);
}

TEST_CASE("two-factors of K4 are the three Hamiltonian 4-cycles") {
    int count = 0;
    enumerate_two_factors(families::complete(4), [&](const TwoFactor& tf) {
        ++count;
        CHECK(tf.valid_in(families::complete(4)));
        REQUIRE(tf.cycles.size() == 1);
        CHECK(tf.cycles[0].length() == 4);
    });
    CHECK(count == 3);
}

TEST_CASE("two-factors of Petersen: six, each a pair of 5-cycles") {
    int count = 0;
    enumerate_two_factors(families::petersen(), [&](const TwoFactor& tf) {
        ++count;
        CHECK(tf.valid_in(families::petersen()));
        REQUIRE(tf.cycles.size() == 2);
        CHECK(tf.cycles[0].length() == 5);
        CHECK(tf.cycles[1].length() == 5);
    });
    CHECK(count == 6);
}

TEST_CASE("bipartite hosts have only even cycles in 2-factors") {
    enumerate_two_factors(families::complete_bipartite(3, 3), [&](const TwoFactor& tf) {
        CHECK(tf.odd_cycle_count() == 0);
    });
}

TEST_CASE("complementation is a bijection both ways") {
    for (const Graph& g : {families::petersen(), families::prism(), families::moebius_ladder(8)}) {
        long long pm_count = count_perfect_matchings(g);
        long long tf_count = 0;
        std::set<std::vector<int>> matchings_back;
        enumerate_two_factors(g, [&](const TwoFactor& tf) {
            ++tf_count;
            CHECK(tf.valid_in(g));
            // complement of the 2-factor must be a perfect matching again
            std::set<std::pair<int, int>> on_cycles;
            for (const Cycle& c : tf.cycles)
                for (int i = 0; i < c.length(); ++i) {
                    int a = c.vertices[static_cast<size_t>(i)];
                    int b = c.vertices[static_cast<size_t>((i + 1) % c.length())];
                    on_cycles.insert({std::min(a, b), std::max(a, b)});
                }
            std::vector<int> pm_key;
            std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
            for (const Edge& e : g.edges())
                if (!on_cycles.count({e.u, e.v})) {
                    CHECK(!covered[static_cast<size_t>(e.u)]);
                    CHECK(!covered[static_cast<size_t>(e.v)]);
                    covered[static_cast<size_t>(e.u)] = covered[static_cast<size_t>(e.v)] = 1;
                    pm_key.push_back(e.u * g.vertex_count() + e.v);
                }
            CHECK(std::count(covered.begin(), covered.end(), 1) == g.vertex_count());
            CHECK(matchings_back.insert(pm_key).second);  // distinct matchings
        });
        CHECK(tf_count == pm_count);
    }
}

TEST_CASE("oddness: known values, parity, witnesses") {
    OddnessReport pet = oddness(families::petersen());
    CHECK(pet.oddness == 2);
    CHECK(pet.two_factor_count == 6);
    REQUIRE(pet.witness.has_value());
    CHECK(pet.witness->valid_in(families::petersen()));
    CHECK(pet.witness->odd_cycle_count() == 2);

    CHECK(oddness(families::complete(4)).oddness == 0);
    CHECK(oddness(families::moebius_ladder(8)).oddness == 0);

    for (const Graph& g : {families::petersen(), families::tietze(), families::flower_snark(5)}) {
        auto rep = oddness(g);
        REQUIRE(rep.oddness.has_value());
        CHECK(*rep.oddness % 2 == 0);
    }
}

TEST_CASE("a cubic graph without a 2-factor reports infinite oddness") {
    Graph g = no_matching_cubic();
    REQUIRE(is_cubic(g));
    OddnessReport rep = oddness(g);
    CHECK(!rep.oddness.has_value());
    CHECK(rep.two_factor_count == 0);
}

TEST_CASE("forced odd count") {
    CHECK(forced_odd_count(families::complete(4), Edge(0, 1)) == 0);

    // every edge of Petersen, against a direct sweep of its six 2-factors
    Graph p = families::petersen();
    for (const Edge& e : p.edges()) {
        int direct = INT32_MAX;
        enumerate_two_factors(p, [&](const TwoFactor& tf) {
            int q = 0;
            for (const Cycle& c : tf.cycles) {
                if (c.length() % 2 == 0) continue;
                bool touches = false;
                for (int v : c.vertices) touches |= (v == e.u || v == e.v);
                if (!touches) ++q;
            }
            direct = std::min(direct, q);
        });
        int mine = forced_odd_count(p, e);
        CHECK(mine == direct);
        CHECK(mine <= *oddness(p).oddness);
    }

    CHECK_THROWS_AS(forced_odd_count(no_matching_cubic(), Edge(0, 1)), error);
    CHECK_THROWS_AS(forced_odd_count(families::petersen(), Edge(0, 7)), error);

    OddnessReport with_edge = oddness(families::petersen(), Edge(0, 1));
    CHECK(with_edge.oddness == 2);
    CHECK(with_edge.forced_odd_avoiding_e == forced_odd_count(families::petersen(), Edge(0, 1)));
    CHECK(*with_edge.forced_odd_avoiding_e <= *with_edge.oddness);  // q <= oddness always
}
