#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "common/test_graphs.hpp"
#include "dmatch/deciders.hpp"
#include "dmatch/random_graph.hpp"
#include "dmatch/reductions.hpp"

using namespace dmatch;
namespace tg = testgraphs;

namespace {

// two disjoint K2 plus a universal vertex; diameter 2
Graph hub_graph() { return tg::with_universal_vertex(tg::disjoint_k2(2)); }

}  // namespace

TEST_CASE("diameter <= 3 decider examples") {
    auto yes = decide_nu_eq_nudj_small_diameter(hub_graph(), 2);
    CHECK(yes.equal);
    REQUIRE(yes.witness.has_value());
    CHECK(yes.witness->vertex == 4);
    CHECK(yes.witness->nontrivial_components == 2);
    CHECK(yes.witness->matching_preserved);

    Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    auto no_star = decide_nu_eq_nudj_small_diameter(star, 2);
    CHECK_FALSE(no_star.equal);
    CHECK_FALSE(no_star.witness.has_value());

    CHECK_FALSE(decide_nu_eq_nudj_small_diameter(tg::cycle(4), 2).equal);
}

TEST_CASE("diameter decider preconditions") {
    CHECK_THROWS_AS(decide_nu_eq_nudj_small_diameter(tg::path(5), 2),
                    PreconditionError);  // diameter 4
    CHECK_THROWS_AS(decide_nu_eq_nudj_small_diameter(tg::disjoint_k2(2), 2),
                    PreconditionError);  // disconnected
    CHECK_THROWS_AS(decide_nu_eq_nudj_small_diameter(Graph(3, {}), 2),
                    PreconditionError);  // edgeless
    CHECK_THROWS_AS(decide_nu_eq_nudj_small_diameter(tg::cycle(4), 1),
                    PreconditionError);  // j < 2
    CHECK_THROWS_AS(decide_nu_eq_nudj_diameter2(tg::cycle(6), 2),
                    PreconditionError);  // diameter 3
}

TEST_CASE("diameter 2 fast path examples") {
    CHECK(decide_nu_eq_nudj_diameter2(hub_graph(), 2).equal);
    CHECK_FALSE(decide_nu_eq_nudj_diameter2(tg::complete(4), 2).equal);
    // wheel over C5: removing the hub leaves an odd cycle
    Graph wheel = tg::with_universal_vertex(tg::cycle(5));
    CHECK_FALSE(decide_nu_eq_nudj_diameter2(wheel, 2).equal);
}

TEST_CASE("cameron-walker recognition examples") {
    auto k2 = recognize_cameron_walker(tg::path(2));
    REQUIRE(k2.has_value());
    CHECK(k2->set_a == std::vector<int>{0});
    CHECK(k2->set_b == std::vector<int>{1});
    CHECK(k2->set_c.empty());
    CHECK(k2->set_d.empty());

    auto k3 = recognize_cameron_walker(tg::complete(3));
    REQUIRE(k3.has_value());
    CHECK(k3->set_d == std::vector<int>{0, 1});
    CHECK(k3->set_c == std::vector<int>{2});

    CHECK_FALSE(recognize_cameron_walker(tg::path(4)).has_value());
    CHECK(recognize_cameron_walker(tg::path(1)).has_value());
    CHECK_THROWS_AS(recognize_cameron_walker(tg::disjoint_k2(2)), PreconditionError);
}

TEST_CASE("recognized decompositions verify, and recognition matches nu = nu_s") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : tg::connected_graphs(n)) {
            auto d = recognize_cameron_walker(g);
            MatchingNumbers oracle = oracle_enumerate(g);
            CHECK(d.has_value() == (oracle.nu == oracle.nu_s));
            if (d) CHECK(verify_cw_decomposition(g, *d));
        }
    }
}

TEST_CASE("decide_nu_eq_nus handles components") {
    CHECK(decide_nu_eq_nus(tg::complete(3)));
    CHECK_FALSE(decide_nu_eq_nus(tg::path(4)));
    CHECK(decide_nu_eq_nus(tg::disjoint_union(tg::complete(3), tg::path(2))));
    CHECK(decide_nu_eq_nus(Graph(3, {})));
}

TEST_CASE("s bound examples") {
    SBoundReport hub = compute_s_bound(hub_graph());
    CHECK(hub.s_value == 2);
    CHECK(hub.argmax_edge == Edge{0, 1});
    for (const auto& pe : hub.per_edge)
        if (pe.edge.v == 4) CHECK(pe.residual_nu + (pe.equality ? 1 : 0) == 1);

    CHECK(compute_s_bound(tg::complete(4)).s_value == 1);

    SBoundReport p5 = compute_s_bound(tg::path(5));
    CHECK(p5.s_value == 2);
    CHECK(p5.argmax_edge == Edge{0, 1});

    CHECK_THROWS_AS(compute_s_bound(Graph(2, {})), NoEdgesError);
}

TEST_CASE("bound chain examples") {
    Budget b;
    BoundChainReport two = check_bound_chain(tg::disjoint_k2(2), b);
    CHECK(two.nu_s == 2);
    CHECK(two.middle == 2);
    CHECK(two.nu_d == 2);
    CHECK_FALSE(two.right_vacuous);

    BoundChainReport k4 = check_bound_chain(tg::complete(4), b);
    CHECK(k4.nu_s == 1);
    CHECK(k4.middle == 1);
    CHECK(k4.nu_d == 0);
    CHECK(k4.right_vacuous);

    BoundChainReport p5 = check_bound_chain(tg::path(5), b);
    CHECK(p5.nu_s == 2);
    CHECK(p5.middle == 2);
    CHECK(p5.nu_d == 2);
}

TEST_CASE("disequality certificate") {
    CHECK_FALSE(verify_disequality_certificate(tg::cycle(6), Matching({{0, 1}, {3, 4}})));
    CHECK_FALSE(verify_disequality_certificate(tg::path(5), Matching{}));
    CHECK_THROWS_AS(verify_disequality_certificate(tg::path(5), Matching({{0, 2}})),
                    InvalidMatchingError);

    // two disjoint P4 have nu_d = 4 but every closed-neighborhood residual
    // only reaches nu = 2, so the co-NP gadget with k = 4 separates the
    // numbers and its maximum disconnected matching certifies that
    Graph base = tg::disjoint_union(tg::path(4), tg::path(4));
    ReductionArtifact art = build_conp_reduction(base, 4);
    Matching cert({Edge{0, 1}, Edge{2, 3}, Edge{4, 5}, Edge{6, 7}});
    CHECK(verify_disequality_certificate(art.graph, cert));
}

TEST_CASE("bounded degree decider examples") {
    CHECK_FALSE(decide_nud_eq_nus_bounded_degree(tg::complete(3)));
    CHECK(decide_nud_eq_nus_bounded_degree(tg::disjoint_k2(2)));
    CHECK_FALSE(decide_nud_eq_nus_bounded_degree(tg::path(4)));
    CHECK(decide_nud_eq_nus_bounded_degree(Graph(4, {})));
    // isolated vertices must not disturb the single-component path
    CHECK_FALSE(decide_nud_eq_nus_bounded_degree(
        tg::disjoint_union(Graph(2, {}), tg::path(4))));
}

TEST_CASE("diameter deciders agree with the oracle for n <= 7") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : tg::connected_graphs(n)) {
            if (g.edge_count() == 0) continue;
            auto diam = diameter(g);
            REQUIRE(diam.has_value());
            if (*diam > 3) continue;
            MatchingNumbers oracle = oracle_enumerate(g);
            for (int j = 2; j <= 3; ++j) {
                int nudj = j <= oracle.nu_s ? oracle.chain[j - 1] : 0;
                bool want = oracle.nu == nudj;
                CHECK(decide_nu_eq_nudj_small_diameter(g, j).equal == want);
                if (*diam <= 2)
                    CHECK(decide_nu_eq_nudj_diameter2(g, j).equal == want);
            }
        }
    }
}

TEST_CASE("s bound and bound chain hold on random graphs") {
    Budget budget{100'000'000, 0};
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomGraphSpec spec;
        spec.n = 5 + static_cast<int>(seed % 6);
        spec.m = std::min(spec.n * (spec.n - 1) / 2,
                          static_cast<int>(4 + (seed * 5) % 18));
        spec.seed = 500 + seed;
        Graph g = random_graph(spec);
        if (g.edge_count() == 0) continue;
        MatchingNumbers oracle = oracle_enumerate(g);
        SBoundReport s = compute_s_bound(g);
        CHECK(oracle.nu_s <= s.s_value);
        if (oracle.nu_s >= 2) {
            CHECK((oracle.nu_d != oracle.nu_s) == (oracle.nu_d > s.s_value));
        } else {
            // with nu_s = 1 only the empty matching is disconnected, so the
            // numbers differ yet no certificate larger than s >= 1 can exist
            CHECK(oracle.nu_d == 0);
            CHECK(s.s_value >= 1);
        }
        BoundChainReport chain = check_bound_chain(g, budget);
        CHECK(chain.nu_s <= chain.middle);
        if (!chain.right_vacuous) CHECK(chain.middle <= chain.nu_d);
    }
}

TEST_CASE("certificate equivalence fails only at nu_s = 1") {
    // the smallest fringe case: a single edge
    Graph k2 = tg::path(2);
    MatchingNumbers nums = oracle_enumerate(k2);
    CHECK(nums.nu_s == 1);
    CHECK(nums.nu_d == 0);
    CHECK(compute_s_bound(k2).s_value == 1);
}

TEST_CASE("bounded degree decider agrees with the oracle") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : tg::connected_graphs(n)) {
            MatchingNumbers oracle = oracle_enumerate(g);
            CHECK(decide_nud_eq_nus_bounded_degree(g) ==
                  (oracle.nu_d == oracle.nu_s));
        }
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        RandomGraphSpec spec;
        spec.n = 8 + static_cast<int>(seed % 5);
        spec.m = std::min(static_cast<int>(6 + (seed * 3) % 16), 2 * spec.n);
        spec.seed = 900 + seed;
        spec.max_degree = 4;
        Graph g = random_graph(spec);
        MatchingNumbers oracle = oracle_enumerate(g);
        CHECK(decide_nud_eq_nus_bounded_degree(g) == (oracle.nu_d == oracle.nu_s));
    }
}
