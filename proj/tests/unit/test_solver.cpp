#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common/test_graphs.hpp"
#include "dmatch/random_graph.hpp"
#include "dmatch/solver.hpp"

using namespace dmatch;
namespace tg = testgraphs;

TEST_CASE("induced matching number examples") {
    CHECK(induced_matching_number(tg::complete(4)) == 1);
    CHECK(induced_matching_number(tg::path(5)) == 2);
    CHECK(induced_matching_number(tg::disjoint_k2(2)) == 2);
    CHECK(induced_matching_number(Graph(3, {})) == 0);
    CHECK(induced_matching_number(tg::path(4)) == 1);
}

TEST_CASE("c-disconnected matching number examples") {
    CHECK(c_disconnected_matching_number(tg::complete(4), 2) == 0);
    CHECK(c_disconnected_matching_number(tg::disjoint_k2(2), 2) == 2);
    CHECK(c_disconnected_matching_number(tg::path(5), 2) == 2);
    CHECK(c_disconnected_matching_number(tg::path(5), 1) == 2);
    CHECK_THROWS_AS(c_disconnected_matching_number(tg::path(5), 0), PreconditionError);
}

TEST_CASE("full profile examples") {
    MatchingNumbers two_k2 = full_profile(tg::disjoint_k2(2));
    CHECK(two_k2.nu == 2);
    CHECK(two_k2.nu_s == 2);
    CHECK(two_k2.nu_d == 2);
    CHECK(two_k2.chain == std::vector<int>{2, 2});

    MatchingNumbers k4 = full_profile(tg::complete(4));
    CHECK(k4.nu == 2);
    CHECK(k4.nu_s == 1);
    CHECK(k4.nu_d == 0);
    CHECK(k4.chain == std::vector<int>{2});

    MatchingNumbers c6 = full_profile(tg::cycle(6));
    CHECK(c6.nu == 3);
    CHECK(c6.nu_s == 2);
    CHECK(c6.chain == std::vector<int>{3, 2});
}

TEST_CASE("oracle examples") {
    MatchingNumbers p5 = oracle_enumerate(tg::path(5));
    CHECK(p5.nu == 2);
    CHECK(p5.nu_s == 2);
    CHECK(p5.nu_d == 2);

    MatchingNumbers k3 = oracle_enumerate(tg::complete(3));
    CHECK(k3.nu == 1);
    CHECK(k3.nu_s == 1);
    CHECK(k3.nu_d == 0);

    MatchingNumbers empty = oracle_enumerate(Graph(3, {}));
    CHECK(empty.nu == 0);
    CHECK(empty.nu_s == 0);
    CHECK(empty.nu_d == 0);
    CHECK(empty.chain.empty());
}

TEST_CASE("oracle edge cap") {
    CHECK_THROWS_AS(oracle_enumerate(tg::complete(8)), TooLargeError);
    CHECK(oracle_enumerate(tg::complete(8), 28).nu == 4);
}

TEST_CASE("budget exhaustion is an error, not an approximation") {
    Budget tiny{5, 0};
    CHECK_THROWS_AS(induced_matching_number(tg::complete_bipartite(5, 5), tiny),
                    BudgetExhaustedError);
}

TEST_CASE("solver equals oracle on every connected graph with n <= 7") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : tg::connected_graphs(n)) {
            MatchingNumbers want = oracle_enumerate(g);
            MatchingNumbers got = full_profile(g);
            CHECK(got == want);
        }
    }
}

TEST_CASE("solver equals oracle on seeded random graphs with n <= 12") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        RandomGraphSpec spec;
        spec.n = 5 + static_cast<int>(seed % 8);
        spec.m = std::min(spec.n * (spec.n - 1) / 2,
                          static_cast<int>(4 + (seed * 7) % 21));
        spec.seed = 1000 + seed;
        Graph g = random_graph(spec);
        MatchingNumbers want = oracle_enumerate(g);
        MatchingNumbers got = full_profile(g);
        CHECK(got == want);
    }
}

TEST_CASE("chain positivity boundary") {
    for (const Graph& g :
         {tg::path(5), tg::cycle(6), tg::disjoint_k2(3), tg::complete(4)}) {
        MatchingNumbers p = full_profile(g);
        for (int c = 1; c <= p.nu_s; ++c) CHECK(p.chain[c - 1] > 0);
        CHECK(c_disconnected_matching_number(g, p.nu_s + 1) == 0);
    }
}

TEST_CASE("nu and nu_s are additive over disjoint unions") {
    Graph a = tg::path(4);
    Graph b = tg::cycle(5);
    Graph u = tg::disjoint_union(a, b);
    MatchingNumbers pa = oracle_enumerate(a);
    MatchingNumbers pb = oracle_enumerate(b);
    MatchingNumbers pu = oracle_enumerate(u);
    CHECK(pu.nu == pa.nu + pb.nu);
    CHECK(pu.nu_s == pa.nu_s + pb.nu_s);
    MatchingNumbers solved = full_profile(u);
    CHECK(solved.nu == pu.nu);
    CHECK(solved.nu_s == pu.nu_s);
}

TEST_CASE("the chain can stay above nu_s at its right end") {
    // K4 + K2: a perfect matching of the K4 plus the K2 edge has two
    // components, so nu_{d,2} = 3 while nu_s = 2.
    Graph g = tg::disjoint_union(tg::complete(4), tg::path(2));
    MatchingNumbers p = full_profile(g);
    CHECK(p.nu_s == 2);
    CHECK(p.chain == std::vector<int>{3, 3});
    CHECK(oracle_enumerate(g).chain == p.chain);
}
