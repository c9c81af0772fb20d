#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "common/test_graphs.hpp"
#include "dmatch/matching.hpp"
#include "dmatch/random_graph.hpp"
#include "dmatch/solver.hpp"

using namespace dmatch;
namespace tg = testgraphs;

TEST_CASE("maximum matching on small graphs") {
    CHECK(matching_number(tg::cycle(4)) == 2);
    CHECK(matching_number(tg::complete(3)) == 1);
    CHECK(matching_number(tg::path(5)) == 2);
    CHECK(matching_number(tg::complete(7)) == 3);
    CHECK(matching_number(Graph(3, {})) == 0);
    // an odd cycle forces a blossom
    CHECK(matching_number(tg::cycle(9)) == 4);
}

TEST_CASE("returned matching is valid and deterministic") {
    for (int n : {5, 8, 11}) {
        RandomGraphSpec spec;
        spec.n = n;
        spec.m = std::min(n * (n - 1) / 2, 2 * n);
        spec.seed = 77 + n;
        Graph g = random_graph(spec);
        Matching m1 = maximum_matching(g);
        Matching m2 = maximum_matching(g);
        CHECK(is_valid_matching(g, m1));
        CHECK(m1 == m2);
        // maximum size means no augmenting path remains
        CHECK(static_cast<int>(m1.size()) == oracle_enumerate(g, 40).nu);
    }
}

TEST_CASE("analyze") {
    Graph p5 = tg::path(5);
    MatchingAnalysis a = analyze(p5, Matching({{0, 1}, {3, 4}}));
    CHECK(a.induced_components == 2);
    CHECK(a.is_induced);
    CHECK(a.is_disconnected);
    CHECK(a.saturated == std::vector<int>{0, 1, 3, 4});

    Graph k4 = tg::complete(4);
    MatchingAnalysis b = analyze(k4, Matching({{0, 1}, {2, 3}}));
    CHECK(b.induced_components == 1);
    CHECK_FALSE(b.is_induced);
    CHECK_FALSE(b.is_disconnected);

    MatchingAnalysis c = analyze(k4, Matching{});
    CHECK(c.is_disconnected);
    CHECK(c.is_induced);
    for (int cc = 1; cc <= 5; ++cc) CHECK(c.is_c_disconnected(cc));

    CHECK_THROWS_AS(analyze(p5, Matching({{0, 2}})), InvalidMatchingError);
    CHECK_THROWS_AS(analyze(p5, Matching({{0, 1}, {1, 2}})), InvalidMatchingError);
}

TEST_CASE("is_maximal") {
    Graph p5 = tg::path(5);
    CHECK_FALSE(is_maximal(p5, Matching({{1, 2}})));
    CHECK(is_maximal(p5, Matching({{1, 2}, {3, 4}})));
    CHECK(is_maximal(Graph(1, {}), Matching{}));
}

TEST_CASE("blossom equals oracle on every connected graph with n <= 7") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : tg::connected_graphs(n))
            CHECK(matching_number(g) == oracle_enumerate(g).nu);
}

TEST_CASE("blossom equals oracle on random graphs with n <= 10") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        RandomGraphSpec spec;
        spec.n = 6 + static_cast<int>(seed % 5);
        spec.m = std::min(spec.n * (spec.n - 1) / 2,
                          static_cast<int>(5 + seed % 17));
        spec.seed = seed;
        Graph g = random_graph(spec);
        CHECK(matching_number(g) == oracle_enumerate(g).nu);
    }
}

TEST_CASE("matching number is invariant under relabeling") {
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomGraphSpec spec;
        spec.n = 9;
        spec.m = 13;
        spec.seed = 100 + seed;
        Graph g = random_graph(spec);
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
        Graph h(g.vertex_count(), edges);
        CHECK(matching_number(g) == matching_number(h));
    }
}

TEST_CASE("bipartite matching bounded by the smaller side") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomGraphSpec spec;
        spec.n = 10;
        spec.m = 12;
        spec.seed = seed;
        spec.bipartite = true;
        Graph g = random_graph(spec);
        auto bip = bipartition_of(g);
        REQUIRE(bip.has_value());
        int bound = static_cast<int>(
            std::min(bip->side_one.size(), bip->side_two.size()));
        CHECK(matching_number(g) <= bound);
    }
}
