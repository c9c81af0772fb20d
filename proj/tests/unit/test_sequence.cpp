#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "common/test_graphs.hpp"
#include "dmatch/matching.hpp"
#include "dmatch/sequence.hpp"

using namespace dmatch;
namespace tg = testgraphs;

namespace {

// vertices of the final stage plus every single-edge component: the graph
// the construction started from
Graph first_stage(const Graph& g, int k) {
    std::vector<int> keep;
    for (const auto& [v, label] : g.labels())
        if (label.rfind("E:", 0) == 0 || label == "stage:" + std::to_string(k))
            keep.push_back(v);
    return induced_subgraph(g, keep).graph;
}

}  // namespace

TEST_CASE("spec validation") {
    SequenceSpec ok{{2, 2}};
    CHECK_NOTHROW(ok.validate());
    SequenceSpec increasing{{2, 3}};
    CHECK_THROWS_AS(increasing.validate(), InvalidSequenceError);
    SequenceSpec tail_too_small{{3, 1}};
    CHECK_THROWS_AS(tail_too_small.validate(), InvalidSequenceError);
    SequenceSpec empty{{}};
    CHECK_THROWS_AS(empty.validate(), InvalidSequenceError);
    SequenceSpec zero{{2, 0}};
    CHECK_THROWS_AS(zero.validate(), InvalidSequenceError);
    SequenceSpec round = read_sequence_spec_json(write_sequence_spec_json({{4, 2}}));
    CHECK(round.betas == std::vector<int>{4, 2});
}

TEST_CASE("beta (2,2) gives two disjoint K2") {
    Graph g = construct_sequence_graph({{2, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(components(g).size() == 2);
    CHECK(verify_sequence_graph(g, {{2, 2}}));
}

TEST_CASE("beta (4,2)") {
    SequenceSpec spec{{4, 2}};
    Graph g = construct_sequence_graph(spec);
    CHECK(g.vertex_count() == 8);
    MatchingNumbers nums = oracle_enumerate(g, 30);
    CHECK(nums.nu == 4);
    CHECK(nums.nu_d == 2);
    CHECK(verify_sequence_graph(g, spec));
}

TEST_CASE("beta (5,3,3) exercises an equal stage") {
    SequenceSpec spec{{5, 3, 3}};
    Graph g = construct_sequence_graph(spec);
    Budget budget{100'000'000, 0};
    CHECK(c_disconnected_matching_number(g, 1, budget) == 5);
    CHECK(c_disconnected_matching_number(g, 2, budget) == 3);
    CHECK(c_disconnected_matching_number(g, 3, budget) == 3);
}

TEST_CASE("verify rejects a wrong chain") {
    CHECK_FALSE(verify_sequence_graph(tg::disjoint_k2(2), {{3, 2}}));
}

TEST_CASE("final stage has k components and a perfect matching of size beta_k") {
    for (const SequenceSpec& spec :
         {SequenceSpec{{4, 2}}, SequenceSpec{{5, 3, 3}}, SequenceSpec{{6, 4, 3}},
          SequenceSpec{{3, 3, 3}}}) {
        Graph g = construct_sequence_graph(spec);
        Graph gk = first_stage(g, spec.k());
        CHECK(static_cast<int>(components(gk).size()) == spec.k());
        int beta_k = spec.betas.back();
        CHECK(gk.vertex_count() == 2 * beta_k);
        CHECK(matching_number(gk) == beta_k);
    }
}

TEST_CASE("all specs with k <= 3 and beta_1 <= 5 verify") {
    Budget budget{1'000'000'000, 0};
    for (int b1 = 1; b1 <= 5; ++b1) {
        CHECK(verify_sequence_graph(construct_sequence_graph({{b1}}), {{b1}}, budget));
        for (int b2 = 2; b2 <= b1; ++b2) {
            SequenceSpec s2{{b1, b2}};
            CHECK(verify_sequence_graph(construct_sequence_graph(s2), s2, budget));
            for (int b3 = 3; b3 <= b2; ++b3) {
                SequenceSpec s3{{b1, b2, b3}};
                CHECK(verify_sequence_graph(construct_sequence_graph(s3), s3, budget));
            }
        }
    }
}
