#pragma once

#include <cstdint>
#include <vector>

#include "dmatch/graph.hpp"
#include "dmatch/matching.hpp"

namespace dmatch {

// Caps the number of explored search nodes. Exceeding the cap raises
// BudgetExhaustedError instead of returning an approximate answer.
struct Budget {
    std::uint64_t limit = 10'000'000;
    std::uint64_t used = 0;

    void tick() {
        if (++used > limit)
            throw BudgetExhaustedError("search budget of " + std::to_string(limit) +
                                       " nodes exhausted");
    }
};

struct MatchingNumbers {
    int nu = 0;
    int nu_s = 0;
    int nu_d = 0;
    std::vector<int> chain;  // chain[c-1] = nu_{d,c} for c = 1..nu_s

    friend bool operator==(const MatchingNumbers&, const MatchingNumbers&) = default;
};

// Exact nu_s by branch-and-bound over edges: include an edge (removing the
// closed neighborhood of its endpoints) or exclude it; bound each node by
// current size + nu(residual).
int induced_matching_number(const Graph& g, Budget& budget);
int induced_matching_number(const Graph& g);

// Early-exit variant: true iff g has an induced matching of size >= target.
bool has_induced_matching_of_size(const Graph& g, int target, Budget& budget);

// Exact nu_{d,c}; c = 1 delegates to maximum_matching. Returns 0 when only
// the empty matching qualifies.
int c_disconnected_matching_number(const Graph& g, int c, Budget& budget);
int c_disconnected_matching_number(const Graph& g, int c);

// nu, nu_s, nu_d and the whole chain nu_{d,1} >= nu_{d,2} >= ... >= nu_{d,nu_s},
// with the chain invariants validated before returning.
MatchingNumbers full_profile(const Graph& g, Budget& budget);
MatchingNumbers full_profile(const Graph& g);

// Ground-truth oracle: enumerates every matching by recursive edge inclusion
// with no pruning beyond endpoint conflicts and classifies each one. Shares
// no search code with the branch-and-bound paths. The default edge cap keeps
// accidental exponential blowups out; callers may raise it explicitly for
// structured sparse inputs.
inline constexpr int kOracleDefaultEdgeCap = 24;
MatchingNumbers oracle_enumerate(const Graph& g, int max_edges = kOracleDefaultEdgeCap);

}  // namespace dmatch
