#pragma once

#include <string>
#include <vector>

#include "dmatch/graph.hpp"
#include "dmatch/solver.hpp"

namespace dmatch {

// Prescribed non-increasing targets beta_1 >= ... >= beta_k with beta_k >= k.
struct SequenceSpec {
    std::vector<int> betas;

    int k() const { return static_cast<int>(betas.size()); }
    void validate() const;  // throws InvalidSequenceError
};

std::string write_sequence_spec_json(const SequenceSpec& spec);
SequenceSpec read_sequence_spec_json(const std::string& text);

// Realizes nu_{d,i}(G) = beta_i for i = 1..k: start from k-1 single-edge
// components E_1..E_{k-1} plus a clique of size 2(beta_k - (k-1)), then for
// i = k-1..1 add a clique of size 2(beta_i - beta_{i+1}) joined to everything
// except E_1..E_{i-1}. Vertices carry "E:i" and "stage:i" labels recording
// the stage they joined at.
Graph construct_sequence_graph(const SequenceSpec& spec);

// Recomputes the chain nu_{d,1..k} with the exact solver and compares.
bool verify_sequence_graph(const Graph& g, const SequenceSpec& spec, Budget& budget);
bool verify_sequence_graph(const Graph& g, const SequenceSpec& spec);

}  // namespace dmatch
