#pragma once

#include <cstdint>

#include "dmatch/graph.hpp"

namespace dmatch {

// Seeded uniform-ish random graph. With `bipartite` the sides are the even
// and odd vertex ids; with `connected` a random spanning tree is laid down
// first. Identical parameters always produce the identical graph; the
// generator avoids std::uniform_int_distribution on purpose because its
// output is implementation-defined.
struct RandomGraphSpec {
    int n = 0;
    int m = 0;
    std::uint64_t seed = 0;
    bool connected = false;
    bool bipartite = false;
    int max_degree = -1;  // -1: unconstrained
};

// Throws PreconditionError when the constraints are unsatisfiable.
Graph random_graph(const RandomGraphSpec& spec);

}  // namespace dmatch
