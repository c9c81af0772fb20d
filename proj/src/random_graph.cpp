#include "dmatch/random_graph.hpp"

#include <algorithm>
#include <random>

namespace dmatch {

namespace {

// Unbiased draw from [0, k) with rejection sampling; deterministic across
// platforms since it only relies on the mt19937_64 output sequence.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t k) {
    if (k <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % k;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % k;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng_below(rng, i)]);
}

}  // namespace

Graph random_graph(const RandomGraphSpec& spec) {
    const int n = spec.n;
    if (n < 0) throw PreconditionError("n must be non-negative");
    auto compatible = [&](int u, int v) {
        return !spec.bipartite || (u % 2) != (v % 2);
    };
    std::vector<std::pair<int, int>> candidates;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (compatible(u, v)) candidates.emplace_back(u, v);
    if (spec.m > static_cast<int>(candidates.size()))
        throw PreconditionError("m exceeds the maximum of " +
                                std::to_string(candidates.size()) + " edges");
    if (spec.connected && n > 0 && spec.m < n - 1)
        throw PreconditionError("connected graph needs at least n-1 edges");
    if (spec.max_degree == 0 && spec.m > 0)
        throw PreconditionError("max degree 0 admits no edges");
    if (spec.max_degree > 0 &&
        spec.m > n * spec.max_degree / 2)
        throw PreconditionError("m exceeds the degree-sum bound");

    std::mt19937_64 rng(spec.seed);
    const int cap = spec.max_degree < 0 ? n : spec.max_degree;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        std::vector<int> deg(n, 0);
        std::vector<std::vector<char>> used(n, std::vector<char>(n, 0));
        bool stuck = false;
        auto add = [&](int u, int v) {
            edges.emplace_back(u, v);
            used[u][v] = used[v][u] = 1;
            ++deg[u];
            ++deg[v];
        };
        if (spec.connected && n > 1) {
            for (int v = 1; v < n && !stuck; ++v) {
                // attach v to a random earlier vertex with spare degree
                std::vector<int> options;
                for (int u = 0; u < v; ++u)
                    if (compatible(u, v) && deg[u] < cap) options.push_back(u);
                if (options.empty()) {
                    stuck = true;
                    break;
                }
                add(options[rng_below(rng, options.size())], v);
            }
        }
        if (!stuck) {
            std::vector<std::pair<int, int>> pool = candidates;
            shuffle_vec(pool, rng);
            for (const auto& [u, v] : pool) {
                if (static_cast<int>(edges.size()) >= spec.m) break;
                if (used[u][v] || deg[u] >= cap || deg[v] >= cap) continue;
                add(u, v);
            }
            if (static_cast<int>(edges.size()) == spec.m) {
                Graph g(n, edges);
                if (!spec.connected || n <= 1 || components(g).size() == 1)
                    return g;
            }
        }
    }
    throw PreconditionError("could not satisfy the generator constraints");
}

}  // namespace dmatch
