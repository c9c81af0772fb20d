#pragma once

#include <cstddef>
#include <vector>

#include "dmatch/graph.hpp"

namespace dmatch {

// Maximum matching over a shrinking subgraph. The branch-and-bound solvers
// delete vertices and exclude edges as they descend and roll the state back
// on return; the matcher repairs its matching incrementally instead of
// recomputing from scratch. Repair relies on the standard fact that a free
// vertex with no augmenting path stays free under augmentations elsewhere,
// so one search per newly freed vertex restores maximality.
//
// All searches handle blossoms, so the matcher is exact on general graphs.
class DynamicMatcher {
public:
    explicit DynamicMatcher(const Graph& g);

    int matching_size() const { return size_; }
    bool vertex_alive(int v) const { return alive_[v] != 0; }
    bool edge_usable(int eid) const;
    const std::vector<int>& mate() const { return mate_; }

    struct Checkpoint {
        std::size_t journal;
        int size;
    };
    Checkpoint checkpoint() const { return {journal_.size(), size_}; }
    void rollback(const Checkpoint& cp);

    void remove_vertex(int v);
    void remove_vertices(const std::vector<int>& vs);
    void exclude_edge(int eid);

    // Per-vertex adjacency as (neighbor, edge id) pairs, ascending by id.
    const std::vector<std::pair<int, int>>& incident(int v) const {
        return adj_[v];
    }
    int edge_count() const { return static_cast<int>(edge_u_.size()); }
    int edge_u(int eid) const { return edge_u_[eid]; }
    int edge_v(int eid) const { return edge_v_[eid]; }

private:
    enum class Field : unsigned char { Mate, Alive, Excluded };
    struct JournalEntry {
        Field field;
        int index;
        int old_value;
    };

    void set_mate(int v, int x);
    void set_alive(int v, int x);
    void set_excluded(int eid, int x);
    bool try_augment(int root);
    int lca(int a, int b);
    void mark_path(int v, int b, int child);

    int n_ = 0;
    std::vector<std::pair<int, int>> flat_adj_storage_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> edge_u_, edge_v_;
    std::vector<int> mate_;
    std::vector<char> alive_;
    std::vector<char> excluded_;
    int size_ = 0;
    std::vector<JournalEntry> journal_;

    // scratch for augmenting search
    std::vector<int> parent_, base_, queue_;
    std::vector<char> used_, blossom_, lca_mark_;
};

}  // namespace dmatch
