#include "dmatch/dynamic_matcher.hpp"

#include <algorithm>

namespace dmatch {

DynamicMatcher::DynamicMatcher(const Graph& g) : n_(g.vertex_count()) {
    const auto& edges = g.edges();
    edge_u_.reserve(edges.size());
    edge_v_.reserve(edges.size());
    adj_.resize(n_);
    for (int eid = 0; eid < static_cast<int>(edges.size()); ++eid) {
        edge_u_.push_back(edges[eid].u);
        edge_v_.push_back(edges[eid].v);
        adj_[edges[eid].u].emplace_back(edges[eid].v, eid);
        adj_[edges[eid].v].emplace_back(edges[eid].u, eid);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    mate_.assign(n_, -1);
    alive_.assign(n_, 1);
    excluded_.assign(edges.size(), 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    used_.assign(n_, 0);
    blossom_.assign(n_, 0);
    lca_mark_.assign(n_, 0);

    // Greedy seed, then one augmenting search per remaining free vertex.
    for (int v = 0; v < n_; ++v) {
        if (mate_[v] != -1) continue;
        for (auto [w, eid] : adj_[v]) {
            (void)eid;
            if (mate_[w] == -1) {
                mate_[v] = w;
                mate_[w] = v;
                ++size_;
                break;
            }
        }
    }
    for (int v = 0; v < n_; ++v)
        if (mate_[v] == -1 && try_augment(v)) ++size_;
    journal_.clear();
}

bool DynamicMatcher::edge_usable(int eid) const {
    return !excluded_[eid] && alive_[edge_u_[eid]] && alive_[edge_v_[eid]];
}

void DynamicMatcher::set_mate(int v, int x) {
    journal_.push_back({Field::Mate, v, mate_[v]});
    mate_[v] = x;
}

void DynamicMatcher::set_alive(int v, int x) {
    journal_.push_back({Field::Alive, v, alive_[v]});
    alive_[v] = static_cast<char>(x);
}

void DynamicMatcher::set_excluded(int eid, int x) {
    journal_.push_back({Field::Excluded, eid, excluded_[eid]});
    excluded_[eid] = static_cast<char>(x);
}

void DynamicMatcher::rollback(const Checkpoint& cp) {
    while (journal_.size() > cp.journal) {
        const JournalEntry& e = journal_.back();
        switch (e.field) {
            case Field::Mate: mate_[e.index] = e.old_value; break;
            case Field::Alive: alive_[e.index] = static_cast<char>(e.old_value); break;
            case Field::Excluded: excluded_[e.index] = static_cast<char>(e.old_value); break;
        }
        journal_.pop_back();
    }
    size_ = cp.size;
}

void DynamicMatcher::remove_vertex(int v) { remove_vertices({v}); }

void DynamicMatcher::remove_vertices(const std::vector<int>& vs) {
    std::vector<int> freed;
    for (int v : vs) {
        if (!alive_[v]) continue;
        set_alive(v, 0);
        int m = mate_[v];
        if (m != -1) {
            set_mate(v, -1);
            set_mate(m, -1);
            --size_;
            freed.push_back(m);
        }
    }
    std::sort(freed.begin(), freed.end());
    for (int v : freed)
        if (alive_[v] && mate_[v] == -1 && try_augment(v)) ++size_;
}

void DynamicMatcher::exclude_edge(int eid) {
    if (excluded_[eid]) return;
    set_excluded(eid, 1);
    int u = edge_u_[eid], v = edge_v_[eid];
    if (mate_[u] == v) {
        set_mate(u, -1);
        set_mate(v, -1);
        --size_;
        if (alive_[u] && try_augment(u)) ++size_;
        if (alive_[v] && mate_[v] == -1 && try_augment(v)) ++size_;
    }
}

int DynamicMatcher::lca(int a, int b) {
    std::fill(lca_mark_.begin(), lca_mark_.end(), 0);
    a = base_[a];
    while (true) {
        lca_mark_[a] = 1;
        if (mate_[a] == -1) break;
        a = base_[parent_[mate_[a]]];
    }
    b = base_[b];
    while (!lca_mark_[b]) b = base_[parent_[mate_[b]]];
    return b;
}

void DynamicMatcher::mark_path(int v, int b, int child) {
    while (base_[v] != b) {
        blossom_[base_[v]] = 1;
        blossom_[base_[mate_[v]]] = 1;
        parent_[v] = child;
        child = mate_[v];
        v = parent_[mate_[v]];
    }
}

bool DynamicMatcher::try_augment(int root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    queue_.clear();
    used_[root] = 1;
    queue_.push_back(root);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
        int v = queue_[qi];
        for (auto [to, eid] : adj_[v]) {
            if (!alive_[to] || excluded_[eid]) continue;
            if (base_[v] == base_[to] || mate_[v] == to) continue;
            if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                int curbase = lca(v, to);
                std::fill(blossom_.begin(), blossom_.end(), 0);
                mark_path(v, curbase, to);
                mark_path(to, curbase, v);
                for (int i = 0; i < n_; ++i) {
                    if (blossom_[base_[i]]) {
                        base_[i] = curbase;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue_.push_back(i);
                        }
                    }
                }
            } else if (parent_[to] == -1) {
                parent_[to] = v;
                if (mate_[to] == -1) {
                    // augment along the alternating path back to root
                    while (to != -1) {
                        int pv = parent_[to];
                        int ppv = mate_[pv];
                        set_mate(to, pv);
                        set_mate(pv, to);
                        to = ppv;
                    }
                    return true;
                }
                used_[mate_[to]] = 1;
                queue_.push_back(mate_[to]);
            }
        }
    }
    return false;
}

}  // namespace dmatch
