#include "dmatch/solver.hpp"

#include <algorithm>
#include <limits>

#include "dmatch/dynamic_matcher.hpp"

namespace dmatch {

namespace {

// Edges in branching order: degree-sum descending, lexicographic tie-break.
std::vector<int> branch_order(const Graph& g) {
    std::vector<int> order(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) order[i] = i;
    const auto& edges = g.edges();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        int da = g.degree(edges[a].u) + g.degree(edges[a].v);
        int db = g.degree(edges[b].u) + g.degree(edges[b].v);
        if (da != db) return da > db;
        return edges[a] < edges[b];
    });
    return order;
}

class InducedBnB {
public:
    InducedBnB(const Graph& g, Budget& budget, int stop_at)
        : g_(g), budget_(budget), dm_(g), order_(branch_order(g)), stop_at_(stop_at) {}

    int run() {
        rec(0);
        return best_;
    }

private:
    void rec(std::size_t pos) {
        if (done_) return;
        budget_.tick();
        if (cur_ > best_) best_ = cur_;
        if (best_ >= stop_at_) {
            done_ = true;
            return;
        }
        while (pos < order_.size() && !dm_.edge_usable(order_[pos])) ++pos;
        if (pos == order_.size()) return;
        if (cur_ + dm_.matching_size() <= best_) return;

        const int eid = order_[pos];
        const int u = dm_.edge_u(eid), v = dm_.edge_v(eid);
        {
            auto cp = dm_.checkpoint();
            std::vector<int> closed{u, v};
            for (int w : g_.neighbors(u)) closed.push_back(w);
            for (int w : g_.neighbors(v)) closed.push_back(w);
            dm_.remove_vertices(closed);
            ++cur_;
            rec(pos + 1);
            --cur_;
            dm_.rollback(cp);
        }
        if (done_) return;
        {
            auto cp = dm_.checkpoint();
            dm_.exclude_edge(eid);
            rec(pos + 1);
            dm_.rollback(cp);
        }
    }

    const Graph& g_;
    Budget& budget_;
    DynamicMatcher dm_;
    std::vector<int> order_;
    int stop_at_;
    int cur_ = 0;
    int best_ = 0;
    bool done_ = false;
};

struct RollbackDsu {
    std::vector<int> parent, rnk;
    struct Op {
        int child;
        int root;
        bool bumped;
    };
    std::vector<Op> ops;

    explicit RollbackDsu(int n) : parent(n), rnk(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rnk[a] < rnk[b]) std::swap(a, b);
        bool bump = rnk[a] == rnk[b];
        parent[b] = a;
        if (bump) ++rnk[a];
        ops.push_back({b, a, bump});
        return true;
    }
    std::size_t mark() const { return ops.size(); }
    void rollback(std::size_t m) {
        while (ops.size() > m) {
            const Op& o = ops.back();
            parent[o.child] = o.child;
            if (o.bumped) --rnk[o.root];
            ops.pop_back();
        }
    }
};

class DisconnectedBnB {
public:
    DisconnectedBnB(const Graph& g, int c, Budget& budget, int seed)
        : g_(g),
          c_(c),
          budget_(budget),
          dm_(g),
          order_(branch_order(g)),
          dsu_(g.vertex_count()),
          saturated_(g.vertex_count(), 0),
          satnbr_(g.vertex_count(), 0),
          best_(seed) {}

    int run() {
        rec(0);
        return best_;
    }

private:
    void rec(std::size_t pos) {
        budget_.tick();
        if (comps_ >= c_ && cur_ > best_) best_ = cur_;
        while (pos < order_.size() && !dm_.edge_usable(order_[pos])) ++pos;
        if (pos == order_.size()) return;
        const int residual = dm_.matching_size();
        if (cur_ + residual <= best_) return;
        // each further edge adds at most one component
        if (comps_ + residual < c_) return;
        if (c_ >= 2 && cur_ >= 1 && comps_ == 1 && !has_escape_edge(pos)) return;

        const int eid = order_[pos];
        const int u = dm_.edge_u(eid), v = dm_.edge_v(eid);
        {
            auto cp = dm_.checkpoint();
            auto dsu_mark = dsu_.mark();
            int saved_comps = comps_;
            saturate(u, v);
            dm_.remove_vertices({u, v});
            ++cur_;
            rec(pos + 1);
            --cur_;
            unsaturate(u, v);
            comps_ = saved_comps;
            dsu_.rollback(dsu_mark);
            dm_.rollback(cp);
        }
        {
            auto cp = dm_.checkpoint();
            dm_.exclude_edge(eid);
            rec(pos + 1);
            dm_.rollback(cp);
        }
    }

    // A candidate edge neither of whose endpoints touches the saturated set
    // can still open a new component; without one, a single-component partial
    // matching is stuck below c.
    bool has_escape_edge(std::size_t pos) const {
        for (std::size_t i = pos; i < order_.size(); ++i) {
            int eid = order_[i];
            if (!dm_.edge_usable(eid)) continue;
            if (satnbr_[dm_.edge_u(eid)] == 0 && satnbr_[dm_.edge_v(eid)] == 0)
                return true;
        }
        return false;
    }

    void saturate(int u, int v) {
        saturated_[u] = saturated_[v] = 1;
        dsu_.unite(u, v);
        ++comps_;
        for (int x : g_.neighbors(u)) {
            ++satnbr_[x];
            if (saturated_[x] && dsu_.unite(x, u)) --comps_;
        }
        for (int x : g_.neighbors(v)) {
            ++satnbr_[x];
            if (saturated_[x] && dsu_.unite(x, v)) --comps_;
        }
    }

    void unsaturate(int u, int v) {
        for (int x : g_.neighbors(u)) --satnbr_[x];
        for (int x : g_.neighbors(v)) --satnbr_[x];
        saturated_[u] = saturated_[v] = 0;
    }

    const Graph& g_;
    int c_;
    Budget& budget_;
    DynamicMatcher dm_;
    std::vector<int> order_;
    RollbackDsu dsu_;
    std::vector<char> saturated_;
    std::vector<int> satnbr_;
    int comps_ = 0;
    int cur_ = 0;
    int best_ = 0;
};

// Greedy incumbent for the c-disconnected search: fix c-1 edges whose closed
// neighborhoods are pairwise disjoint (each the sole edge of its component),
// preferring edges that keep the residual matching number high, then fill
// with a maximum matching of what is left. The result is validated with
// analyze, so a failed construction only weakens pruning, never correctness.
int seed_c_disconnected(const Graph& g, int c) {
    std::vector<int> alive(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) alive[v] = v;
    std::vector<Edge> chosen;
    for (int step = 0; step + 1 < c; ++step) {
        InducedSubgraph sub = induced_subgraph(g, alive);
        if (sub.graph.edge_count() == 0) break;
        int best_nu = -1;
        Edge best_edge{};
        for (const Edge& e : sub.graph.edges()) {
            int r = matching_number(
                delete_closed_neighborhood(sub.graph, {e.u, e.v}));
            if (r > best_nu) {
                best_nu = r;
                best_edge = e;
            }
        }
        chosen.push_back(make_edge(sub.to_old[best_edge.u], sub.to_old[best_edge.v]));
        InducedSubgraph rest_sub =
            delete_closed_neighborhood_mapped(sub.graph, {best_edge.u, best_edge.v});
        std::vector<int> next_alive;
        for (int v = 0; v < rest_sub.graph.vertex_count(); ++v)
            next_alive.push_back(sub.to_old[rest_sub.to_old[v]]);
        alive = std::move(next_alive);
    }
    InducedSubgraph sub = induced_subgraph(g, alive);
    Matching rest = maximum_matching(sub.graph);
    for (const Edge& e : rest.edges())
        chosen.push_back(make_edge(sub.to_old[e.u], sub.to_old[e.v]));
    Matching m(std::move(chosen));
    if (m.empty()) return 0;
    MatchingAnalysis a = analyze(g, m);
    return a.is_c_disconnected(c) ? static_cast<int>(m.size()) : 0;
}

}  // namespace

int induced_matching_number(const Graph& g, Budget& budget) {
    return InducedBnB(g, budget, std::numeric_limits<int>::max()).run();
}

int induced_matching_number(const Graph& g) {
    Budget b;
    return induced_matching_number(g, b);
}

bool has_induced_matching_of_size(const Graph& g, int target, Budget& budget) {
    if (target <= 0) return true;
    return InducedBnB(g, budget, target).run() >= target;
}

int c_disconnected_matching_number(const Graph& g, int c, Budget& budget) {
    if (c < 1) throw PreconditionError("component threshold c must be >= 1");
    if (c == 1) return matching_number(g);
    int seed = seed_c_disconnected(g, c);
    return DisconnectedBnB(g, c, budget, seed).run();
}

int c_disconnected_matching_number(const Graph& g, int c) {
    Budget b;
    return c_disconnected_matching_number(g, c, b);
}

MatchingNumbers full_profile(const Graph& g, Budget& budget) {
    MatchingNumbers r;
    r.nu = matching_number(g);
    r.nu_s = induced_matching_number(g, budget);
    r.chain.resize(r.nu_s);
    for (int c = 1; c <= r.nu_s; ++c)
        r.chain[c - 1] = c == 1 ? r.nu : c_disconnected_matching_number(g, c, budget);
    r.nu_d = r.nu_s >= 2 ? r.chain[1] : 0;

    // Chain sanity: nu_{d,1} = nu, non-increasing, and every nu_{d,c} with
    // c <= nu_s is at least nu_s (a maximum induced matching has nu_s
    // components). A violation signals a solver bug.
    if (r.nu_s > 0 && r.chain[0] != r.nu)
        throw InternalInvariantError("profile chain does not start at nu");
    for (int c = 2; c <= r.nu_s; ++c)
        if (r.chain[c - 1] > r.chain[c - 2])
            throw InternalInvariantError("profile chain is not non-increasing");
    for (int c = 1; c <= r.nu_s; ++c)
        if (r.chain[c - 1] < r.nu_s)
            throw InternalInvariantError("profile chain dips below nu_s");
    return r;
}

MatchingNumbers full_profile(const Graph& g) {
    Budget b;
    return full_profile(g, b);
}

namespace {

// The oracle keeps its own rollback union-find so that it shares nothing
// with the branch-and-bound machinery above.
struct OracleDsu {
    std::vector<int> parent, rnk;
    struct Op {
        int child;
        int root;
        bool bumped;
    };
    std::vector<Op> ops;

    explicit OracleDsu(int n) : parent(n), rnk(n, 0) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (rnk[a] < rnk[b]) std::swap(a, b);
        bool bump = rnk[a] == rnk[b];
        parent[b] = a;
        if (bump) ++rnk[a];
        ops.push_back({b, a, bump});
        return true;
    }
    void rollback(std::size_t m) {
        while (ops.size() > m) {
            const Op& o = ops.back();
            parent[o.child] = o.child;
            if (o.bumped) --rnk[o.root];
            ops.pop_back();
        }
    }
};

class OracleEnumerator {
public:
    explicit OracleEnumerator(const Graph& g)
        : g_(g),
          sat_(g.vertex_count(), 0),
          satdeg_(g.vertex_count(), 0),
          dsu_(g.vertex_count()),
          best_exact_(g.vertex_count() / 2 + 2, -1) {}

    MatchingNumbers run() {
        rec(0);
        MatchingNumbers r;
        r.nu = nu_;
        r.nu_s = nu_s_;
        r.chain.resize(nu_s_);
        int running = 0;
        for (int c = static_cast<int>(best_exact_.size()); c >= 1; --c) {
            if (c - 1 < static_cast<int>(best_exact_.size()))
                running = std::max(running, best_exact_[c - 1] < 0 ? 0 : best_exact_[c - 1]);
            if (c <= nu_s_) r.chain[c - 1] = running;
            if (c == 2) r.nu_d = running;
        }
        return r;
    }

private:
    void rec(std::size_t start) {
        nu_ = std::max(nu_, cur_);
        if (violations_ == 0) nu_s_ = std::max(nu_s_, cur_);
        if (cur_ > 0) best_exact_[comps_ - 1] = std::max(best_exact_[comps_ - 1], cur_);
        const auto& edges = g_.edges();
        for (std::size_t j = start; j < edges.size(); ++j) {
            int u = edges[j].u, v = edges[j].v;
            if (sat_[u] || sat_[v]) continue;
            auto dsu_mark = dsu_.ops.size();
            int saved_comps = comps_;
            add(u, v);
            ++cur_;
            rec(j + 1);
            --cur_;
            remove(u, v);
            comps_ = saved_comps;
            dsu_.rollback(dsu_mark);
        }
    }

    void add(int u, int v) {
        sat_[u] = sat_[v] = 1;
        dsu_.unite(u, v);
        ++comps_;
        int du = 0, dv = 0;
        for (int x : g_.neighbors(u)) {
            if (!sat_[x]) continue;
            ++du;
            if (x == v) continue;
            violations_ -= satdeg_[x] != 1;
            ++satdeg_[x];
            violations_ += satdeg_[x] != 1;
            if (dsu_.unite(x, u)) --comps_;
        }
        for (int x : g_.neighbors(v)) {
            if (!sat_[x]) continue;
            ++dv;
            if (x == u) continue;
            violations_ -= satdeg_[x] != 1;
            ++satdeg_[x];
            violations_ += satdeg_[x] != 1;
            if (dsu_.unite(x, v)) --comps_;
        }
        satdeg_[u] = du;
        violations_ += du != 1;
        satdeg_[v] = dv;
        violations_ += dv != 1;
    }

    void remove(int u, int v) {
        violations_ -= satdeg_[u] != 1;
        satdeg_[u] = 0;
        violations_ -= satdeg_[v] != 1;
        satdeg_[v] = 0;
        for (int x : g_.neighbors(u)) {
            if (!sat_[x] || x == v || x == u) continue;
            violations_ -= satdeg_[x] != 1;
            --satdeg_[x];
            violations_ += satdeg_[x] != 1;
        }
        for (int x : g_.neighbors(v)) {
            if (!sat_[x] || x == u || x == v) continue;
            violations_ -= satdeg_[x] != 1;
            --satdeg_[x];
            violations_ += satdeg_[x] != 1;
        }
        sat_[u] = sat_[v] = 0;
    }

    const Graph& g_;
    std::vector<char> sat_;
    std::vector<int> satdeg_;
    OracleDsu dsu_;
    std::vector<int> best_exact_;
    int comps_ = 0;
    int violations_ = 0;
    int cur_ = 0;
    int nu_ = 0;
    int nu_s_ = 0;
};

}  // namespace

MatchingNumbers oracle_enumerate(const Graph& g, int max_edges) {
    if (g.edge_count() > max_edges)
        throw TooLargeError("oracle_enumerate: " + std::to_string(g.edge_count()) +
                            " edges exceeds the cap of " + std::to_string(max_edges));
    return OracleEnumerator(g).run();
}

}  // namespace dmatch
