#include "dpg/isometry.hpp"

#include <chrono>
#include <cstring>
#include <string>
#include <unordered_set>

#include "json.hpp"

namespace dpg {

IsometryCheck is_isometric_subgraph(const Graph& g, const VertexSet& s,
                                    const DistanceMatrix& dg) {
    if (s.none()) throw GraphError("isometry check on empty vertex set");
    IsometryCheck res;
    int n = g.order();
    for (int u = s.next(0); u >= 0; u = s.next(u + 1)) {
        auto dist = bfs_distances_within(g, u, s);
        // disconnection first: fully visible from the first BFS already
        for (int v = s.next(u + 1); v >= 0; v = s.next(v + 1)) {
            if (dist[size_t(v)] == n) {
                res.disconnected = true;
                res.a = u;
                res.b = v;
                return res;
            }
        }
        for (int v = s.next(u + 1); v >= 0; v = s.next(v + 1)) {
            if (dist[size_t(v)] > dg.at(u, v)) {
                res.a = u;
                res.b = v;
                return res;
            }
        }
    }
    res.isometric = true;
    return res;
}

IsometryCheck is_isometric_subgraph(const Graph& g, const VertexSet& s) {
    return is_isometric_subgraph(g, s, all_pairs_distances_serial(g));
}

namespace {

// Greedy nested deletion: repeatedly remove the lowest-index vertex whose
// removal keeps the remainder isometric in g. Returns the reached set (size
// >= target) and the per-size witnesses along the way.
VertexSet greedy_shrink(const Graph& g, const DistanceMatrix& dg, int target,
                        std::vector<VertexSet>* trail = nullptr) {
    VertexSet s = g.full_set();
    while (s.count() > target) {
        bool deleted = false;
        for (int v = s.next(0); v >= 0; v = s.next(v + 1)) {
            VertexSet cand = s;
            cand.reset(v);
            if (is_isometric_subgraph(g, cand, dg).isometric) {
                s = cand;
                if (trail) trail->push_back(s);
                deleted = true;
                break;
            }
        }
        if (!deleted) break;
    }
    return s;
}

struct ExhaustiveSearch {
    const Graph& g;
    const DistanceMatrix& dg;
    uint64_t nodes = 0;
    uint64_t budget;
    bool budget_hit = false;
    VertexSet current;
    VertexSet found;

    ExhaustiveSearch(const Graph& gr, const DistanceMatrix& d, uint64_t b)
        : g(gr), dg(d), budget(b), current(gr.full_set()), found(0) {}

    // Distances among decided-retained vertices (index < bound, still in
    // current) can only grow under further deletions, so any excess over the
    // g-distance kills the whole branch.
    bool decided_pairs_ok(int bound) {
        int n = g.order();
        for (int u = current.next(0); u >= 0 && u < bound; u = current.next(u + 1)) {
            auto dist = bfs_distances_within(g, u, current);
            for (int v = current.next(u + 1); v >= 0 && v < bound;
                 v = current.next(v + 1)) {
                if (dist[size_t(v)] == n || dist[size_t(v)] > dg.at(u, v))
                    return false;
            }
        }
        return true;
    }

    // Returns true when a witness was found. idx = next undecided vertex,
    // del = deletions still required.
    bool run(int idx, int del) {
        ++nodes;
        if (budget && nodes > budget) {
            budget_hit = true;
            return false;
        }
        if (del == 0) {
            if (is_isometric_subgraph(g, current, dg).isometric) {
                found = current;
                return true;
            }
            return false;
        }
        if (g.order() - idx < del) return false;
        // retain idx first: witnesses found in lexicographic order
        if (run(idx + 1, del)) return true;
        if (budget_hit) return false;
        current.reset(idx);
        bool ok = decided_pairs_ok(idx + 1) && run(idx + 1, del - 1);
        current.set(idx);
        return ok;
    }
};

}  // namespace

OrderSearch find_isometric_subgraph_of_order(const Graph& g, int k,
                                             const DistanceMatrix& dg,
                                             const SearchOptions& opts) {
    int n = g.order();
    if (k < 1 || k > n) throw GraphError("order out of range");
    OrderSearch res;
    if (k == n) {
        if (!is_connected(g)) throw GraphError("dp search requires a connected graph");
        res.status = OrderStatus::Witness;
        res.witness = g.full_set();
        return res;
    }
    VertexSet s = greedy_shrink(g, dg, k);
    if (s.count() == k) {
        res.status = OrderStatus::Witness;
        res.witness = s;
        return res;
    }
    if (n > opts.exact_order_limit && !opts.allow_large) {
        res.status = OrderStatus::Unknown;
        return res;
    }
    ExhaustiveSearch search(g, dg, opts.node_budget);
    bool found = search.run(0, n - k);
    res.nodes_explored = search.nodes;
    if (found) {
        res.status = OrderStatus::Witness;
        res.witness = search.found;
    } else if (search.budget_hit) {
        res.status = OrderStatus::Unknown;
    } else {
        res.status = OrderStatus::None;
    }
    return res;
}

OrderSearch find_isometric_subgraph_of_order(const Graph& g, int k,
                                             const SearchOptions& opts) {
    return find_isometric_subgraph_of_order(g, k, all_pairs_distances_serial(g),
                                            opts);
}

DpReport decide_dp(const Graph& g, const DpOptions& opts) {
    if (!is_connected(g)) throw GraphError("dp decision requires a connected graph");
    int n = g.order();
    DistanceMatrix dg = all_pairs_distances_serial(g);

    DpReport rep;
    rep.n = n;
    rep.orders.resize(size_t(n));
    for (int k = 1; k <= n; ++k) rep.orders[size_t(k - 1)].k = k;

    rep.orders[size_t(n - 1)].status = OrderStatus::Witness;
    rep.orders[size_t(n - 1)].witness = g.full_set();

    // One greedy nested pass seeds witnesses for a suffix of orders.
    std::vector<VertexSet> trail;
    greedy_shrink(g, dg, 1, &trail);
    for (const auto& s : trail) {
        auto& v = rep.orders[size_t(s.count() - 1)];
        v.status = OrderStatus::Witness;
        v.witness = s;
    }

    bool found_none = false, found_unknown = false;
    for (int k = n - 1; k >= 1; --k) {
        auto& verdict = rep.orders[size_t(k - 1)];
        if (verdict.status == OrderStatus::Witness) continue;
        auto t0 = std::chrono::steady_clock::now();
        OrderSearch s = find_isometric_subgraph_of_order(g, k, dg, opts.search);
        verdict.seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        verdict.status = s.status;
        verdict.witness = s.witness;
        verdict.nodes_explored = s.nodes_explored;
        if (s.status == OrderStatus::None) {
            found_none = true;
            if (!opts.exhaustive_mode) break;
        } else if (s.status == OrderStatus::Unknown) {
            found_unknown = true;
        }
    }

    rep.is_dp = true;
    for (const auto& v : rep.orders)
        if (v.status != OrderStatus::Witness) rep.is_dp = false;
    rep.decided = found_none || !found_unknown;
    return rep;
}

namespace {

const char* status_name(OrderStatus s) {
    switch (s) {
        case OrderStatus::Witness: return "witness";
        case OrderStatus::None: return "none";
        case OrderStatus::Unevaluated: return "unevaluated";
        default: return "unknown";
    }
}

}  // namespace

std::string DpReport::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["is_dp"] = is_dp;
    j["decided"] = decided;
    nlohmann::json arr = nlohmann::json::array();
    uint64_t total_nodes = 0;
    double total_seconds = 0.0;
    for (const auto& v : orders) {
        nlohmann::json o;
        o["k"] = v.k;
        o["status"] = status_name(v.status);
        if (v.status == OrderStatus::Witness) o["vertices"] = v.witness.to_vector();
        arr.push_back(std::move(o));
        total_nodes += v.nodes_explored;
        total_seconds += v.seconds;
    }
    j["orders"] = std::move(arr);
    j["stats"] = {{"nodes_explored", total_nodes}, {"seconds", total_seconds}};
    return j.dump(2);
}

namespace {

struct SeqSearch {
    const Graph& g;
    const DistanceMatrix& dg;
    std::unordered_set<std::string> dead;  // sets with no completing suffix
    std::vector<int> order;

    SeqSearch(const Graph& gr, const DistanceMatrix& d) : g(gr), dg(d) {}

    static std::string key(const VertexSet& s) {
        const auto& w = s.words();
        return std::string(reinterpret_cast<const char*>(w.data()),
                           w.size() * sizeof(uint64_t));
    }

    bool run(const VertexSet& s) {
        if (s.count() == 1) {
            order.push_back(s.next(0));
            return true;
        }
        std::string k = key(s);
        if (dead.count(k)) return false;
        for (int v = s.next(0); v >= 0; v = s.next(v + 1)) {
            VertexSet cand = s;
            cand.reset(v);
            if (!is_isometric_subgraph(g, cand, dg).isometric) continue;
            order.push_back(v);
            if (run(cand)) return true;
            order.pop_back();
        }
        dead.insert(std::move(k));
        return false;
    }
};

}  // namespace

std::optional<SequentialOrdering> find_sequential_ordering(const Graph& g) {
    if (!is_connected(g))
        throw GraphError("sequential dp requires a connected graph");
    DistanceMatrix dg = all_pairs_distances_serial(g);
    SeqSearch search(g, dg);
    if (!search.run(g.full_set())) return std::nullopt;
    return SequentialOrdering{std::move(search.order)};
}

bool verify_sequential_ordering(const Graph& g, const std::vector<int>& order) {
    int n = g.order();
    if (int(order.size()) != n) return false;
    VertexSet seen(n);
    for (int v : order) {
        if (v < 0 || v >= n || seen.test(v)) return false;
        seen.set(v);
    }
    DistanceMatrix dg = all_pairs_distances_serial(g);
    VertexSet s = g.full_set();
    for (int i = 0; i + 1 < n; ++i) {
        s.reset(order[size_t(i)]);
        if (!is_isometric_subgraph(g, s, dg).isometric) return false;
    }
    return true;
}

bool isometric_transitivity_check(const Graph& g, const VertexSet& s1,
                                  const VertexSet& s2) {
    if (!s2.is_subset_of(s1)) throw GraphError("s2 must be a subset of s1");
    if (s2.none()) throw GraphError("empty s2");
    DistanceMatrix dg = all_pairs_distances_serial(g);
    bool a = is_isometric_subgraph(g, s1, dg).isometric;

    std::vector<int> labels;
    Graph h = induced_subgraph(g, s1, &labels);
    VertexSet s2_in_h(h.order());
    for (size_t i = 0; i < labels.size(); ++i)
        if (s2.test(labels[i])) s2_in_h.set(int(i));
    bool b = is_isometric_subgraph(h, s2_in_h).isometric;

    bool c = is_isometric_subgraph(g, s2, dg).isometric;
    return !(a && b) || c;
}

}  // namespace dpg
