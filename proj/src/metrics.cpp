#include "dpg/metrics.hpp"

#include <algorithm>
#include <stack>

namespace dpg {

bool DistanceMatrix::invariants_hold(const Graph& g) const {
    int n = n_;
    for (int u = 0; u < n; ++u) {
        if (at(u, u) != 0) return false;
        for (int v = 0; v < n; ++v) {
            if (at(u, v) != at(v, u)) return false;
            if ((at(u, v) == 1) != g.has_edge(u, v)) return false;
        }
    }
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (reachable(u, v) && reachable(v, w) &&
                    at(u, w) > at(u, v) + at(v, w))
                    return false;
    return true;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw GraphError("bfs source out of range");
    return bfs_distances_within(g, source, g.full_set());
}

std::vector<int> bfs_distances_within(const Graph& g, int source,
                                      const VertexSet& within) {
    int n = g.order();
    std::vector<int> dist(size_t(n), n);
    std::vector<int> queue;
    queue.reserve(size_t(n));
    dist[size_t(source)] = 0;
    queue.push_back(source);
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        Bitset nb = g.neighbors(u) & within;
        nb.for_each([&](int v) {
            if (dist[size_t(v)] == n) {
                dist[size_t(v)] = dist[size_t(u)] + 1;
                queue.push_back(v);
            }
        });
    }
    return dist;
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
    int n = g.order();
    std::vector<int> d(size_t(n) * n);
    VertexSet all = g.full_set();
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances_within(g, s, all);
        std::copy(row.begin(), row.end(), d.begin() + size_t(s) * n);
    }
    return DistanceMatrix(n, std::move(d));
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    int n = g.order();
    std::vector<int> d(size_t(n) * n);
    VertexSet all = g.full_set();
#pragma omp parallel for schedule(dynamic)
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances_within(g, s, all);
        std::copy(row.begin(), row.end(), d.begin() + size_t(s) * n);
    }
    return DistanceMatrix(n, std::move(d));
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto row = bfs_distances(g, 0);
    return std::all_of(row.begin(), row.end(),
                       [&](int x) { return x < g.order(); });
}

bool is_connected_within(const Graph& g, const VertexSet& s) {
    int start = s.next(0);
    if (start < 0) return false;
    auto row = bfs_distances_within(g, start, s);
    bool ok = true;
    s.for_each([&](int v) {
        if (row[size_t(v)] == g.order()) ok = false;
    });
    return ok;
}

std::optional<int> girth(const Graph& g) {
    int n = g.order();
    int best = n + 1;
    std::vector<int> dist(size_t(n), -1), parent(size_t(n), -1);
    std::vector<int> queue;
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[size_t(root)] = 0;
        parent[size_t(root)] = -1;
        queue.push_back(root);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            if (2 * dist[size_t(u)] >= best) break;
            g.neighbors(u).for_each([&](int v) {
                if (dist[size_t(v)] < 0) {
                    dist[size_t(v)] = dist[size_t(u)] + 1;
                    parent[size_t(v)] = u;
                    queue.push_back(v);
                } else if (v != parent[size_t(u)]) {
                    best = std::min(best, dist[size_t(u)] + dist[size_t(v)] + 1);
                }
            });
        }
    }
    if (best > n) return std::nullopt;
    return best;
}

namespace {

// Iterative biconnected-components DFS (Hopcroft–Tarjan with an edge stack).
struct BlockDfs {
    const Graph& g;
    std::vector<int> disc, low, parent;
    std::vector<std::pair<int, int>> edge_stack;
    BlockDecomposition out;
    int timer = 0;

    explicit BlockDfs(const Graph& gr)
        : g(gr),
          disc(size_t(gr.order()), -1),
          low(size_t(gr.order()), 0),
          parent(size_t(gr.order()), -1) {
        out.articulation = VertexSet(gr.order());
    }

    void pop_block(int u, int v) {
        VertexSet block(g.order());
        std::pair<int, int> top;
        do {
            top = edge_stack.back();
            edge_stack.pop_back();
            block.set(top.first);
            block.set(top.second);
        } while (top != std::make_pair(u, v));
        out.blocks.push_back(std::move(block));
    }

    void run(int root) {
        struct Frame {
            int v;
            int next = 0;  // next neighbor index to scan
            int children = 0;
        };
        std::vector<Frame> stack;
        disc[size_t(root)] = low[size_t(root)] = timer++;
        stack.push_back({root});
        while (!stack.empty()) {
            int u = stack.back().v;
            int w = g.neighbors(u).next(stack.back().next);
            if (w >= 0) {
                stack.back().next = w + 1;
                if (disc[size_t(w)] < 0) {
                    parent[size_t(w)] = u;
                    ++stack.back().children;
                    edge_stack.emplace_back(u, w);
                    disc[size_t(w)] = low[size_t(w)] = timer++;
                    stack.push_back({w});
                } else if (w != parent[size_t(u)] && disc[size_t(w)] < disc[size_t(u)]) {
                    edge_stack.emplace_back(u, w);
                    low[size_t(u)] = std::min(low[size_t(u)], disc[size_t(w)]);
                }
            } else {
                int children = stack.back().children;
                stack.pop_back();
                if (stack.empty()) {
                    if (children >= 2) out.articulation.set(u);
                    break;
                }
                int p = stack.back().v;
                low[size_t(p)] = std::min(low[size_t(p)], low[size_t(u)]);
                if (low[size_t(u)] >= disc[size_t(p)]) {
                    if (parent[size_t(p)] != -1) out.articulation.set(p);
                    pop_block(p, u);
                }
            }
        }
    }
};

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
    if (!is_connected(g))
        throw GraphError("block decomposition requires a connected graph");
    BlockDfs dfs(g);
    if (g.order() == 1) {
        VertexSet b(1);
        b.set(0);
        dfs.out.blocks.push_back(b);
        return std::move(dfs.out);
    }
    dfs.run(0);
    return std::move(dfs.out);
}

bool vertex_in_cycle(const BlockDecomposition& bd, int v) {
    for (const auto& b : bd.blocks)
        if (b.test(v) && b.count() >= 3) return true;
    return false;
}

bool vertex_in_cycle(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
    return vertex_in_cycle(block_decomposition(g), v);
}

}  // namespace dpg
