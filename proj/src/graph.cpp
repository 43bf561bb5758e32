#include "dpg/graph.hpp"

namespace dpg {

bool Graph::invariants_hold() const {
    long long deg_sum = 0;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v].test(v)) return false;
        deg_sum += adj_[v].count();
        for (int u = adj_[v].next(0); u >= 0; u = adj_[v].next(u + 1))
            if (!adj_[u].test(v)) return false;
    }
    return deg_sum == 2 * m_;
}

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range: (" + std::to_string(u) +
                             "," + std::to_string(v) + ")");
        if (u == v)
            throw GraphError("self-loop rejected: (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        g.adj_[u].set(v);
        g.adj_[v].set(u);
    }
    long long deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += g.adj_[v].count();
    g.m_ = deg_sum / 2;
    return g;
}

Graph from_adjacency(int n, std::vector<Bitset> adj) {
    Graph g;
    g.n_ = n;
    g.adj_ = std::move(adj);
    long long deg_sum = 0;
    for (int v = 0; v < n; ++v) deg_sum += g.adj_[v].count();
    g.m_ = deg_sum / 2;
    return g;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s,
                       std::vector<int>* index_map) {
    if (s.none()) throw GraphError("induced subgraph of empty vertex set");
    std::vector<int> labels = s.to_vector();
    std::vector<int> pos(g.order(), -1);
    for (size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = int(i);

    int k = int(labels.size());
    std::vector<Bitset> adj(k, Bitset(k));
    for (int i = 0; i < k; ++i) {
        Bitset nb = g.neighbors(labels[i]) & s;
        nb.for_each([&](int v) { adj[i].set(pos[v]); });
    }
    if (index_map) *index_map = std::move(labels);
    return from_adjacency(k, std::move(adj));
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw GraphError("product factors must be nonempty");
    int ng = g.order(), nh = h.order(), n = ng * nh;
    std::vector<Bitset> adj(n, Bitset(n));
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x) {
            int u = a * nh + x;
            g.neighbors(a).for_each([&](int b) {
                for (int y = 0; y < nh; ++y) adj[u].set(b * nh + y);
            });
            h.neighbors(x).for_each([&](int y) { adj[u].set(a * nh + y); });
        }
    return from_adjacency(n, std::move(adj));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.order() == 0 || h.order() == 0)
        throw GraphError("product factors must be nonempty");
    int ng = g.order(), nh = h.order(), n = ng * nh;
    std::vector<Bitset> adj(n, Bitset(n));
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nh; ++x) {
            int u = a * nh + x;
            h.neighbors(x).for_each([&](int y) { adj[u].set(a * nh + y); });
            g.neighbors(a).for_each([&](int b) { adj[u].set(b * nh + x); });
        }
    return from_adjacency(n, std::move(adj));
}

}  // namespace dpg
