#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dpg/bitset.hpp"

namespace dpg {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1, bitset adjacency rows.
// Immutable after construction; build through the free functions below.
class Graph {
public:
    Graph() = default;

    int order() const { return n_; }
    long long size() const { return m_; }

    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    Bitset full_set() const { return Bitset::full(n_); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> e;
        e.reserve(size_t(m_));
        for (int u = 0; u < n_; ++u)
            adj_[u].for_each([&](int v) {
                if (u < v) e.emplace_back(u, v);
            });
        return e;
    }

    // Invariant check exposed for tests: symmetry, no loops, m consistent.
    bool invariants_hold() const;

private:
    friend Graph from_edge_list(int, const std::vector<std::pair<int, int>>&);
    friend Graph induced_subgraph(const Graph&, const VertexSet&, std::vector<int>*);
    friend Graph lexicographic_product(const Graph&, const Graph&);
    friend Graph cartesian_product(const Graph&, const Graph&);
    friend Graph from_adjacency(int, std::vector<Bitset>);

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
};

Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Internal-ish constructor: takes symmetric loop-free rows, computes m.
Graph from_adjacency(int n, std::vector<Bitset> adj);

// Re-indexed induced subgraph; index_map[i] = original label of vertex i.
Graph induced_subgraph(const Graph& g, const VertexSet& s,
                       std::vector<int>* index_map = nullptr);

// (a,x)~(b,y) iff a~b in g, or a=b and x~y in h. Vertex (a,x) -> a*|V(h)|+x.
Graph lexicographic_product(const Graph& g, const Graph& h);

// (a,x)~(b,y) iff (a=b and x~y) or (x=y and a~b). Same pair indexing.
Graph cartesian_product(const Graph& g, const Graph& h);

}  // namespace dpg
