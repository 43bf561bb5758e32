#pragma once

#include <optional>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

// Hop-count distances. Unreachable pairs hold the sentinel `unreachable()`,
// which is strictly greater than any achievable distance (and never fed to
// arithmetic).
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int order() const { return n_; }
    int unreachable() const { return n_; }
    int at(int u, int v) const { return d_[size_t(u) * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) < n_; }

    bool invariants_hold(const Graph& g) const;

private:
    int n_ = 0;
    std::vector<int> d_;
};

struct BlockDecomposition {
    VertexSet articulation;
    std::vector<VertexSet> blocks;  // maximal biconnected components
};

// Single-source BFS; row[v] = hop distance, or g.order() when unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

// BFS restricted to the vertex set `within`; entries outside `within` and
// unreached entries hold g.order(). Core primitive of isometry checks.
std::vector<int> bfs_distances_within(const Graph& g, int source,
                                      const VertexSet& within);

DistanceMatrix all_pairs_distances(const Graph& g);         // OpenMP over sources
DistanceMatrix all_pairs_distances_serial(const Graph& g);  // reference

bool is_connected(const Graph& g);
bool is_connected_within(const Graph& g, const VertexSet& s);

// Shortest cycle length; nullopt when acyclic. Min over BFS roots of the
// shortest cycle through the root (cross-edge bound), exact because every
// minimum cycle is detected from a vertex on it.
std::optional<int> girth(const Graph& g);

// Requires connected input.
BlockDecomposition block_decomposition(const Graph& g);

// True iff v lies on some cycle: some block containing v has >= 3 vertices.
bool vertex_in_cycle(const Graph& g, int v);
bool vertex_in_cycle(const BlockDecomposition& bd, int v);

}  // namespace dpg
