#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dpg/graph.hpp"
#include "dpg/metrics.hpp"

namespace dpg {

struct IsometryCheck {
    bool isometric = false;
    bool disconnected = false;
    // violating pair in g's labels; set when !isometric (for disconnection,
    // an unreachable pair inside the candidate set)
    int a = -1, b = -1;
};

// True iff g[s] is connected and every pair in s keeps its g-distance.
IsometryCheck is_isometric_subgraph(const Graph& g, const VertexSet& s,
                                    const DistanceMatrix& dg);
IsometryCheck is_isometric_subgraph(const Graph& g, const VertexSet& s);

enum class OrderStatus { Witness, None, Unevaluated, Unknown };

struct OrderSearch {
    OrderStatus status = OrderStatus::Unknown;
    VertexSet witness;
    uint64_t nodes_explored = 0;
};

struct SearchOptions {
    // Exhaustive dp decisions above this order need allow_large; greedy
    // still runs and failures report Unknown instead of None.
    int exact_order_limit = 16;
    bool allow_large = false;
    // Budget for the exhaustive branch-and-prune (search tree nodes);
    // exceeded => Unknown. 0 = unlimited.
    uint64_t node_budget = 0;
};

// Search for an isometric subgraph with exactly k vertices. Greedy nested
// deletion first; exhaustive branch-and-prune over deletion sets on failure.
OrderSearch find_isometric_subgraph_of_order(const Graph& g, int k,
                                             const DistanceMatrix& dg,
                                             const SearchOptions& opts = {});
OrderSearch find_isometric_subgraph_of_order(const Graph& g, int k,
                                             const SearchOptions& opts = {});

struct OrderVerdict {
    int k = 0;
    OrderStatus status = OrderStatus::Unevaluated;
    VertexSet witness;
    uint64_t nodes_explored = 0;
    double seconds = 0.0;
};

struct DpReport {
    int n = 0;
    bool is_dp = false;
    bool decided = true;  // false when size guard left orders Unknown
    std::vector<OrderVerdict> orders;  // orders[k-1] is order k

    std::string to_json() const;
};

struct DpOptions {
    bool exhaustive_mode = false;  // evaluate all orders even after a NONE
    SearchOptions search;
};

// Exact dp decision. Orders evaluated n-1 downward; short-circuits on the
// first NONE unless exhaustive_mode.
DpReport decide_dp(const Graph& g, const DpOptions& opts = {});

struct SequentialOrdering {
    std::vector<int> deletion_order;  // v1..vn, deleted in this sequence
};

// Nested deletion sequence where every prefix-removal stays isometric in g,
// or nullopt after exhaustive backtracking.
std::optional<SequentialOrdering> find_sequential_ordering(const Graph& g);

// Verifies a claimed deletion order (each proper prefix removal isometric).
bool verify_sequential_ordering(const Graph& g, const std::vector<int>& order);

// Test-harness helper for the transitivity of isometric embedding:
// s2 <= s1 <= V(g); returns truth of "g[s1] isometric in g and g[s1][s2']
// isometric in g[s1] implies g[s2] isometric in g". Must always be true.
bool isometric_transitivity_check(const Graph& g, const VertexSet& s1,
                                  const VertexSet& s2);

}  // namespace dpg
