#pragma once

#include <optional>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

struct EliminationOrdering {
    // order[0..n-1]; valid when order[j] is simplicial in the subgraph
    // induced by order[0..j] for every j.
    std::vector<int> order;
};

struct EliminationCheck {
    bool valid = false;
    int failing_position = -1;  // first j (0-based) that fails
};

bool is_simplicial(const Graph& g, int v);
VertexSet simplicial_vertices(const Graph& g);

// Maximum cardinality search; produces a valid simplicial elimination
// ordering whenever g is chordal. Ties broken by lowest vertex index.
EliminationOrdering maximum_cardinality_search(const Graph& g);

EliminationCheck verify_elimination_ordering(const Graph& g,
                                             const EliminationOrdering& o);

bool is_chordal(const Graph& g);

struct InducedCycleSearch {
    bool found = false;
    std::vector<int> cycle;  // witness, in cycle order
};

// Some induced (chordless) cycle with at least min_len vertices, min_len >= 4.
InducedCycleSearch has_long_induced_cycle(const Graph& g, int min_len);

int min_degree(const Graph& g);

}  // namespace dpg
