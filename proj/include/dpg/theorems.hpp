#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpg/graph.hpp"
#include "dpg/isometry.hpp"
#include "dpg/metrics.hpp"

namespace dpg {

// Distinguishes the literal statement of the 4-cycle relaxation from the
// condition its proof consumes (a common neighbor besides the apex).
struct FourCycleCondition {
    bool literal = false;  // every nonadjacent pair in N(v) lies on a 4-cycle
    bool proof = false;    // every such pair has a common neighbor z != v
};

struct TheoremDiagnostics {
    std::optional<int> girth;  // nullopt = acyclic
    VertexSet articulation;
    std::vector<bool> in_cycle;
    VertexSet simplicial;
    bool chordal = false;
    bool thm3_applies = false;  // girth >= 5 and every vertex cut-or-in-cycle
    std::vector<FourCycleCondition> per_vertex_thm2;
};

// Hypothesis of the simplicial-vertex extension lemma: v simplicial in g.
bool lemma1_applicable(const Graph& g, int v);

FourCycleCondition theorem2_applicable(const Graph& g, int v);

// Full diagnostics; when thm3_applies, g has no isometric subgraph of
// order n-1 and is therefore not dp.
TheoremDiagnostics theorem3_predicts_not_dp(const Graph& g);

struct Violation {
    std::string graph6;
    int vertex = -1;  // -1 when not applicable
    std::string hypothesis;
    std::string expected;
    std::string got;

    std::string to_json() const;
};

// Corpus cross-validations; each must return an empty list. Parallel per
// graph, merged sorted by graph6 encoding.
std::vector<Violation> cross_validate_lemma1(const std::vector<Graph>& corpus);
std::vector<Violation> cross_validate_theorem2(const std::vector<Graph>& corpus);
std::vector<Violation> cross_validate_theorem3(const std::vector<Graph>& corpus);
std::vector<Violation> cross_validate_corollary1(const std::vector<Graph>& corpus);

}  // namespace dpg
