#include "dpg/theorems.hpp"

#include <algorithm>

#include "dpg/io.hpp"
#include "dpg/structure.hpp"
#include "json.hpp"

namespace dpg {

bool lemma1_applicable(const Graph& g, int v) { return is_simplicial(g, v); }

FourCycleCondition theorem2_applicable(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
    FourCycleCondition c{true, true};
    const Bitset& nb = g.neighbors(v);
    for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) {
        for (int w = nb.next(u + 1); w >= 0; w = nb.next(w + 1)) {
            if (g.has_edge(u, w)) continue;
            Bitset common = g.neighbors(u) & g.neighbors(w);
            // nonadjacent u,w on a 4-cycle <=> two distinct common neighbors
            if (common.count() < 2) c.literal = false;
            Bitset other = common;
            other.reset(v);
            if (other.none()) c.proof = false;
            if (!c.literal && !c.proof) return c;
        }
    }
    return c;
}

TheoremDiagnostics theorem3_predicts_not_dp(const Graph& g) {
    if (!is_connected(g))
        throw GraphError("theorem diagnostics require a connected graph");
    TheoremDiagnostics d;
    d.girth = girth(g);
    auto bd = block_decomposition(g);
    d.articulation = bd.articulation;
    d.in_cycle.resize(size_t(g.order()));
    for (int v = 0; v < g.order(); ++v)
        d.in_cycle[size_t(v)] = vertex_in_cycle(bd, v);
    d.simplicial = simplicial_vertices(g);
    d.chordal = is_chordal(g);
    d.per_vertex_thm2.resize(size_t(g.order()));
    for (int v = 0; v < g.order(); ++v)
        d.per_vertex_thm2[size_t(v)] = theorem2_applicable(g, v);

    d.thm3_applies = d.girth.has_value() && *d.girth >= 5;
    if (d.thm3_applies)
        for (int v = 0; v < g.order(); ++v)
            if (!d.articulation.test(v) && !d.in_cycle[size_t(v)]) {
                d.thm3_applies = false;
                break;
            }
    return d;
}

std::string Violation::to_json() const {
    nlohmann::json j;
    j["graph6"] = graph6;
    if (vertex >= 0) j["vertex"] = vertex;
    j["hypothesis"] = hypothesis;
    j["expected"] = expected;
    j["got"] = got;
    return j.dump();
}

namespace {

Graph delete_vertex(const Graph& g, int v) {
    VertexSet s = g.full_set();
    s.reset(v);
    return induced_subgraph(g, s);
}

bool dp_verdict(const Graph& g) { return decide_dp(g).is_dp; }

void sort_violations(std::vector<Violation>& v) {
    std::sort(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
        if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
        return a.vertex < b.vertex;
    });
}

template <class PerGraph>
std::vector<Violation> validate_corpus(const std::vector<Graph>& corpus,
                                       PerGraph&& check) {
    std::vector<Violation> all;
#pragma omp parallel
    {
        std::vector<Violation> local;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < long(corpus.size()); ++i) check(corpus[size_t(i)], local);
#pragma omp critical
        all.insert(all.end(), local.begin(), local.end());
    }
    sort_violations(all);
    return all;
}

}  // namespace

std::vector<Violation> cross_validate_lemma1(const std::vector<Graph>& corpus) {
    return validate_corpus(corpus, [](const Graph& g, std::vector<Violation>& out) {
        if (!is_connected(g) || g.order() < 2) return;
        DistanceMatrix dg = all_pairs_distances_serial(g);
        std::optional<bool> g_dp;  // computed lazily, shared across vertices
        for (int v = 0; v < g.order(); ++v) {
            if (!lemma1_applicable(g, v)) continue;
            // proof's key claim holds unconditionally for simplicial v
            VertexSet rest = g.full_set();
            rest.reset(v);
            if (!is_isometric_subgraph(g, rest, dg).isometric) {
                out.push_back({to_graph6(g), v, "v simplicial",
                               "V-{v} isometric in g", "not isometric"});
                continue;
            }
            Graph h = delete_vertex(g, v);
            if (!is_connected(h) || !dp_verdict(h)) continue;
            if (!g_dp) g_dp = dp_verdict(g);
            if (!*g_dp)
                out.push_back({to_graph6(g), v, "v simplicial and g-v dp",
                               "g dp", "g not dp"});
        }
    });
}

std::vector<Violation> cross_validate_theorem2(const std::vector<Graph>& corpus) {
    return validate_corpus(corpus, [](const Graph& g, std::vector<Violation>& out) {
        if (!is_connected(g) || g.order() < 2) return;
        std::optional<bool> g_dp;
        for (int v = 0; v < g.order(); ++v) {
            if (!theorem2_applicable(g, v).proof) continue;
            Graph h = delete_vertex(g, v);
            if (!is_connected(h) || !dp_verdict(h)) continue;
            if (!g_dp) g_dp = dp_verdict(g);
            if (!*g_dp)
                out.push_back({to_graph6(g), v,
                               "4-cycle condition (proof level) and g-v dp",
                               "g dp", "g not dp"});
        }
    });
}

std::vector<Violation> cross_validate_theorem3(const std::vector<Graph>& corpus) {
    return validate_corpus(corpus, [](const Graph& g, std::vector<Violation>& out) {
        if (!is_connected(g)) return;
        auto diag = theorem3_predicts_not_dp(g);
        if (!diag.thm3_applies) return;
        SearchOptions opts;
        auto res = find_isometric_subgraph_of_order(
            g, g.order() - 1, all_pairs_distances_serial(g), opts);
        if (res.status != OrderStatus::None)
            out.push_back({to_graph6(g), -1,
                           "girth >= 5, every vertex cut or in cycle",
                           "no isometric subgraph of order n-1",
                           res.status == OrderStatus::Witness ? "witness found"
                                                              : "undecided"});
    });
}

std::vector<Violation> cross_validate_corollary1(const std::vector<Graph>& corpus) {
    return validate_corpus(corpus, [](const Graph& g, std::vector<Violation>& out) {
        if (!is_connected(g) || !is_chordal(g)) return;
        if (!dp_verdict(g)) {
            out.push_back({to_graph6(g), -1, "g chordal", "g dp", "g not dp"});
            return;
        }
        // stronger form: the reverse of a simplicial elimination ordering is
        // a valid sequential deletion order
        auto elim = maximum_cardinality_search(g);
        std::vector<int> deletion(elim.order.rbegin(), elim.order.rend());
        if (!verify_sequential_ordering(g, deletion))
            out.push_back({to_graph6(g), -1, "g chordal",
                           "reverse elimination order sequentially dp",
                           "prefix deletion not isometric"});
    });
}

}  // namespace dpg
