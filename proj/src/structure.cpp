#include "dpg/structure.hpp"

#include <algorithm>

#include "dpg/metrics.hpp"

namespace dpg {

bool is_simplicial(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex out of range");
    const Bitset& nb = g.neighbors(v);
    for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) {
        Bitset rest = nb;
        rest.reset(u);
        if (!rest.is_subset_of(g.neighbors(u))) return false;
    }
    return true;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet s(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (is_simplicial(g, v)) s.set(v);
    return s;
}

EliminationOrdering maximum_cardinality_search(const Graph& g) {
    if (!is_connected(g)) throw GraphError("MCS requires a connected graph");
    int n = g.order();
    std::vector<int> weight(size_t(n), 0);
    VertexSet visited(n);
    EliminationOrdering o;
    o.order.reserve(size_t(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (visited.test(v)) continue;
            if (best < 0 || weight[size_t(v)] > weight[size_t(best)]) best = v;
        }
        visited.set(best);
        o.order.push_back(best);
        g.neighbors(best).for_each([&](int u) {
            if (!visited.test(u)) ++weight[size_t(u)];
        });
    }
    return o;
}

EliminationCheck verify_elimination_ordering(const Graph& g,
                                             const EliminationOrdering& o) {
    int n = g.order();
    if (int(o.order.size()) != n) throw GraphError("ordering is not a permutation");
    VertexSet seen(n);
    for (int v : o.order) {
        if (v < 0 || v >= n || seen.test(v))
            throw GraphError("ordering is not a permutation");
        seen.set(v);
    }
    VertexSet prefix(n);
    for (int j = 0; j < n; ++j) {
        int v = o.order[size_t(j)];
        prefix.set(v);
        // v simplicial in g[prefix]: earlier neighbors pairwise adjacent
        Bitset nb = g.neighbors(v) & prefix;
        for (int u = nb.next(0); u >= 0; u = nb.next(u + 1)) {
            Bitset rest = nb;
            rest.reset(u);
            if (!rest.is_subset_of(g.neighbors(u)))
                return {false, j};
        }
    }
    return {true, -1};
}

bool is_chordal(const Graph& g) {
    return verify_elimination_ordering(g, maximum_cardinality_search(g)).valid;
}

namespace {

struct CycleDfs {
    const Graph& g;
    int min_len;
    // chordless path grown from its minimum vertex path.front(); candidates
    // are restricted above that minimum so each cycle is tried once
    std::vector<int> path;
    Bitset on_path;
    std::vector<int> result;

    CycleDfs(const Graph& gr, int ml) : g(gr), min_len(ml), on_path(gr.order()) {}

    bool extend() {
        int s = path.front();
        int last = path.back();
        for (int v = g.neighbors(last).next(s + 1); v >= 0;
             v = g.neighbors(last).next(v + 1)) {
            if (on_path.test(v)) continue;
            // chordless: v may touch the path only at `last` (and possibly s)
            bool chord = false;
            for (size_t i = 1; i + 1 < path.size(); ++i)
                if (g.has_edge(v, path[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (path.size() >= 2 && g.has_edge(v, s)) {
                if (int(path.size()) + 1 >= min_len) {
                    result = path;
                    result.push_back(v);
                    return true;
                }
                continue;  // closing early; longer cycles through v have a chord
            }
            path.push_back(v);
            on_path.set(v);
            if (extend()) return true;
            on_path.reset(v);
            path.pop_back();
        }
        return false;
    }
};

}  // namespace

InducedCycleSearch has_long_induced_cycle(const Graph& g, int min_len) {
    if (min_len < 4) throw GraphError("min_len must be at least 4");
    InducedCycleSearch res;
    for (int s = 0; s < g.order(); ++s) {
        CycleDfs dfs(g, min_len);
        dfs.path.push_back(s);
        dfs.on_path.set(s);
        if (dfs.extend()) {
            res.found = true;
            res.cycle = std::move(dfs.result);
            return res;
        }
    }
    return res;
}

int min_degree(const Graph& g) {
    if (g.order() == 0) throw GraphError("empty graph");
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

}  // namespace dpg
