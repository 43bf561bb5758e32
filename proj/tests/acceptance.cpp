// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dpg/experiments.hpp"
#include "dpg/io.hpp"
#include "dpg/isometry.hpp"
#include "dpg/metrics.hpp"
#include "dpg/structure.hpp"
#include "dpg/theorems.hpp"
#include "oracles.hpp"

using namespace dpg;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds,
            double budget_seconds) {
    bool pass = ok && seconds <= budget_seconds;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s (%.2fs, budget %.0fs)%s\n",
                pass ? "PASS" : "FAIL", criterion, what.c_str(), seconds,
                budget_seconds, ok ? "" : " [check failed]");
    std::fflush(stdout);
}

template <class F>
void run(int criterion, const std::string& what, double budget_seconds, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = f();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    report(criterion, what, ok, secs, budget_seconds);
}

std::vector<Graph> connected_corpus(int n_max) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= n_max; ++n)
        enumerate_labeled_connected(n, [&](const Graph& g) { corpus.push_back(g); });
    return corpus;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

bool criterion1() {
    // C5 not dp, failing exactly at order 4
    auto c5_rep = decide_dp(oracle::cycle(5));
    if (c5_rep.is_dp) return false;
    if (c5_rep.orders[3].status != OrderStatus::None) return false;

    Graph fig = oracle::pendant_c5();
    if (!decide_dp(fig).is_dp) return false;
    if (!is_simplicial(fig, 5)) return false;

    VertexSet cyc(6);
    for (int v = 0; v < 5; ++v) cyc.set(v);
    if (!is_isometric_subgraph(fig, cyc).isometric) return false;

    VertexSet no_attachment = fig.full_set();
    no_attachment.reset(4);
    auto chk = is_isometric_subgraph(fig, no_attachment);
    return !chk.isometric && chk.disconnected;
}

bool criterion2() {
    bool ok = true;
    auto check_chordal = [&](const Graph& g) {
        if (!decide_dp(g).is_dp) {
            ok = false;
            return;
        }
        auto elim = maximum_cardinality_search(g);
        if (!verify_elimination_ordering(g, elim).valid) {
            ok = false;
            return;
        }
        std::vector<int> deletion(elim.order.rbegin(), elim.order.rend());
        if (!verify_sequential_ordering(g, deletion)) ok = false;
    };
    std::vector<Graph> chordal_graphs;
    for (int n = 1; n <= 6; ++n)
        enumerate_labeled_connected(n, [&](const Graph& g) {
            if (is_chordal(g)) chordal_graphs.push_back(g);
        });
    for (uint64_t i = 0; i < 500; ++i)
        chordal_graphs.push_back(random_chordal(1 + int(i % 12), 90000 + i));
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(chordal_graphs.size()); ++i)
        check_chordal(chordal_graphs[size_t(i)]);
    return ok;
}

bool criterion3() {
    std::vector<Graph> in_class;
    for (int n = 5; n <= 7; ++n)
        enumerate_labeled_connected(n, [&](const Graph& g) {
            auto gi = girth(g);
            if (!gi || *gi < 5) return;
            auto bd = block_decomposition(g);
            for (int v = 0; v < n; ++v)
                if (!bd.articulation.test(v) && !vertex_in_cycle(bd, v)) return;
            in_class.push_back(g);
        });
    std::printf("  girth>=5 cover-condition graphs on 5..7 vertices: %zu\n",
                in_class.size());
    bool ok = !in_class.empty();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(in_class.size()); ++i) {
        const Graph& g = in_class[size_t(i)];
        // independent oracle: every (n-1)-subset checked by Floyd-Warshall
        if (oracle::find_isometric_of_order(g, g.order() - 1)) ok = false;
        // and the engine agrees
        if (find_isometric_subgraph_of_order(g, g.order() - 1).status !=
            OrderStatus::None)
            ok = false;
    }
    return ok && !decide_dp(oracle::petersen()).is_dp;
}

bool criterion4() {
    auto corpus = connected_corpus(6);
    if (!cross_validate_lemma1(corpus).empty()) return false;
    if (!cross_validate_theorem2(corpus).empty()) return false;
    // LITERAL level: literal implies proof on every vertex here (the apex is
    // itself a common neighbor of every pair in its neighborhood), so a clean
    // proof-level validation covers the literal level; verify the implication.
    bool ok = true;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(corpus.size()); ++i) {
        const Graph& g = corpus[size_t(i)];
        for (int v = 0; v < g.order(); ++v) {
            auto c = theorem2_applicable(g, v);
            if (c.literal && !c.proof) ok = false;
        }
    }
    return ok;
}

bool criterion5() {
    bool ok = true;
    auto corpus = connected_corpus(6);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < long(corpus.size()); ++i) {
        const Graph& g = corpus[size_t(i)];
        DistanceMatrix dg = all_pairs_distances_serial(g);
        for (int k = 1; k <= g.order(); ++k) {
            auto fast = find_isometric_subgraph_of_order(g, k, dg);
            auto slow = oracle::find_isometric_of_order(g, k);
            if ((fast.status == OrderStatus::Witness) != slow.has_value()) ok = false;
            if (fast.status == OrderStatus::Witness &&
                !oracle::isometric(g, fast.witness))
                ok = false;
        }
    }
    return ok;
}

bool criterion6() {
    ExperimentConfig cfg;
    cfg.n_min = 1;
    cfg.n_max = 7;
    ScanResult c1 = scan_conjecture1(cfg);
    // proven band must be spotless
    for (const auto& cex : c1.counterexamples)
        if (cex.find("\"band\":\"proven\"") != std::string::npos) return false;
    // conjectured-band counterexamples are published as-is but must re-verify
    for (const auto& cex : c1.counterexamples) {
        auto pos = cex.find("\"graph6\":\"");
        std::string g6 = cex.substr(pos + 10);
        g6 = g6.substr(0, g6.find('"'));
        Graph g = parse_graph6(g6);
        if (min_degree(g) <= g.order() / 2.0) return false;
        if (decide_dp(g).is_dp) return false;
    }

    ExperimentConfig cfg2;
    cfg2.n_min = 1;
    cfg2.n_max = 6;
    ScanResult c2 = scan_conjecture2(cfg2);
    for (const auto& cex : c2.counterexamples) {
        auto pos = cex.find("\"graph6\":\"");
        std::string g6 = cex.substr(pos + 10);
        g6 = g6.substr(0, g6.find('"'));
        Graph g = parse_graph6(g6);
        if (has_long_induced_cycle(g, 5).found) return false;
        if (decide_dp(g).is_dp) return false;
    }
    std::printf("  conj1 counterexamples: %zu, conj2 counterexamples: %zu\n",
                c1.counterexamples.size(), c2.counterexamples.size());
    return true;
}

bool criterion7() {
    ExperimentConfig cfg;
    cfg.samples = 100;  // two product pairs per sample -> 200 pairs
    cfg.seed = 20240601;
    ScanResult r = scan_products(cfg);
    return r.counterexamples.empty() && r.rows.size() == 200;
}

bool criterion8() {
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "dpg_acceptance_determinism";
    fs::remove_all(base);
    ExperimentConfig cfg;
    cfg.n_min = 2;
    cfg.n_max = 6;
    cfg.samples = 50;
    cfg.seed = 777;
    bool ok = true;
    for (auto scan : {+scan_random_dp_fraction, +scan_products, +scan_census}) {
        cfg.out_dir = (base / "a").string();
        scan(cfg).write(cfg);
        cfg.out_dir = (base / "b").string();
        scan(cfg).write(cfg);
    }
    for (const auto& entry : fs::directory_iterator(base / "a")) {
        auto other = base / "b" / entry.path().filename();
        if (slurp(entry.path()) != slurp(other)) ok = false;
    }
    ok = ok && !fs::is_empty(base / "a");
    fs::remove_all(base);
    return ok;
}

}  // namespace

int main() {
    run(1, "C5 / pendant-C5 paper examples exact", 1.0, criterion1);
    run(2, "chordal graphs dp with reverse-elimination sequential orderings",
        120.0, criterion2);
    run(3, "girth>=5 cover condition: no order n-1 isometric subgraph (n<=7)",
        600.0, criterion3);
    run(4, "simplicial / 4-cycle extension cross-validation (n<=6)", 300.0,
        criterion4);
    run(5, "dp engine equals all-subsets oracle (n<=6)", 600.0, criterion5);
    run(6, "degree-bound scans: proven band clean, conjecture lists re-verify",
        600.0, criterion6);
    run(7, "product claims over 200 seeded pairs", 300.0, criterion7);
    run(8, "seeded scans byte-identical across runs", 300.0, criterion8);
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
