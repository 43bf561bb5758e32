#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpg/graph.hpp"

namespace dpg {

// All randomness flows through mt19937_64 (bit-exact per the C++ standard),
// so a seed pins the generated sequence across platforms and versions.
struct ExperimentConfig {
    uint64_t seed = 1;
    int n_min = 1;
    int n_max = 6;
    int samples = 100;
    double p = 0.5;
    bool exhaustive = false;   // evaluate all dp orders even after a failure
    int product_order_cap = 12;
    std::string out_dir;       // when set, scan writes rows.csv + summary.json
};

Graph erdos_renyi(int n, double p, uint64_t seed);

// Simplicial growth from K1: each new vertex is attached to a nonempty
// subset of some maximal clique, so the result is connected and chordal.
// growth_order, when supplied, receives the vertex addition sequence
// (a valid simplicial elimination ordering).
Graph random_chordal(int n, uint64_t seed, std::vector<int>* growth_order = nullptr);

// Every connected labeled graph on n vertices exactly once; returns the
// connected count. n <= 7 unless allow_large.
uint64_t enumerate_labeled_connected(int n,
                                     const std::function<void(const Graph&)>& fn,
                                     bool allow_large = false);

struct ScanRow {
    std::string graph6;
    int n = 0;
    long long m = 0;
    int min_degree = 0;
    int girth = -1;  // -1 = acyclic
    bool chordal = false;
    bool dp = false;
    bool sequentially_dp = false;
    bool thm3_applies = false;
};

struct ScanResult {
    std::string name;
    std::vector<ScanRow> rows;            // sorted by graph6
    std::vector<std::string> counterexamples;  // JSON objects, one per row
    std::string aggregates_json;
    int redraws = 0;  // rejected disconnected samples

    std::string rows_csv() const;
    std::string summary_json() const;
    // Writes rows.csv and summary.json under config.out_dir when set.
    void write(const ExperimentConfig& config) const;
};

// Minimum-degree scans: the proven band delta >= 2n/3 - 1 and the
// conjectured band delta > n/2, exhaustively over n_min..n_max.
ScanResult scan_conjecture1(const ExperimentConfig& config);

// Graphs with no induced cycle of length >= 5, exhaustively over
// n_min..n_max; conjecture says all are dp.
ScanResult scan_conjecture2(const ExperimentConfig& config);

// Fraction of connected p=config.p samples that are dp, per n, plus the
// diameter-2 subpopulation fraction.
ScanResult scan_random_dp_fraction(const ExperimentConfig& config);

// Product claims: dp G => lexicographic product with arbitrary H is dp;
// sequentially dp G, dp H => Cartesian product is dp.
ScanResult scan_products(const ExperimentConfig& config);

// Full per-graph property census over the exhaustive corpus.
ScanResult scan_census(const ExperimentConfig& config);

}  // namespace dpg
