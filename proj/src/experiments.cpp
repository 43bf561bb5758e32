#include "dpg/experiments.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "dpg/io.hpp"
#include "dpg/isometry.hpp"
#include "dpg/metrics.hpp"
#include "dpg/structure.hpp"
#include "dpg/theorems.hpp"
#include "json.hpp"

namespace dpg {

namespace {

// include each edge iff the top 53 bits of a draw fall below p * 2^53
bool bernoulli(std::mt19937_64& rng, double p) {
    return (rng() >> 11) < uint64_t(p * 9007199254740992.0);
}

uint64_t bounded(std::mt19937_64& rng, uint64_t k) { return rng() % k; }

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) {
    return splitmix64(seed ^ splitmix64(a ^ splitmix64(b)));
}

Graph erdos_renyi_with(std::mt19937_64& rng, int n, double p) {
    std::vector<Bitset> adj(size_t(n), Bitset{n});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (bernoulli(rng, p)) {
                adj[size_t(i)].set(j);
                adj[size_t(j)].set(i);
            }
    return from_adjacency(n, std::move(adj));
}

Graph erdos_renyi_connected(std::mt19937_64& rng, int n, double p,
                            int* redraws) {
    while (true) {
        Graph g = erdos_renyi_with(rng, n, p);
        if (is_connected(g)) return g;
        if (redraws) ++*redraws;
    }
}

void bron_kerbosch(const Graph& g, Bitset r, Bitset p, Bitset x,
                   std::vector<Bitset>& out) {
    if (p.none() && x.none()) {
        out.push_back(r);
        return;
    }
    for (int v = p.next(0); v >= 0; v = p.next(v + 1)) {
        Bitset r2 = r;
        r2.set(v);
        bron_kerbosch(g, r2, p & g.neighbors(v), x & g.neighbors(v), out);
        p.reset(v);
        x.set(v);
    }
}

std::vector<Bitset> maximal_cliques(const Graph& g) {
    std::vector<Bitset> out;
    bron_kerbosch(g, Bitset(g.order()), g.full_set(), Bitset(g.order()), out);
    return out;
}

}  // namespace

Graph erdos_renyi(int n, double p, uint64_t seed) {
    if (n < 1) throw GraphError("n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw GraphError("p must lie in [0,1]");
    std::mt19937_64 rng(seed);
    return erdos_renyi_with(rng, n, p);
}

Graph random_chordal(int n, uint64_t seed, std::vector<int>* growth_order) {
    if (n < 1) throw GraphError("n must be positive");
    std::mt19937_64 rng(seed);
    std::vector<Bitset> adj(size_t(n), Bitset{n});
    for (int i = 1; i < n; ++i) {
        // current graph is on vertices 0..i-1
        Graph cur = from_adjacency(i, [&] {
            std::vector<Bitset> a(size_t(i), Bitset{i});
            for (int u = 0; u < i; ++u)
                for (int v = 0; v < i; ++v)
                    if (v != u && adj[size_t(u)].test(v)) a[size_t(u)].set(v);
            return a;
        }());
        auto cliques = maximal_cliques(cur);
        const Bitset& clique = cliques[bounded(rng, cliques.size())];
        auto members = clique.to_vector();
        uint64_t mask = 1 + bounded(rng, (uint64_t(1) << members.size()) - 1);
        for (size_t b = 0; b < members.size(); ++b)
            if (mask & (uint64_t(1) << b)) {
                adj[size_t(i)].set(members[b]);
                adj[size_t(members[b])].set(i);
            }
    }
    if (growth_order) {
        growth_order->resize(size_t(n));
        for (int i = 0; i < n; ++i) (*growth_order)[size_t(i)] = i;
    }
    return from_adjacency(n, std::move(adj));
}

uint64_t enumerate_labeled_connected(int n,
                                     const std::function<void(const Graph&)>& fn,
                                     bool allow_large) {
    if (n < 1) throw GraphError("n must be positive");
    if (n > 7 && !allow_large)
        throw GraphError("enumeration above n=7 requires an explicit override");
    int pairs = n * (n - 1) / 2;
    uint64_t count = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
        std::vector<Bitset> adj(size_t(n), Bitset{n});
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask & (uint64_t(1) << bit)) {
                    adj[size_t(i)].set(j);
                    adj[size_t(j)].set(i);
                }
        Graph g = from_adjacency(n, std::move(adj));
        if (!is_connected(g)) continue;
        ++count;
        fn(g);
    }
    return count;
}

namespace {

ScanRow make_row(const Graph& g, const DpOptions& dp_opts) {
    ScanRow row;
    row.graph6 = to_graph6(g);
    row.n = g.order();
    row.m = g.size();
    row.min_degree = min_degree(g);
    auto gi = girth(g);
    row.girth = gi ? *gi : -1;
    row.chordal = is_chordal(g);
    row.dp = decide_dp(g, dp_opts).is_dp;
    row.sequentially_dp = find_sequential_ordering(g).has_value();
    row.thm3_applies = theorem3_predicts_not_dp(g).thm3_applies;
    return row;
}

void sort_rows(std::vector<ScanRow>& rows) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const ScanRow& a, const ScanRow& b) {
                         return a.graph6 < b.graph6;
                     });
}

// Parallel row/counterexample computation over a batch of graphs; merge is
// deterministic because everything is re-sorted afterwards.
template <class Fn>
void process_batch(const std::vector<Graph>& graphs, ScanResult& out, Fn&& fn) {
#pragma omp parallel
    {
        std::vector<ScanRow> rows;
        std::vector<std::string> cex;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < long(graphs.size()); ++i)
            fn(graphs[size_t(i)], rows, cex);
#pragma omp critical
        {
            out.rows.insert(out.rows.end(), rows.begin(), rows.end());
            out.counterexamples.insert(out.counterexamples.end(), cex.begin(),
                                       cex.end());
        }
    }
}

void finalize(ScanResult& out, nlohmann::json aggregates) {
    sort_rows(out.rows);
    std::sort(out.counterexamples.begin(), out.counterexamples.end());
    aggregates["rows"] = out.rows.size();
    aggregates["counterexamples"] = out.counterexamples.size();
    out.aggregates_json = aggregates.dump();
}

}  // namespace

std::string ScanResult::rows_csv() const {
    std::ostringstream csv;
    csv << "graph6,n,m,min_degree,girth,chordal,dp,sequentially_dp,thm3_applies\n";
    for (const auto& r : rows) {
        csv << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.min_degree << ',';
        if (r.girth < 0)
            csv << "acyclic";
        else
            csv << r.girth;
        csv << ',' << (r.chordal ? 1 : 0) << ',' << (r.dp ? 1 : 0) << ','
            << (r.sequentially_dp ? 1 : 0) << ',' << (r.thm3_applies ? 1 : 0)
            << '\n';
    }
    return csv.str();
}

std::string ScanResult::summary_json() const {
    nlohmann::json j;
    j["scan"] = name;
    j["aggregates"] = nlohmann::json::parse(
        aggregates_json.empty() ? "{}" : aggregates_json);
    j["redraws"] = redraws;
    nlohmann::json cex = nlohmann::json::array();
    for (const auto& c : counterexamples) cex.push_back(nlohmann::json::parse(c));
    j["counterexamples"] = std::move(cex);
    return j.dump(2) + "\n";
}

void ScanResult::write(const ExperimentConfig& config) const {
    if (config.out_dir.empty()) return;
    std::filesystem::create_directories(config.out_dir);
    std::ofstream(std::filesystem::path(config.out_dir) / (name + "_rows.csv"))
        << rows_csv();
    std::ofstream(std::filesystem::path(config.out_dir) / (name + "_summary.json"))
        << summary_json();
}

ScanResult scan_conjecture1(const ExperimentConfig& config) {
    ScanResult out;
    out.name = "conj1";
    DpOptions dp_opts;
    dp_opts.exhaustive_mode = config.exhaustive;
    nlohmann::json per_n = nlohmann::json::array();
    for (int n = std::max(1, config.n_min); n <= config.n_max; ++n) {
        std::vector<Graph> band;
        enumerate_labeled_connected(n, [&](const Graph& g) {
            int d = min_degree(g);
            bool proven = d >= 2.0 * n / 3.0 - 1.0 - 1e-9;
            bool conjectured = d > n / 2.0;
            if (proven || conjectured) band.push_back(g);
        });
        size_t before = out.counterexamples.size();
        process_batch(band, out, [&](const Graph& g, std::vector<ScanRow>& rows,
                                     std::vector<std::string>& cex) {
            ScanRow row = make_row(g, dp_opts);
            int d = row.min_degree;
            bool proven = d >= 2.0 * n / 3.0 - 1.0 - 1e-9;
            if (!row.dp) {
                nlohmann::json c;
                c["claim"] = proven ? "delta >= 2n/3 - 1 forces dp"
                                    : "conjecture: delta > n/2 implies dp";
                c["band"] = proven ? "proven" : "conjectured";
                c["graph6"] = row.graph6;
                c["n"] = n;
                c["min_degree"] = d;
                cex.push_back(c.dump());
            }
            rows.push_back(std::move(row));
        });
        per_n.push_back({{"n", n},
                         {"scanned", band.size()},
                         {"counterexamples", out.counterexamples.size() - before}});
    }
    finalize(out, {{"per_n", std::move(per_n)}});
    return out;
}

ScanResult scan_conjecture2(const ExperimentConfig& config) {
    ScanResult out;
    out.name = "conj2";
    DpOptions dp_opts;
    dp_opts.exhaustive_mode = config.exhaustive;
    nlohmann::json per_n = nlohmann::json::array();
    for (int n = std::max(1, config.n_min); n <= config.n_max; ++n) {
        std::vector<Graph> in_class;
        enumerate_labeled_connected(n, [&](const Graph& g) {
            if (n < 5 || !has_long_induced_cycle(g, 5).found) in_class.push_back(g);
        });
        size_t before = out.counterexamples.size();
        process_batch(in_class, out, [&](const Graph& g, std::vector<ScanRow>& rows,
                                         std::vector<std::string>& cex) {
            ScanRow row = make_row(g, dp_opts);
            if (!row.dp) {
                nlohmann::json c;
                c["claim"] = "conjecture: no induced cycle of length >= 5 implies dp";
                c["graph6"] = row.graph6;
                c["n"] = n;
                cex.push_back(c.dump());
            }
            rows.push_back(std::move(row));
        });
        per_n.push_back({{"n", n},
                         {"scanned", in_class.size()},
                         {"counterexamples", out.counterexamples.size() - before}});
    }
    finalize(out, {{"per_n", std::move(per_n)}});
    return out;
}

ScanResult scan_random_dp_fraction(const ExperimentConfig& config) {
    ScanResult out;
    out.name = "random";
    DpOptions dp_opts;
    dp_opts.exhaustive_mode = config.exhaustive;
    nlohmann::json per_n = nlohmann::json::array();
    int total_redraws = 0;
    for (int n = std::max(1, config.n_min); n <= config.n_max; ++n) {
        long dp_count = 0, diam2_count = 0, diam2_dp_count = 0;
        int n_redraws = 0;
        std::vector<Graph> samples;
        samples.reserve(size_t(config.samples));
        for (int i = 0; i < config.samples; ++i) {
            std::mt19937_64 rng(derive_seed(config.seed, uint64_t(n), uint64_t(i)));
            samples.push_back(erdos_renyi_connected(rng, n, config.p, &n_redraws));
        }
#pragma omp parallel
        {
            std::vector<ScanRow> rows;
            long l_dp = 0, l_d2 = 0, l_d2dp = 0;
#pragma omp for schedule(dynamic) nowait
            for (long i = 0; i < long(samples.size()); ++i) {
                const Graph& g = samples[size_t(i)];
                ScanRow row = make_row(g, dp_opts);
                DistanceMatrix d = all_pairs_distances_serial(g);
                int diam = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = 0; v < n; ++v) diam = std::max(diam, d.at(u, v));
                if (row.dp) ++l_dp;
                if (diam <= 2) {
                    ++l_d2;
                    if (row.dp) ++l_d2dp;
                }
                rows.push_back(std::move(row));
            }
#pragma omp critical
            {
                out.rows.insert(out.rows.end(), rows.begin(), rows.end());
                dp_count += l_dp;
                diam2_count += l_d2;
                diam2_dp_count += l_d2dp;
            }
        }
        total_redraws += n_redraws;
        per_n.push_back(
            {{"n", n},
             {"samples", config.samples},
             {"redraws", n_redraws},
             {"dp_fraction", double(dp_count) / config.samples},
             {"diameter2_fraction", double(diam2_count) / config.samples},
             {"diameter2_dp_fraction",
              diam2_count ? double(diam2_dp_count) / diam2_count : 0.0}});
    }
    out.redraws = total_redraws;
    finalize(out, {{"per_n", std::move(per_n)}, {"p", config.p}});
    return out;
}

ScanResult scan_products(const ExperimentConfig& config) {
    ScanResult out;
    out.name = "products";
    DpOptions dp_opts;
    dp_opts.exhaustive_mode = config.exhaustive;
    if (config.product_order_cap < 8)
        throw GraphError("product order cap too small (need >= 8)");
    int lex_checked = 0, cart_checked = 0;
    int redraws = 0;

    struct Pair {
        Graph product;
        std::string claim;
        std::string g6_g, g6_h;
    };
    std::vector<Pair> pairs;

    for (int i = 0; i < config.samples; ++i) {
        std::mt19937_64 rng(derive_seed(config.seed, 0xA11CE, uint64_t(i)));
        // lexicographic claim: dp G (|G| >= 2), arbitrary H
        {
            int ng = 2 + int(bounded(rng, 3));
            int nh = 1 + int(bounded(rng, uint64_t(std::min(3, config.product_order_cap / ng))));
            if (ng * nh > config.product_order_cap)
                throw GraphError("product order cap exceeded");
            Graph g((erdos_renyi_connected(rng, ng, 0.5, &redraws)));
            while (!decide_dp(g).is_dp) {
                ++redraws;
                g = erdos_renyi_connected(rng, ng, 0.5, &redraws);
            }
            Graph h = erdos_renyi_with(rng, nh, 0.5);
            pairs.push_back({lexicographic_product(g, h),
                             "dp G implies G lex H dp", to_graph6(g), to_graph6(h)});
            ++lex_checked;
        }
        // Cartesian claim: sequentially dp G, dp H
        {
            int ng = 2 + int(bounded(rng, 3));
            int nh = 1 + int(bounded(rng, uint64_t(std::min(3, config.product_order_cap / ng))));
            Graph g((erdos_renyi_connected(rng, ng, 0.5, &redraws)));
            while (!find_sequential_ordering(g)) {
                ++redraws;
                g = erdos_renyi_connected(rng, ng, 0.5, &redraws);
            }
            Graph h((erdos_renyi_connected(rng, nh, 0.5, &redraws)));
            while (!decide_dp(h).is_dp) {
                ++redraws;
                h = erdos_renyi_connected(rng, nh, 0.5, &redraws);
            }
            pairs.push_back({cartesian_product(g, h),
                             "sequentially dp G, dp H implies G cart H dp",
                             to_graph6(g), to_graph6(h)});
            ++cart_checked;
        }
    }

#pragma omp parallel
    {
        std::vector<ScanRow> rows;
        std::vector<std::string> cex;
#pragma omp for schedule(dynamic) nowait
        for (long i = 0; i < long(pairs.size()); ++i) {
            const Pair& pr = pairs[size_t(i)];
            ScanRow row = make_row(pr.product, dp_opts);
            if (!row.dp) {
                nlohmann::json c;
                c["claim"] = pr.claim;
                c["graph6"] = row.graph6;
                c["factor_g"] = pr.g6_g;
                c["factor_h"] = pr.g6_h;
                cex.push_back(c.dump());
            }
            rows.push_back(std::move(row));
        }
#pragma omp critical
        {
            out.rows.insert(out.rows.end(), rows.begin(), rows.end());
            out.counterexamples.insert(out.counterexamples.end(), cex.begin(),
                                       cex.end());
        }
    }
    out.redraws = redraws;
    finalize(out, {{"lexicographic_pairs", lex_checked},
                   {"cartesian_pairs", cart_checked}});
    return out;
}

ScanResult scan_census(const ExperimentConfig& config) {
    ScanResult out;
    out.name = "census";
    DpOptions dp_opts;
    dp_opts.exhaustive_mode = config.exhaustive;
    nlohmann::json per_n = nlohmann::json::array();
    constexpr size_t kChunk = 16384;
    for (int n = std::max(1, config.n_min); n <= config.n_max; ++n) {
        long long connected = 0, dp_count = 0, chordal_count = 0, thm3_count = 0;
        std::vector<Graph> buf;
        auto flush = [&] {
            process_batch(buf, out, [&](const Graph& g, std::vector<ScanRow>& rows,
                                        std::vector<std::string>&) {
                ScanRow row = make_row(g, dp_opts);
#pragma omp atomic
                dp_count += row.dp ? 1 : 0;
#pragma omp atomic
                chordal_count += row.chordal ? 1 : 0;
#pragma omp atomic
                thm3_count += row.thm3_applies ? 1 : 0;
                rows.push_back(std::move(row));
            });
            buf.clear();
        };
        connected = (long long)enumerate_labeled_connected(n, [&](const Graph& g) {
            buf.push_back(g);
            if (buf.size() >= kChunk) flush();
        });
        flush();
        per_n.push_back({{"n", n},
                         {"connected", connected},
                         {"dp", dp_count},
                         {"chordal", chordal_count},
                         {"thm3_applies", thm3_count}});
    }
    finalize(out, {{"per_n", std::move(per_n)}});
    return out;
}

}  // namespace dpg
