#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dpg/experiments.hpp"
#include "dpg/io.hpp"
#include "dpg/isometry.hpp"
#include "dpg/metrics.hpp"
#include "dpg/structure.hpp"
#include "dpg/theorems.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

bool parse_range(const std::string& text, int& lo, int& hi) {
    auto dash = text.find('-');
    try {
        if (dash == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dash));
            hi = std::stoi(text.substr(dash + 1));
        }
    } catch (...) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

int run_analyze(const std::string& input, const std::string& dot_path,
                const std::string& json_path) {
    dpg::Graph g = dpg::load_graph(input);
    if (!dpg::is_connected(g)) {
        std::cerr << "error: input graph is disconnected\n";
        return kExitInputError;
    }
    auto diag = dpg::theorem3_predicts_not_dp(g);
    auto report = dpg::decide_dp(g);
    auto seq = dpg::find_sequential_ordering(g);

    std::cout << "graph6: " << dpg::to_graph6(g) << "\n";
    std::cout << "n: " << g.order() << "  m: " << g.size()
              << "  min_degree: " << dpg::min_degree(g) << "\n";
    std::cout << "girth: ";
    if (diag.girth)
        std::cout << *diag.girth << "\n";
    else
        std::cout << "acyclic\n";
    std::cout << "chordal: " << (diag.chordal ? "yes" : "no") << "\n";
    std::cout << "simplicial vertices:";
    diag.simplicial.for_each([](int v) { std::cout << ' ' << v; });
    std::cout << "\narticulation points:";
    diag.articulation.for_each([](int v) { std::cout << ' ' << v; });
    std::cout << "\ndp: " << (report.is_dp ? "yes" : "no");
    if (!report.decided) std::cout << " (undecided orders present)";
    std::cout << "\n";
    for (const auto& v : report.orders) {
        if (v.status == dpg::OrderStatus::None)
            std::cout << "  order " << v.k << ": no isometric subgraph\n";
    }
    if (seq) {
        std::cout << "sequentially dp: yes, deletion order:";
        for (int v : seq->deletion_order) std::cout << ' ' << v;
        std::cout << "\n";
    } else {
        std::cout << "sequentially dp: no\n";
    }
    std::cout << "girth criterion (not-dp when girth >= 5 and every vertex "
                 "cut-or-in-cycle): "
              << (diag.thm3_applies ? "applies" : "does not apply") << "\n";

    if (!json_path.empty()) {
        nlohmann::json j = nlohmann::json::parse(report.to_json());
        j["graph6"] = dpg::to_graph6(g);
        j["chordal"] = diag.chordal;
        j["girth"] = diag.girth ? nlohmann::json(*diag.girth) : nlohmann::json("acyclic");
        j["simplicial"] = diag.simplicial.to_vector();
        j["articulation"] = diag.articulation.to_vector();
        j["thm3_applies"] = diag.thm3_applies;
        if (seq) j["sequential_deletion_order"] = seq->deletion_order;
        std::ofstream(json_path) << j.dump(2) << "\n";
    }
    if (!dot_path.empty()) {
        // highlight the order n-1 witness when there is one
        const dpg::VertexSet* hl = nullptr;
        if (g.order() >= 2 &&
            report.orders[size_t(g.order() - 2)].status == dpg::OrderStatus::Witness)
            hl = &report.orders[size_t(g.order() - 2)].witness;
        std::ofstream(dot_path) << dpg::to_dot(g, hl);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distance-preserving graph toolkit"};
    app.require_subcommand(1);

    std::string input, json_path, dot_path;
    bool exhaustive = false;

    auto* analyze = app.add_subcommand("analyze", "full diagnostic report");
    analyze->add_option("input", input, "file or graph6 string")->required();
    analyze->add_option("--json", json_path, "write JSON report");
    analyze->add_option("--dot", dot_path, "write DOT with witness highlighted");

    auto* dp = app.add_subcommand("dp", "dp decision with per-order verdicts");
    dp->add_option("input", input, "file or graph6 string")->required();
    dp->add_flag("--exhaustive", exhaustive, "evaluate all orders past a failure");
    dp->add_option("--json", json_path, "write DpReport JSON");

    auto* chordal = app.add_subcommand("chordal", "chordality check");
    chordal->add_option("input", input, "file or graph6 string")->required();

    std::string scan_kind, range = "1-6", out_dir;
    dpg::ExperimentConfig config;
    auto* scan = app.add_subcommand("scan", "conjecture / census scans");
    scan->add_option("kind", scan_kind, "conj1|conj2|random|products|census")
        ->required();
    scan->add_option("--n", range, "order range, e.g. 6 or 4-7");
    scan->add_option("--samples", config.samples, "samples per order");
    scan->add_option("--seed", config.seed, "RNG seed");
    scan->add_option("--p", config.p, "edge probability");
    scan->add_option("--out", out_dir, "output directory for rows.csv/summary.json");
    scan->add_flag("--exhaustive", config.exhaustive, "exhaustive dp reports");

    std::string gen_kind;
    int gen_n = 8;
    uint64_t gen_seed = 1;
    double gen_p = 0.5;
    auto* gen = app.add_subcommand("gen", "seeded graph generators");
    gen->add_option("kind", gen_kind, "er|chordal")->required();
    gen->add_option("--n", gen_n, "order")->required();
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--p", gen_p, "edge probability (er)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*analyze) return run_analyze(input, dot_path, json_path);

        if (*dp) {
            dpg::Graph g = dpg::load_graph(input);
            dpg::DpOptions opts;
            opts.exhaustive_mode = exhaustive;
            auto report = dpg::decide_dp(g, opts);
            std::cout << (report.is_dp ? "dp" : (report.decided ? "not dp" : "unknown"))
                      << "\n";
            for (const auto& v : report.orders)
                if (v.status == dpg::OrderStatus::None)
                    std::cout << "  order " << v.k << ": none\n";
            if (!json_path.empty())
                std::ofstream(json_path) << report.to_json() << "\n";
            return kExitOk;
        }

        if (*chordal) {
            dpg::Graph g = dpg::load_graph(input);
            bool c = dpg::is_chordal(g);
            std::cout << (c ? "chordal" : "not chordal") << "\n";
            return kExitOk;
        }

        if (*scan) {
            if (!parse_range(range, config.n_min, config.n_max)) {
                std::cerr << "error: bad --n range\n";
                return kExitInputError;
            }
            config.out_dir = out_dir;
            dpg::ScanResult result;
            if (scan_kind == "conj1")
                result = dpg::scan_conjecture1(config);
            else if (scan_kind == "conj2")
                result = dpg::scan_conjecture2(config);
            else if (scan_kind == "random")
                result = dpg::scan_random_dp_fraction(config);
            else if (scan_kind == "products")
                result = dpg::scan_products(config);
            else if (scan_kind == "census")
                result = dpg::scan_census(config);
            else {
                std::cerr << "error: unknown scan kind '" << scan_kind << "'\n";
                return kExitInputError;
            }
            result.write(config);
            std::cout << result.summary_json();
            return result.counterexamples.empty() ? kExitOk : kExitCounterexample;
        }

        if (*gen) {
            dpg::Graph g;
            if (gen_kind == "er")
                g = dpg::erdos_renyi(gen_n, gen_p, gen_seed);
            else if (gen_kind == "chordal")
                g = dpg::random_chordal(gen_n, gen_seed);
            else {
                std::cerr << "error: unknown generator '" << gen_kind << "'\n";
                return kExitInputError;
            }
            std::cout << dpg::to_graph6(g) << "\n";
            return kExitOk;
        }
    } catch (const dpg::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}
