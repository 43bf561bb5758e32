// Compares the OpenMP kernels against their serial references: APSP over
// BFS sources and a dp census over an exhaustive corpus.
#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "dpg/experiments.hpp"
#include "dpg/graph.hpp"
#include "dpg/isometry.hpp"
#include "dpg/metrics.hpp"

using namespace dpg;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_apsp() {
    Graph g = erdos_renyi(1500, 0.01, 12345);
    auto t0 = std::chrono::steady_clock::now();
    DistanceMatrix serial = all_pairs_distances_serial(g);
    double ts = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    DistanceMatrix parallel = all_pairs_distances(g);
    double tp = seconds_since(t0);
    bool equal = true;
    for (int u = 0; u < g.order() && equal; ++u)
        for (int v = 0; v < g.order(); ++v)
            if (serial.at(u, v) != parallel.at(u, v)) {
                equal = false;
                break;
            }
    std::printf("APSP n=%d m=%lld: serial %.3fs, parallel %.3fs, speedup %.2fx, equal=%s\n",
                g.order(), g.size(), ts, tp, ts / tp, equal ? "yes" : "NO");
}

void bench_census() {
    std::vector<Graph> corpus;
    enumerate_labeled_connected(6, [&](const Graph& g) { corpus.push_back(g); });

    auto t0 = std::chrono::steady_clock::now();
    long dp_serial = 0;
    for (const Graph& g : corpus)
        if (decide_dp(g).is_dp) ++dp_serial;
    double ts = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    long dp_parallel = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : dp_parallel)
    for (long i = 0; i < long(corpus.size()); ++i)
        if (decide_dp(corpus[size_t(i)]).is_dp) ++dp_parallel;
    double tp = seconds_since(t0);

    std::printf("dp census n=6 (%zu graphs): serial %.3fs, parallel %.3fs, "
                "speedup %.2fx, counts %ld/%ld\n",
                corpus.size(), ts, tp, ts / tp, dp_serial, dp_parallel);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n");
#endif
    bench_apsp();
    bench_census();
    return 0;
}
