#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "dpg/metrics.hpp"
#include "oracles.hpp"

using namespace dpg;

TEST_CASE("bfs distances on C5, the pendant graph and K1") {
    Graph c5 = oracle::cycle(5);
    for (int s = 0; s < 5; ++s) {
        auto row = bfs_distances(c5, s);
        std::vector<int> sorted = row;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{0, 1, 1, 2, 2});
        CHECK(row[size_t(s)] == 0);
    }

    Graph fig = oracle::pendant_c5();
    auto row = bfs_distances(fig, 5);  // pendant vertex
    CHECK(*std::max_element(row.begin(), row.end()) == 3);
    CHECK(row[2] == 3);
    CHECK(row[4] == 1);

    Graph k1 = from_edge_list(1, {});
    CHECK(bfs_distances(k1, 0) == std::vector<int>{0});
    CHECK_THROWS_AS(bfs_distances(k1, 1), GraphError);
}

TEST_CASE("all-pairs distances: P4, C5, disconnected pair of edges") {
    DistanceMatrix p4 = all_pairs_distances(oracle::path(4));
    int mx = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) mx = std::max(mx, p4.at(u, v));
    CHECK(mx == 3);

    DistanceMatrix c5 = all_pairs_distances(oracle::cycle(5));
    int at2 = 0;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            CHECK(c5.at(u, v) <= 2);
            if (c5.at(u, v) == 2) ++at2;
        }
    CHECK(at2 == 5);

    Graph two_edges = from_edge_list(4, {{0, 1}, {2, 3}});
    DistanceMatrix d = all_pairs_distances(two_edges);
    CHECK(!d.reachable(0, 2));
    CHECK(d.at(0, 2) == d.unreachable());
    CHECK(d.reachable(0, 1));
}

TEST_CASE("distance matrix invariants across the small corpus") {
    for (int n = 1; n <= 5; ++n)
        oracle::for_each_labeled(n, [](const Graph& g) {
            CHECK(all_pairs_distances_serial(g).invariants_hold(g));
        });
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (rng() % 2) e.emplace_back(i, j);
        CHECK(all_pairs_distances(from_edge_list(8, e)).invariants_hold(
            from_edge_list(8, e)));
    }
}

TEST_CASE("parallel APSP matches the serial reference") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + int(rng() % 40);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 4 == 0) e.emplace_back(i, j);
        Graph g = from_edge_list(n, e);
        DistanceMatrix a = all_pairs_distances(g);
        DistanceMatrix b = all_pairs_distances_serial(g);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) REQUIRE(a.at(u, v) == b.at(u, v));
    }
}

TEST_CASE("connectivity") {
    CHECK(is_connected(from_edge_list(1, {})));
    CHECK(is_connected(oracle::cycle(5)));
    CHECK(!is_connected(from_edge_list(2, {})));
}

TEST_CASE("girth examples") {
    CHECK(*girth(oracle::cycle(5)) == 5);
    CHECK(!girth(oracle::path(6)).has_value());
    CHECK(!girth(oracle::star(4)).has_value());
    CHECK(*girth(oracle::petersen()) == 5);
    CHECK(*oracle::girth(oracle::petersen()) == 5);
    CHECK(*girth(oracle::complete(4)) == 3);
}

TEST_CASE("girth agrees with the enumeration oracle") {
    for (int n = 1; n <= 6; ++n)
        oracle::for_each_labeled(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            auto fast = girth(g);
            auto slow = oracle::girth(g);
            REQUIRE(fast.has_value() == slow.has_value());
            if (fast) REQUIRE(*fast == *slow);
        });
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 3 + int(rng() % 8);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) e.emplace_back(i, j);
        Graph g = from_edge_list(n, e);
        auto fast = girth(g);
        auto slow = oracle::girth(g);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) REQUIRE(*fast == *slow);
    }
}

TEST_CASE("block decomposition of the pendant graph, C5 and P4") {
    Graph fig = oracle::pendant_c5();
    auto bd = block_decomposition(fig);
    CHECK(bd.articulation.to_vector() == std::vector<int>{4});
    REQUIRE(bd.blocks.size() == 2);
    int sizes[2] = {bd.blocks[0].count(), bd.blocks[1].count()};
    CHECK(std::max(sizes[0], sizes[1]) == 5);
    CHECK(std::min(sizes[0], sizes[1]) == 2);

    auto bd_c5 = block_decomposition(oracle::cycle(5));
    CHECK(bd_c5.articulation.none());
    CHECK(bd_c5.blocks.size() == 1);

    auto bd_p4 = block_decomposition(oracle::path(4));
    CHECK(bd_p4.articulation.to_vector() == std::vector<int>{1, 2});

    CHECK_THROWS_AS(block_decomposition(from_edge_list(2, {})), GraphError);
}

TEST_CASE("blocks partition the edges; pairwise intersections are articulation points") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 7);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) e.emplace_back(i, j);
        Graph g = from_edge_list(n, e);
        if (!is_connected(g)) continue;
        auto bd = block_decomposition(g);
        for (auto [u, v] : g.edges()) {
            int holders = 0;
            for (const auto& b : bd.blocks)
                if (b.test(u) && b.test(v)) ++holders;
            REQUIRE(holders == 1);
        }
        for (size_t i = 0; i < bd.blocks.size(); ++i)
            for (size_t j = i + 1; j < bd.blocks.size(); ++j) {
                Bitset inter = bd.blocks[i] & bd.blocks[j];
                REQUIRE(inter.count() <= 1);
                inter.for_each([&](int v) { REQUIRE(bd.articulation.test(v)); });
            }
    }
}

TEST_CASE("articulation points match the removal oracle up to n=6, sampled at n=8") {
    for (int n = 2; n <= 6; ++n)
        oracle::for_each_labeled(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            auto bd = block_decomposition(g);
            for (int v = 0; v < g.order(); ++v)
                REQUIRE(bd.articulation.test(v) == oracle::is_articulation(g, v));
        });
    std::mt19937_64 rng(37);
    int done = 0;
    while (done < 100) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                if (rng() % 4 == 0) e.emplace_back(i, j);
        Graph g = from_edge_list(8, e);
        if (!is_connected(g)) continue;
        ++done;
        auto bd = block_decomposition(g);
        for (int v = 0; v < 8; ++v)
            REQUIRE(bd.articulation.test(v) == oracle::is_articulation(g, v));
    }
}

TEST_CASE("vertex_in_cycle") {
    Graph c5 = oracle::cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(vertex_in_cycle(c5, v));

    Graph fig = oracle::pendant_c5();
    CHECK(!vertex_in_cycle(fig, 5));
    CHECK(vertex_in_cycle(fig, 4));

    Graph k13 = oracle::star(3);
    CHECK(!vertex_in_cycle(k13, 0));
    CHECK_THROWS_AS(vertex_in_cycle(k13, 9), GraphError);
}

TEST_CASE("every vertex is a cut vertex, on a cycle, or only on bridges") {
    std::mt19937_64 rng(41);
    int done = 0;
    while (done < 200) {
        int n = 2 + int(rng() % 6);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 3 == 0) e.emplace_back(i, j);
        Graph g = from_edge_list(n, e);
        if (!is_connected(g)) continue;
        ++done;
        auto bd = block_decomposition(g);
        for (int v = 0; v < n; ++v) {
            bool cut = oracle::is_articulation(g, v);
            bool cyc = vertex_in_cycle(bd, v);
            if (cut || cyc) continue;
            // remaining case: all incident edges are bridges (2-vertex blocks)
            for (const auto& b : bd.blocks)
                if (b.test(v)) REQUIRE(b.count() == 2);
        }
    }
}
