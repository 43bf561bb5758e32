#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "dpg/isometry.hpp"
#include "dpg/structure.hpp"
#include "oracles.hpp"

using namespace dpg;

TEST_CASE("simplicial vertices") {
    Graph fig = oracle::pendant_c5();
    CHECK(is_simplicial(fig, 5));  // pendant: single neighbor
    CHECK(!is_simplicial(fig, 0));

    Graph c5 = oracle::cycle(5);
    for (int v = 0; v < 5; ++v) CHECK(!is_simplicial(c5, v));

    Graph k5 = oracle::complete(5);
    for (int v = 0; v < 5; ++v) CHECK(is_simplicial(k5, v));
    CHECK(simplicial_vertices(k5).count() == 5);

    CHECK_THROWS_AS(is_simplicial(c5, 5), GraphError);
}

TEST_CASE("maximum cardinality search orderings") {
    // trees are chordal: the MCS ordering must verify
    Graph tree = from_edge_list(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}});
    auto o = maximum_cardinality_search(tree);
    CHECK(verify_elimination_ordering(tree, o).valid);

    auto k4 = maximum_cardinality_search(oracle::complete(4));
    CHECK(verify_elimination_ordering(oracle::complete(4), k4).valid);

    // C4 has no simplicial vertex: every candidate ordering must fail
    auto c4 = maximum_cardinality_search(oracle::cycle(4));
    CHECK(!verify_elimination_ordering(oracle::cycle(4), c4).valid);

    CHECK_THROWS_AS(maximum_cardinality_search(from_edge_list(2, {})), GraphError);
}

TEST_CASE("verify_elimination_ordering edge cases") {
    Graph k1 = from_edge_list(1, {});
    CHECK(verify_elimination_ordering(k1, {{0}}).valid);

    // C5: all 120 orderings fail, earliest possible failure is at position 2
    // (0-based): a vertex can only have two nonadjacent prior neighbors once
    // three vertices are placed, e.g. ordering 1,4,0 fails at vertex 0.
    Graph c5 = oracle::cycle(5);
    std::vector<int> perm{0, 1, 2, 3, 4};
    bool saw_pos2 = false;
    do {
        auto chk = verify_elimination_ordering(c5, {perm});
        REQUIRE(!chk.valid);
        REQUIRE(chk.failing_position >= 2);
        if (chk.failing_position == 2) saw_pos2 = true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(saw_pos2);

    CHECK_THROWS_AS(verify_elimination_ordering(c5, {{0, 1, 2}}), GraphError);
    CHECK_THROWS_AS(verify_elimination_ordering(c5, {{0, 0, 1, 2, 3}}), GraphError);
}

TEST_CASE("chordality examples") {
    CHECK(!is_chordal(oracle::cycle(4)));
    CHECK(!is_chordal(oracle::cycle(5)));
    CHECK(!is_chordal(oracle::pendant_c5()));
    CHECK(is_chordal(oracle::path(6)));
    CHECK(is_chordal(oracle::star(4)));
    CHECK(is_chordal(oracle::complete(5)));
}

TEST_CASE("chordality agrees with the induced-cycle oracle on all connected graphs up to n=6") {
    for (int n = 1; n <= 6; ++n)
        oracle::for_each_labeled(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            bool fast = is_chordal(g);
            REQUIRE(fast == oracle::is_chordal(g));
            // cross-validation pair: chordal <=> no induced cycle of length >= 4
            if (g.order() >= 4)
                REQUIRE(fast == !has_long_induced_cycle(g, 4).found);
        });
}

TEST_CASE("long induced cycles") {
    auto c5 = has_long_induced_cycle(oracle::cycle(5), 5);
    REQUIRE(c5.found);
    CHECK(c5.cycle.size() == 5);

    CHECK(!has_long_induced_cycle(oracle::path(6), 4).found);
    CHECK(!has_long_induced_cycle(oracle::complete(6), 4).found);

    // Petersen has girth 5, so its shortest cycles are induced
    auto pet = has_long_induced_cycle(oracle::petersen(), 5);
    REQUIRE(pet.found);
    REQUIRE(pet.cycle.size() >= 5);
    // witness really is an induced cycle
    const Graph p = oracle::petersen();
    int len = int(pet.cycle.size());
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            REQUIRE(p.has_edge(pet.cycle[size_t(i)], pet.cycle[size_t(j)]) ==
                    consecutive);
        }

    CHECK(!has_long_induced_cycle(oracle::cycle(4), 5).found);
    CHECK_THROWS_AS(has_long_induced_cycle(p, 3), GraphError);
}

TEST_CASE("min_degree") {
    CHECK(min_degree(oracle::cycle(5)) == 2);
    CHECK(min_degree(oracle::complete(6)) == 5);
    CHECK(min_degree(oracle::pendant_c5()) == 1);
}

TEST_CASE("a simplicial vertex can be deleted isometrically (heart of the lemma)") {
    for (int n = 2; n <= 6; ++n)
        oracle::for_each_labeled(n, [](const Graph& g) {
            if (!is_connected(g)) return;
            for (int v = 0; v < g.order(); ++v) {
                if (!is_simplicial(g, v)) continue;
                VertexSet rest = g.full_set();
                rest.reset(v);
                REQUIRE(is_isometric_subgraph(g, rest).isometric);
            }
        });
}
