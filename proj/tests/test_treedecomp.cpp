#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rigidity/treedecomp.hpp"

using namespace rigidity;

namespace {

Multigraph k4() {
    Multigraph g(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
    return g;
}

Multigraph cycle(int n) {
    Multigraph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

bool witness_is_valid(const Multigraph& g, int k, const PartitionWitness& w) {
    std::vector<int> block_of(g.n, -1);
    for (std::size_t b = 0; b < w.blocks.size(); ++b)
        for (int v : w.blocks[b]) {
            if (v < 0 || v >= g.n || block_of[v] != -1) return false;
            block_of[v] = static_cast<int>(b);
        }
    for (int v = 0; v < g.n; ++v)
        if (block_of[v] == -1) return false;
    int cross = 0;
    for (const Edge& e : g.edges)
        if (block_of[e.u] != block_of[e.v]) ++cross;
    return cross == w.cross_edges &&
           w.required == k * (static_cast<int>(w.blocks.size()) - 1) && cross < w.required;
}

} // namespace

TEST_CASE("decompose: a tree with k=1 is returned whole") {
    Multigraph t(5);
    t.add_edge(0, 1);
    t.add_edge(1, 2);
    t.add_edge(1, 3);
    t.add_edge(3, 4);
    auto res = decompose_into_spanning_trees(t, 1);
    REQUIRE(res.ok());
    CHECK(res.decomposition->trees == std::vector<std::vector<int>>{{0, 1, 2, 3}});
    CHECK(verify_decomposition(*res.decomposition));
}

TEST_CASE("decompose: K4 splits into two spanning trees") {
    auto res = decompose_into_spanning_trees(k4(), 2);
    REQUIRE(res.ok());
    CHECK(verify_decomposition(*res.decomposition));
    CHECK(oracles::exhaustive_tree_partition(k4(), 2).has_value());
}

TEST_CASE("decompose: refusals and errors") {
    auto c4 = decompose_into_spanning_trees(cycle(4), 2);
    CHECK_FALSE(c4.ok());
    CHECK(*c4.refusal == RefusalReason::EdgeCount);

    Multigraph disc(4);
    disc.add_edge(0, 1);
    disc.add_edge(2, 3);
    auto d = decompose_into_spanning_trees(disc, 1);
    CHECK_FALSE(d.ok());
    CHECK(*d.refusal == RefusalReason::Disconnected);

    CHECK_THROWS_AS(decompose_into_spanning_trees(k4(), 0), std::invalid_argument);
}

TEST_CASE("decompose: infeasible edge counts come with a partition witness") {
    // Triple edge {0,1} plus a triangle on {1,2,3}: m = 6 = 2*(4-1) but the
    // pair {0,1} already holds three edges.
    Multigraph g(4);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    auto res = decompose_into_spanning_trees(g, 2);
    REQUIRE_FALSE(res.ok());
    CHECK(*res.refusal == RefusalReason::Infeasible);
    REQUIRE(res.witness.has_value());
    CHECK(witness_is_valid(g, 2, *res.witness));
    CHECK_FALSE(oracles::exhaustive_tree_partition(g, 2).has_value());
}

TEST_CASE("verify_decomposition: rejects bad certificates") {
    TreeDecomposition good;
    good.k = 2;
    good.graph = k4();
    auto res = decompose_into_spanning_trees(k4(), 2);
    REQUIRE(res.ok());
    CHECK(verify_decomposition(*res.decomposition));

    // Second set is the triangle on {1,2,3}: a cycle, not spanning.
    TreeDecomposition bad1;
    bad1.k = 2;
    bad1.graph = k4();
    bad1.trees = {{0, 1, 2}, {3, 4, 5}};
    CHECK_FALSE(verify_decomposition(bad1));

    // Overlapping sets sharing edge 0.
    TreeDecomposition bad2;
    bad2.k = 2;
    bad2.graph = k4();
    bad2.trees = {{0, 1, 2}, {0, 4, 5}};
    CHECK_FALSE(verify_decomposition(bad2));
}

TEST_CASE("decompose: deterministic") {
    Multigraph g = k4();
    auto a = decompose_into_spanning_trees(g, 2);
    auto b = decompose_into_spanning_trees(g, 2);
    REQUIRE(a.ok());
    REQUIRE(b.ok());
    CHECK(a.decomposition->trees == b.decomposition->trees);
}

TEST_CASE("decompose: matches exhaustive search on all small multigraphs") {
    for (int k = 2; k <= 3; ++k) {
        for (int n = 2; n <= 4; ++n) {
            int m = k * (n - 1);
            for (const Multigraph& g : oracles::connected_multigraph_classes(n, m)) {
                auto fast = decompose_into_spanning_trees(g, k);
                auto slow = oracles::exhaustive_tree_partition(g, k);
                REQUIRE(fast.ok() == slow.has_value());
                if (fast.ok())
                    CHECK(verify_decomposition(*fast.decomposition));
                else {
                    REQUIRE(*fast.refusal == RefusalReason::Infeasible);
                    REQUIRE(fast.witness.has_value());
                    CHECK(witness_is_valid(g, k, *fast.witness));
                }
            }
        }
    }
}

TEST_CASE("decompose: random multigraph round-trips") {
    std::mt19937 rng(631);
    int successes = 0;
    for (int rep = 0; rep < 200; ++rep) {
        int k = 2 + static_cast<int>(rng() % 2);
        int n = 2 + static_cast<int>(rng() % 4);
        Multigraph g(n);
        for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng() % v), v);
        while (g.edge_count() < k * (n - 1)) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v) g.add_edge(u, v);
        }
        auto res = decompose_into_spanning_trees(g, k);
        if (res.ok()) {
            ++successes;
            CHECK(verify_decomposition(*res.decomposition));
        } else {
            REQUIRE(res.witness.has_value());
            CHECK(witness_is_valid(g, k, *res.witness));
        }
    }
    CHECK(successes > 0);
}
