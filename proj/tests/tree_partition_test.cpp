#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "powfactor/error.hpp"
#include "powfactor/generators.hpp"
#include "powfactor/graph_io.hpp"
#include "powfactor/tree_partition.hpp"
#include "powfactor/verify.hpp"
#include "support/oracles.hpp"

namespace {

using namespace powfactor;

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

// Everything the construction promises, checked from scratch.
void check(const SimpleGraph& g, const std::vector<int>& sizes, const std::vector<TreePart>& parts) {
    ASSERT_EQ(parts.size(), sizes.size());
    std::vector<int> owner(g.order(), -1);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& p = parts[i];
        ASSERT_EQ(static_cast<int>(p.members.size()), sizes[i]);
        ASSERT_TRUE(std::is_sorted(p.members.begin(), p.members.end()));
        ASSERT_LE(static_cast<int>(p.witness.size()), 2 * sizes[i] - 1);
        for (Vertex v : p.members) {
            ASSERT_EQ(owner[v], -1) << v;
            owner[v] = static_cast<int>(i);
            ASSERT_TRUE(std::binary_search(p.witness.begin(), p.witness.end(), v));
        }
        std::vector<bool> keep(g.order(), false);
        for (Vertex v : p.witness) keep[v] = true;
        ASSERT_EQ(oracle::components(g, keep).size(), 1u);
    }
    for (int o : owner) ASSERT_GE(o, 0);
    // what is left after each peel stays connected
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::vector<bool> keep(g.order(), false);
        for (std::size_t j = i; j < parts.size(); ++j)
            for (Vertex v : parts[j].members) keep[v] = true;
        ASSERT_EQ(oracle::components(g, keep).size(), 1u) << "after part " << i;
    }
}

std::vector<int> random_composition(int n, std::mt19937& rng) {
    std::vector<int> sizes;
    while (n > 0) {
        const int s = 1 + static_cast<int>(rng() % std::min(n, 8));
        sizes.push_back(s);
        n -= s;
    }
    return sizes;
}

TEST(TreePartition, SinglePart) {
    const auto parts = partition_tree(path(4), {4});
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].members, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_EQ(parts[0].witness, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(TreePartition, PathInHalves) {
    const auto parts = partition_tree(path(6), {3, 3});
    check(path(6), {3, 3}, parts);
    // the first part is peeled from the far end of the path
    EXPECT_EQ(parts[0].members, (std::vector<Vertex>{3, 4, 5}));
    EXPECT_EQ(parts[1].members, (std::vector<Vertex>{0, 1, 2}));
}

TEST(TreePartition, SpiderFour) {
    const auto t = spider(4);
    const auto parts = partition_tree(t, {4, 4, 4, 4});
    check(t, {4, 4, 4, 4}, parts);
    const auto t6 = graph_power(t, 6);
    for (const auto& p : parts)
        for (Vertex u : p.members)
            for (Vertex v : p.members)
                if (u != v) EXPECT_TRUE(t6.has_edge(u, v));
}

TEST(TreePartition, Errors) {
    EXPECT_THROW(partition_tree(path(4), {3}), PreconditionError);
    EXPECT_THROW(partition_tree(SimpleGraph(4, {{0, 1}, {2, 3}}), {2, 2}), PreconditionError);
    EXPECT_THROW(partition_tree(path(4), {4, 0}), PreconditionError);
}

TEST(TreePartition, RandomTreesAndCompositions) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const auto t = random_tree(n, rng());
        const auto sizes = random_composition(n, rng);
        check(t, sizes, partition_tree(t, sizes));
    }
}

TEST(TreePartition, ConnectedGraphsUseASpanningTree) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 20);
        const auto g = random_2connected(n, rng());
        const auto sizes = random_composition(n, rng);
        check(g, sizes, partition_tree(g, sizes));
    }
}

TEST(TreePartition, CertifiesCliqueFactorOfPower) {
    // parts of size r lie in subtrees of order 2r-1, so they are cliques of G^{2r-2}
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int r = 2 + static_cast<int>(rng() % 4);
        const int n = r * (1 + static_cast<int>(rng() % 6));
        const auto g = random_tree(n, rng());
        const auto parts = partition_tree(g, std::vector<int>(n / r, r));
        const auto power = graph_power(g, 2 * r - 2);
        for (const auto& p : parts)
            for (Vertex u : p.members)
                for (Vertex v : p.members)
                    if (u != v) ASSERT_TRUE(power.has_edge(u, v)) << emit_graph6(g);
    }
}

TEST(TreePartition, Deterministic) {
    const auto t = random_tree(25, 7);
    const std::vector<int> sizes = {5, 3, 7, 2, 8};
    const auto a = partition_tree(t, sizes);
    const auto b = partition_tree(t, sizes);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].members, b[i].members);
        EXPECT_EQ(a[i].witness, b[i].witness);
    }
}

}  // namespace
