#include <gtest/gtest.h>

#include <random>

#include "powfactor/error.hpp"
#include "powfactor/generators.hpp"
#include "powfactor/graph.hpp"
#include "powfactor/graph_io.hpp"
#include "support/oracles.hpp"

namespace {

using namespace powfactor;

SimpleGraph cycle(int n) {
    SimpleGraph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

SimpleGraph complete(int n) {
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

TEST(SimpleGraph, RejectsLoopsAndRange) {
    SimpleGraph g(3);
    EXPECT_THROW(g.add_edge(1, 1), PreconditionError);
    EXPECT_THROW(g.add_edge(0, 3), PreconditionError);
    EXPECT_THROW(g.add_edge(-1, 0), PreconditionError);
}

TEST(SimpleGraph, DuplicateEdgeIsIgnored) {
    SimpleGraph g(3);
    EXPECT_TRUE(g.add_edge(0, 1));
    EXPECT_FALSE(g.add_edge(1, 0));
    EXPECT_EQ(g.size(), 1u);
    EXPECT_TRUE(g.has_edge(1, 0));
    EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
}

TEST(Multigraph, EdgeIdsAreStable) {
    Multigraph m(3);
    EdgeId a = m.add_edge(0, 1);
    EdgeId b = m.add_edge(0, 1);
    EdgeId c = m.add_edge(1, 2);
    EXPECT_NE(a, b);
    EXPECT_TRUE(m.remove_edge(b));
    EXPECT_FALSE(m.remove_edge(b));
    EdgeId d = m.add_edge(2, 0);
    EXPECT_NE(d, b);
    ASSERT_EQ(m.edges().size(), 3u);
    EXPECT_EQ(m.edges()[0].id, a);
    EXPECT_EQ(m.edges()[1].id, c);
    EXPECT_THROW(m.add_edge(2, 2), PreconditionError);
}

TEST(Biconnected, Examples) {
    EXPECT_TRUE(is_biconnected(cycle(4)));
    EXPECT_FALSE(is_biconnected(SimpleGraph(3, {{0, 1}, {1, 2}})));
    EXPECT_TRUE(is_biconnected(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}})));
    EXPECT_FALSE(is_biconnected(SimpleGraph(1)));
    EXPECT_TRUE(is_biconnected(SimpleGraph(2, {{0, 1}})));
}

TEST(Biconnected, TwoVertexMultigraph) {
    Multigraph m(2);
    EXPECT_FALSE(is_biconnected(m));
    m.add_edge(0, 1);
    EXPECT_TRUE(is_biconnected(m));
    m.add_edge(1, 0);
    EXPECT_TRUE(is_biconnected(m));
}

TEST(Biconnected, MultigraphWithParallelEdges) {
    Multigraph m(3);
    m.add_edge(0, 1);
    m.add_edge(0, 1);
    m.add_edge(1, 2);
    EXPECT_FALSE(is_biconnected(m));
    m.add_edge(2, 0);
    EXPECT_TRUE(is_biconnected(m));
}

TEST(Biconnected, AgreesWithVertexDeletionOnAllSmallGraphs) {
    // every labelled graph up to 6 vertices, random ones at 7
    for (int n = 2; n <= 6; ++n) {
        const int pairs = n * (n - 1) / 2;
        for (long mask = 0; mask < (1L << pairs); ++mask) {
            SimpleGraph g(n);
            int bit = 0;
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v, ++bit)
                    if (mask >> bit & 1) g.add_edge(u, v);
            ASSERT_EQ(is_biconnected(g), oracle::biconnected(g)) << emit_graph6(g);
        }
    }
    std::mt19937 rng(7);
    for (int i = 0; i < 3000; ++i) {
        auto g = random_graph(7, 0.4, rng);
        ASSERT_EQ(is_biconnected(g), oracle::biconnected(g)) << emit_graph6(g);
    }
}

TEST(TwoCut, Examples) {
    auto c4 = smallest_2cut_component(cycle(4));
    ASSERT_TRUE(c4);
    EXPECT_EQ(c4->u, 0);
    EXPECT_EQ(c4->v, 2);
    EXPECT_EQ(c4->component, std::vector<Vertex>{1});

    EXPECT_FALSE(smallest_2cut_component(complete(4)));

    auto th = smallest_2cut_component(theta(2));
    ASSERT_TRUE(th);
    EXPECT_EQ(th->component.size(), 1u);
}

TEST(TwoCut, RejectsGraphsThatAreNotTwoConnected) {
    EXPECT_THROW(smallest_2cut_component(SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}})), PreconditionError);
}

TEST(TwoCut, MinimalOverAllPairsOnEveryGraphUpToEight) {
    for (int n = 4; n <= 8; ++n)
        for (const auto& g : enumerate_2connected(n)) {
            const auto cut = smallest_2cut_component(g);
            const int expect = oracle::smallest_2cut_order(g);
            if (expect == 0) {
                ASSERT_FALSE(cut) << emit_graph6(g);
                continue;
            }
            ASSERT_TRUE(cut) << emit_graph6(g);
            ASSERT_EQ(static_cast<int>(cut->component.size()), expect) << emit_graph6(g);
            // C really is a component of g - {u, v}
            std::vector<bool> keep(g.order(), true);
            keep[cut->u] = keep[cut->v] = false;
            const auto comps = oracle::components(g, keep);
            ASSERT_NE(std::find(comps.begin(), comps.end(), cut->component), comps.end()) << emit_graph6(g);
        }
}

// Every pair in order, first strict improvement wins; within a pair the
// first smallest component by lowest vertex.
std::optional<TwoCut> naive_smallest_2cut(const SimpleGraph& g) {
    std::optional<TwoCut> best;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            std::vector<bool> keep(g.order(), true);
            keep[u] = keep[v] = false;
            const auto comps = oracle::components(g, keep);
            if (comps.size() < 2) continue;
            const auto* smallest = &comps[0];
            for (const auto& c : comps)
                if (c.size() < smallest->size()) smallest = &c;
            if (!best || smallest->size() < best->component.size()) best = TwoCut{u, v, *smallest};
        }
    return best;
}

TEST(TwoCut, SameChoiceAsTheNaiveScanOnRandomGraphs) {
    std::mt19937 rng(19);
    for (int i = 0; i < 400; ++i) {
        const int n = 4 + static_cast<int>(rng() % 30);
        // a cycle with a few chords keeps plenty of 2-cuts around
        SimpleGraph g(n);
        for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        const int chords = static_cast<int>(rng() % (n + 1));
        for (int c = 0; c < chords; ++c) {
            const Vertex a = static_cast<Vertex>(rng() % n);
            const Vertex b = static_cast<Vertex>(rng() % n);
            if (a != b) g.add_edge(a, b);
        }
        const auto fast = smallest_2cut_component(g);
        const auto slow = naive_smallest_2cut(g);
        ASSERT_EQ(fast.has_value(), slow.has_value()) << emit_graph6(g);
        if (!fast) continue;
        ASSERT_EQ(fast->u, slow->u) << emit_graph6(g);
        ASSERT_EQ(fast->v, slow->v) << emit_graph6(g);
        ASSERT_EQ(fast->component, slow->component) << emit_graph6(g);
    }
}

TEST(Power, Examples) {
    const auto p4 = SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}});
    EXPECT_EQ(graph_power(p4, 1), p4);
    EXPECT_EQ(graph_power(cycle(5), 2), complete(5));
    EXPECT_EQ(graph_power(p4, 2), SimpleGraph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}}));
    EXPECT_THROW(graph_power(p4, 0), PreconditionError);
}

TEST(Power, MatchesDistancesAndIsMonotone) {
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        const int n = 2 + static_cast<int>(rng() % 12);
        auto g = random_graph(n, 0.25, rng);
        const auto d = oracle::distances(g);
        int diameter = 0;
        bool connected = true;
        for (const auto& row : d)
            for (int x : row) {
                if (x < 0) connected = false;
                diameter = std::max(diameter, x);
            }
        std::optional<SimpleGraph> previous;
        for (int k = 1; k <= 5; ++k) {
            auto pk = graph_power(g, k);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    ASSERT_EQ(pk.has_edge(u, v), d[u][v] >= 1 && d[u][v] <= k);
            if (previous) {
                for (auto [u, v] : previous->edges()) ASSERT_TRUE(pk.has_edge(u, v));
            }
            if (connected && k >= diameter) {
                ASSERT_EQ(pk, complete(n));
            }
            previous = pk;
        }
    }
}

TEST(EdgeList, ParsesCycle) {
    EXPECT_EQ(parse_edge_list("4\n0 1\n1 2\n2 3\n3 0\n"), cycle(4));
}

TEST(EdgeList, CommentsBlankLinesAndDuplicates) {
    const auto g = parse_edge_list("# a square\n\n4  # order\n0 1\n1 0\n1 2 # side\n2 3\n\n3 0\n");
    EXPECT_EQ(g, cycle(4));
}

TEST(EdgeList, Errors) {
    EXPECT_THROW(parse_edge_list("4\n0 0\n"), ParseError);
    EXPECT_THROW(parse_edge_list("4\n0 4\n"), ParseError);
    EXPECT_THROW(parse_edge_list("x\n"), ParseError);
    EXPECT_THROW(parse_edge_list(""), ParseError);
    EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), ParseError);
    try {
        parse_edge_list("3\n0 1\n1 7\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(Graph6, DecodesCompleteGraph) { EXPECT_EQ(parse_graph6("C~"), complete(4)); }

TEST(Graph6, Errors) {
    EXPECT_THROW(parse_graph6("C\x7f"), ParseError);
    EXPECT_THROW(parse_graph6("C"), ParseError);
    EXPECT_THROW(parse_graph6(""), ParseError);
    EXPECT_THROW(parse_graph6("C\xc3\xa9"), ParseError);
}

TEST(Graph6, StreamNamesTheBadLine) {
    try {
        parse_graph6_stream("C~\nC^\nC\x01\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_EQ(parse_graph6_stream("C~\n\nBw\n").size(), 2u);
}

TEST(Graph6, RoundTripsRandomGraphs) {
    std::mt19937 rng(3);
    for (int n : {0, 1, 2, 5, 30, 62, 63, 64, 100}) {
        auto g = random_graph(n, 0.3, rng);
        const auto text = emit_graph6(g);
        EXPECT_EQ(parse_graph6(text), g) << n;
        EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g) << n;
    }
}

TEST(Format, Sniffing) {
    EXPECT_EQ(sniff_format("C~\n"), GraphFormat::Graph6);
    EXPECT_EQ(sniff_format("4\n0 1\n"), GraphFormat::EdgeList);
    EXPECT_EQ(sniff_format("# comment\n4\n"), GraphFormat::EdgeList);
    EXPECT_EQ(parse_graph("C~", GraphFormat::Graph6), parse_graph(emit_graph(complete(4), GraphFormat::EdgeList),
                                                                  GraphFormat::EdgeList));
}

}  // namespace
