#include "powfactor/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "powfactor/error.hpp"
#include "powfactor/graph_io.hpp"

namespace powfactor {

namespace {

void need(bool ok, const std::string& what) {
    if (!ok) throw PreconditionError(what);
}

// Adds a path from a to b through `inner` fresh vertices starting at next.
void add_path(SimpleGraph& g, Vertex a, Vertex b, int inner, Vertex& next) {
    Vertex prev = a;
    for (int i = 0; i < inner; ++i) {
        g.add_edge(prev, next);
        prev = next++;
    }
    g.add_edge(prev, b);
}

}  // namespace

SimpleGraph spider(int r) {
    need(r >= 2, "spider: r must be at least 2");
    SimpleGraph g(r * r);
    Vertex next = r + 2;
    for (Vertex leaf = 1; leaf <= r + 1; ++leaf) add_path(g, 0, leaf, r - 2, next);
    return g;
}

SimpleGraph subdivided_k4(int r) {
    need(r >= 2, "subdivided_k4: r must be at least 2");
    SimpleGraph g(6 * r);
    Vertex next = 4;
    const std::pair<Vertex, Vertex> edges[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (auto [a, b] : edges) add_path(g, a, b, a == 0 && b == 1 ? r + 1 : r - 1, next);
    return g;
}

SimpleGraph theta(int r) {
    need(r >= 2, "theta: r must be at least 2");
    SimpleGraph g(r * r + r);
    Vertex next = 2;
    for (int p = 0; p < r + 2; ++p) add_path(g, 0, 1, r - 1, next);
    return g;
}

SimpleGraph random_2connected(int n, std::uint64_t seed) {
    need(n >= 3, "random_2connected: n must be at least 3");
    std::mt19937_64 rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    SimpleGraph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(perm[i], perm[(i + 1) % n]);
    std::bernoulli_distribution coin(0.5);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    return g;
}

SimpleGraph random_tree(int n, std::uint64_t seed) {
    need(n >= 1, "random_tree: n must be positive");
    SimpleGraph g(n);
    if (n == 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> code(n - 2), degree(n, 1);
    for (int& c : code) {
        c = pick(rng);
        ++degree[c];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.insert(v);
    for (int c : code) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        g.add_edge(leaf, c);
        if (--degree[c] == 1) leaves.insert(c);
    }
    g.add_edge(*leaves.begin(), *std::next(leaves.begin()));
    return g;
}

std::vector<SimpleGraph> enumerate_2connected(int n) {
    need(n >= 3 && n <= 8, "enumerate_2connected: n must be between 3 and 8");
    // connected graphs grow from connected graphs by one vertex
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int m = 2; m <= n; ++m) {
        std::set<std::string> seen;
        std::vector<SimpleGraph> next;
        for (const auto& h : level)
            for (int mask = 1; mask < (1 << (m - 1)); ++mask) {
                SimpleGraph g(m);
                for (auto [u, v] : h.edges()) g.add_edge(u, v);
                for (int u = 0; u < m - 1; ++u)
                    if (mask >> u & 1) g.add_edge(u, m - 1);
                SimpleGraph c = canonical_form(g);
                if (seen.insert(emit_graph6(c)).second) next.push_back(std::move(c));
            }
        level = std::move(next);
    }
    std::vector<std::pair<std::string, SimpleGraph>> keyed;
    for (auto& g : level)
        if (is_biconnected(g)) keyed.emplace_back(emit_graph6(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SimpleGraph> out;
    for (auto& [key, g] : keyed) out.push_back(std::move(g));
    return out;
}

}  // namespace powfactor
