#pragma once

// Slow, obviously-correct reference computations used to cross-check the
// library. Nothing here calls into the code under test except SimpleGraph
// accessors.

#include <algorithm>
#include <vector>

#include "powfactor/graph.hpp"

namespace oracle {

using powfactor::SimpleGraph;
using powfactor::Vertex;

// Components of g restricted to vertices with keep[v] set, as sorted lists.
inline std::vector<std::vector<Vertex>> components(const SimpleGraph& g, const std::vector<bool>& keep) {
    std::vector<int> comp(g.order(), -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < g.order(); ++s) {
        if (!keep[s] || comp[s] >= 0) continue;
        std::vector<Vertex> members{s};
        comp[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (Vertex y : g.neighbors(members[i]))
                if (keep[y] && comp[y] < 0) {
                    comp[y] = comp[s];
                    members.push_back(y);
                }
        std::sort(members.begin(), members.end());
        out.push_back(members);
    }
    return out;
}

inline bool connected(const SimpleGraph& g) {
    return g.order() > 0 && components(g, std::vector<bool>(g.order(), true)).size() == 1;
}

// Connected, at least two vertices, and still connected after deleting any one.
inline bool biconnected(const SimpleGraph& g) {
    if (g.order() < 2 || !connected(g)) return false;
    if (g.order() == 2) return true;
    for (Vertex v = 0; v < g.order(); ++v) {
        std::vector<bool> keep(g.order(), true);
        keep[v] = false;
        if (components(g, keep).size() != 1) return false;
    }
    return true;
}

// Order of the smallest component over all 2-cuts; 0 if there is no 2-cut.
inline int smallest_2cut_order(const SimpleGraph& g) {
    int best = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) {
            std::vector<bool> keep(g.order(), true);
            keep[u] = keep[v] = false;
            auto cs = components(g, keep);
            if (cs.size() < 2) continue;
            for (const auto& c : cs)
                if (best == 0 || static_cast<int>(c.size()) < best) best = static_cast<int>(c.size());
        }
    return best;
}

// Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> distances(const SimpleGraph& g) {
    const int n = g.order();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (Vertex v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (Vertex w : g.neighbors(v)) d[v][w] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (auto& row : d)
        for (int& x : row)
            if (x == inf) x = -1;
    return d;
}

// Some vertex set S with a ⊆ S, |S| <= |a|+1 and g[S] connected, by trying
// every candidate superset.
inline bool nearly_connected(const SimpleGraph& g, const std::vector<Vertex>& a) {
    auto induced_connected = [&](const std::vector<Vertex>& s) {
        std::vector<bool> keep(g.order(), false);
        for (Vertex v : s) keep[v] = true;
        return components(g, keep).size() == 1;
    };
    if (induced_connected(a)) return true;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (std::find(a.begin(), a.end(), x) != a.end()) continue;
        auto s = a;
        s.push_back(x);
        if (induced_connected(s)) return true;
    }
    return false;
}

// Does g contain a set of disjoint r-cliques covering every vertex? Plain
// recursion over the lowest uncovered vertex.
inline bool clique_factor(const SimpleGraph& g, int r) {
    const int n = g.order();
    if (n % r != 0) return false;
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self) -> bool {
        Vertex first = -1;
        for (Vertex v = 0; v < n && first < 0; ++v)
            if (!used[v]) first = v;
        if (first < 0) return true;
        std::vector<Vertex> part{first};
        auto grow = [&](auto&& again, Vertex from) -> bool {
            if (static_cast<int>(part.size()) == r) {
                for (Vertex v : part) used[v] = true;
                const bool ok = self(self);
                for (Vertex v : part) used[v] = false;
                return ok;
            }
            for (Vertex v = from; v < n; ++v) {
                if (used[v]) continue;
                if (!std::all_of(part.begin(), part.end(), [&](Vertex u) { return g.has_edge(u, v); })) continue;
                part.push_back(v);
                const bool ok = again(again, v + 1);
                part.pop_back();
                if (ok) return true;
            }
            return false;
        };
        return grow(grow, first + 1);
    };
    return rec(rec);
}

inline bool is_tree(const SimpleGraph& g) {
    return connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order());
}

}  // namespace oracle
