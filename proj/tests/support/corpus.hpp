#pragma once

// Extra graph sources for engine runs.

#include <algorithm>
#include <random>

#include "powfactor/graph.hpp"

namespace corpus {

using powfactor::SimpleGraph;

// Random ear decomposition: a short cycle, then paths between existing
// vertices until n are used, then each remaining pair joined with
// probability `chord`. Sparse settings leave long degree-2 chains, which
// drive the engine through its series cases.
inline SimpleGraph ear_graph(int n, std::mt19937_64& rng, double chord) {
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    const int c = std::min(n, pick(3, 6));
    SimpleGraph g(n);
    for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
    int used = c;
    while (used < n) {
        const int inner = std::min(n - used, pick(1, 4));
        const int a = pick(0, used - 1);
        int b = pick(0, used - 2);
        if (b >= a) ++b;
        int prev = a;
        for (int i = 0; i < inner; ++i) {
            g.add_edge(prev, used);
            prev = used++;
        }
        g.add_edge(prev, b);
    }
    std::bernoulli_distribution coin(chord);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace corpus
