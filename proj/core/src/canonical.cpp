// Canonical labeling by colour refinement plus individualization. Vertices
// with identical neighbourhoods (apart from each other) are interchangeable,
// so only one of them is individualized per cell; that keeps cliques and
// complete multipartite graphs cheap.
#include <algorithm>
#include <map>

#include "powfactor/generators.hpp"

namespace powfactor {

namespace {

using Coloring = std::vector<int>;

struct Canonizer {
    int n;
    std::vector<std::vector<char>> adj;
    std::vector<std::vector<char>> twin;
    std::vector<char> best;
    std::vector<int> best_position;

    explicit Canonizer(const SimpleGraph& g) : n(g.order()), adj(n, std::vector<char>(n, 0)), twin(n, std::vector<char>(n, 0)) {
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = 1;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                bool same = u != v;
                for (int x = 0; x < n && same; ++x)
                    if (x != u && x != v && adj[u][x] != adj[v][x]) same = false;
                twin[u][v] = same;
            }
    }

    static int distinct(const Coloring& c) {
        std::vector<int> s = c;
        std::sort(s.begin(), s.end());
        return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
    }

    void refine(Coloring& c) const {
        int classes = distinct(c);
        while (true) {
            std::vector<std::vector<int>> sig(n);
            for (int v = 0; v < n; ++v) {
                sig[v].push_back(c[v]);
                std::vector<int> around;
                for (int x = 0; x < n; ++x)
                    if (adj[v][x]) around.push_back(c[x]);
                std::sort(around.begin(), around.end());
                sig[v].insert(sig[v].end(), around.begin(), around.end());
            }
            std::map<std::vector<int>, int> rank;
            for (const auto& s : sig) rank.emplace(s, 0);
            int r = 0;
            for (auto& [s, value] : rank) value = r++;
            for (int v = 0; v < n; ++v) c[v] = rank[sig[v]];
            if (r == classes) return;
            classes = r;
        }
    }

    void leaf(const Coloring& c) {
        std::vector<char> cert(static_cast<std::size_t>(n) * n, 0);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (adj[u][v]) cert[static_cast<std::size_t>(c[u]) * n + c[v]] = 1;
        if (best_position.empty() || cert > best) {
            best = std::move(cert);
            best_position = c;
        }
    }

    void search(const Coloring& c) {
        if (distinct(c) == n) {
            leaf(c);
            return;
        }
        std::vector<int> count(n, 0);
        for (int v = 0; v < n; ++v) ++count[c[v]];
        int target = 0;
        while (count[target] < 2) ++target;
        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (c[v] != target) continue;
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twin[u][v]; })) continue;
            tried.push_back(v);
            Coloring next(n);
            for (int x = 0; x < n; ++x) next[x] = 2 * c[x] + (x == v ? 0 : 1);
            refine(next);
            search(next);
        }
    }
};

}  // namespace

SimpleGraph canonical_form(const SimpleGraph& g) {
    const int n = g.order();
    SimpleGraph out(n);
    if (n == 0) return out;
    Canonizer c(g);
    Coloring start(n, 0);
    c.refine(start);
    c.search(start);
    for (auto [u, v] : g.edges()) out.add_edge(c.best_position[u], c.best_position[v]);
    return out;
}

}  // namespace powfactor
