#include "powfactor/graph.hpp"

#include <algorithm>
#include <string>

#include "powfactor/error.hpp"

namespace powfactor {

SimpleGraph::SimpleGraph(int n) {
    if (n < 0) throw PreconditionError("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

SimpleGraph::SimpleGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" +
                                std::to_string(order()));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
    return true;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= order() || v >= order()) return false;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

EdgeId Multigraph::add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw PreconditionError("multigraph edge out of range");
    if (u == v) throw PreconditionError("multigraph self-loop");
    edges_.push_back({next_id_, u, v});
    return next_id_++;
}

bool Multigraph::remove_edge(EdgeId id) {
    auto it = std::find_if(edges_.begin(), edges_.end(), [id](const MultiEdge& e) { return e.id == id; });
    if (it == edges_.end()) return false;
    edges_.erase(it);
    return true;
}

bool is_biconnected_subgraph(const std::vector<std::vector<Vertex>>& adj, const std::vector<bool>& present) {
    const int n = static_cast<int>(adj.size());
    int count = 0;
    Vertex root = -1;
    for (Vertex v = 0; v < n; ++v)
        if (present[v]) {
            ++count;
            if (root < 0) root = v;
        }
    if (count < 2) return false;

    // Iterative lowpoint DFS looking for articulation points.
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    std::vector<Vertex> stack{root};
    int timer = 0;
    int root_children = 0;
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
        Vertex u = stack.back();
        if (next[u] < adj[u].size()) {
            Vertex w = adj[u][next[u]++];
            if (!present[w] || w == parent[u]) continue;
            if (disc[w] < 0) {
                parent[w] = u;
                disc[w] = low[w] = timer++;
                if (u == root) ++root_children;
                stack.push_back(w);
            } else {
                low[u] = std::min(low[u], disc[w]);
            }
        } else {
            stack.pop_back();
            Vertex p = parent[u];
            if (p >= 0) {
                low[p] = std::min(low[p], low[u]);
                if (p != root && low[u] >= disc[p]) return false;
            }
        }
    }
    if (timer != count) return false;
    return root_children <= 1;
}

namespace {

std::vector<std::vector<Vertex>> adjacency_of(const SimpleGraph& g) {
    std::vector<std::vector<Vertex>> adj(g.order());
    for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
    return adj;
}

// Components of g restricted to vertices where alive is true.
std::vector<std::vector<Vertex>> components(const SimpleGraph& g, const std::vector<bool>& alive) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (!alive[s] || seen[s]) continue;
        std::vector<Vertex> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (Vertex w : g.neighbors(comp[i]))
                if (alive[w] && !seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

bool is_connected(const SimpleGraph& g) {
    if (g.order() == 0) return false;
    return components(g, std::vector<bool>(g.order(), true)).size() == 1;
}

bool is_biconnected(const SimpleGraph& g) {
    return is_biconnected_subgraph(adjacency_of(g), std::vector<bool>(g.order(), true));
}

bool is_biconnected(const Multigraph& g) {
    std::vector<std::vector<Vertex>> adj(g.order());
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return is_biconnected_subgraph(adj, std::vector<bool>(g.order(), true));
}

namespace {

// For every cut vertex v of g - u, the order of the smallest component of
// g - {u, v}; 0 for the other vertices. One iterative DFS (lowpoints and
// subtree sizes) over g - u, which must be connected.
std::vector<int> smallest_pieces_without(const SimpleGraph& g, Vertex u) {
    const int n = g.order();
    const int rest = n - 1;
    std::vector<int> disc(n, -1), low(n, 0), size(n, 1), out(n, 0);
    std::vector<int> cut_sum(n, 0), cut_min(n, n), children(n, 0);
    const Vertex root = u == 0 ? 1 : 0;
    struct Frame {
        Vertex v;
        std::size_t next;
    };
    std::vector<Frame> stack{{root, 0}};
    std::vector<Vertex> parent(n, -1);
    int clock = 0;
    disc[root] = low[root] = clock++;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& nb = g.neighbors(v);
        if (next < nb.size()) {
            const Vertex w = nb[next++];
            if (w == u) continue;
            if (disc[w] < 0) {
                parent[w] = v;
                disc[w] = low[w] = clock++;
                stack.push_back({w, 0});
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
            continue;
        }
        const Vertex child = v;
        stack.pop_back();
        if (stack.empty()) break;
        const Vertex p = stack.back().v;
        size[p] += size[child];
        low[p] = std::min(low[p], low[child]);
        ++children[p];
        if (low[child] >= disc[p]) {
            cut_sum[p] += size[child];
            cut_min[p] = std::min(cut_min[p], size[child]);
        }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (v == u || disc[v] < 0) continue;
        if (v == root) {
            if (children[v] >= 2) out[v] = cut_min[v];
        } else if (cut_sum[v] > 0) {
            out[v] = std::min(cut_min[v], rest - 1 - cut_sum[v]);
        }
    }
    return out;
}

}  // namespace

std::optional<TwoCut> smallest_2cut_component(const SimpleGraph& g) {
    if (!is_biconnected(g)) throw PreconditionError("smallest_2cut_component needs a 2-connected graph");
    const int n = g.order();
    if (n < 4) return std::nullopt;
    std::optional<TwoCut> best;
    std::vector<bool> alive(n, true);
    for (Vertex u = 0; u < n; ++u) {
        const auto pieces = smallest_pieces_without(g, u);
        for (Vertex v = u + 1; v < n; ++v) {
            if (pieces[v] == 0) continue;
            if (best && pieces[v] >= static_cast<int>(best->component.size())) continue;
            // improvement: rebuild the components for the exact tie-break
            alive[u] = alive[v] = false;
            auto comps = components(g, alive);
            alive[u] = alive[v] = true;
            // components() yields them ordered by lowest vertex, so the first
            // minimum is the tie-break winner.
            auto smallest = std::min_element(comps.begin(), comps.end(),
                                             [](const auto& a, const auto& b) { return a.size() < b.size(); });
            best = TwoCut{u, v, std::move(*smallest)};
        }
    }
    return best;
}

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source) {
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> queue{source};
    dist[source] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex u = queue[i];
        for (Vertex w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

SimpleGraph graph_power(const SimpleGraph& g, int k) {
    if (k < 1) throw PreconditionError("graph_power needs k >= 1");
    SimpleGraph out(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        // depth-limited BFS
        std::vector<int> dist(g.order(), -1);
        std::vector<Vertex> queue{s};
        dist[s] = 0;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            Vertex u = queue[i];
            if (dist[u] == k) continue;
            for (Vertex w : g.neighbors(u))
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        for (Vertex t : queue)
            if (t > s) out.add_edge(s, t);
    }
    return out;
}

}  // namespace powfactor
