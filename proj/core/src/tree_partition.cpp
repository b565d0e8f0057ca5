#include "powfactor/tree_partition.hpp"

#include <algorithm>
#include <numeric>

#include "powfactor/error.hpp"

namespace powfactor {

std::vector<TreePart> partition_tree(const SimpleGraph& g, const std::vector<int>& sizes) {
    const int n = g.order();
    long total = 0;
    for (int s : sizes) {
        if (s < 1) throw PreconditionError("partition_tree: part sizes must be positive");
        total += s;
    }
    if (total != n) throw PreconditionError("partition_tree: sizes sum to " + std::to_string(total) + ", graph has " +
                                            std::to_string(n) + " vertices");
    if (n == 0) return {};
    if (!is_connected(g)) throw PreconditionError("partition_tree: graph is not connected");

    // BFS tree from 0
    std::vector<Vertex> parent(n, -1), order{0};
    std::vector<int> depth(n, -1);
    depth[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex y : g.neighbors(order[i]))
            if (depth[y] < 0) {
                depth[y] = depth[order[i]] + 1;
                parent[y] = order[i];
                order.push_back(y);
            }
    std::vector<std::vector<Vertex>> children(n);
    for (Vertex v : order)
        if (parent[v] >= 0) children[parent[v]].push_back(v);

    std::vector<char> gone(n, 0);
    std::vector<int> size(n, 0);
    auto collect = [&](Vertex root, std::vector<Vertex>& out) {
        std::vector<Vertex> stack{root};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (Vertex c : children[x])
                if (!gone[c]) stack.push_back(c);
        }
    };

    std::vector<TreePart> out;
    for (int want : sizes) {
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (gone[*it]) continue;
            size[*it] = 1;
            for (Vertex c : children[*it])
                if (!gone[c]) size[*it] += size[c];
        }
        // deepest vertex whose subtree is big enough, lowest id on ties
        Vertex w = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!gone[v] && size[v] >= want && (w < 0 || depth[v] > depth[w])) w = v;

        TreePart part;
        if (size[w] == want) {
            collect(w, part.members);
            part.witness = part.members;
        } else {
            std::vector<Vertex> comps;
            for (Vertex c : children[w])
                if (!gone[c]) comps.push_back(c);
            std::stable_sort(comps.begin(), comps.end(), [&](Vertex a, Vertex b) { return size[a] > size[b]; });
            std::vector<Vertex> chosen;
            int sum = 0;
            for (Vertex c : comps) {
                if (sum >= want) break;
                chosen.push_back(c);
                sum += size[c];
            }
            for (std::size_t i = chosen.size(); i-- > 0;)
                if (sum - size[chosen[i]] >= want) {
                    sum -= size[chosen[i]];
                    chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(i));
                }
            std::vector<Vertex> pool;
            for (Vertex c : chosen) collect(c, pool);
            part.witness = pool;
            part.witness.push_back(w);
            std::sort(pool.begin(), pool.end(), [&](Vertex a, Vertex b) {
                return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
            });
            part.members.assign(pool.begin(), pool.begin() + want);
        }
        for (Vertex v : part.members) gone[v] = 1;
        std::sort(part.members.begin(), part.members.end());
        std::sort(part.witness.begin(), part.witness.end());
        out.push_back(std::move(part));
    }
    return out;
}

}  // namespace powfactor
