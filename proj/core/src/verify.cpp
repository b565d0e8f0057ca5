#include "powfactor/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

#include "powfactor/error.hpp"

namespace powfactor {

namespace {

bool induced_connected(const SimpleGraph& g, const std::vector<Vertex>& set) {
    if (set.empty()) return false;
    std::vector<char> in(g.order(), 0);
    for (Vertex v : set) in[v] = 1;
    std::vector<Vertex> stack{set.front()};
    in[set.front()] = 2;
    std::size_t seen = 1;
    while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (in[y] == 1) {
                in[y] = 2;
                ++seen;
                stack.push_back(y);
            }
    }
    return seen == set.size();
}

std::vector<std::vector<int>> all_distances(const SimpleGraph& g) {
    std::vector<std::vector<int>> d;
    d.reserve(g.order());
    for (Vertex v = 0; v < g.order(); ++v) d.push_back(bfs_distances(g, v));
    return d;
}

}  // namespace

std::optional<std::vector<Vertex>> is_nearly_connected(const SimpleGraph& g, const std::vector<Vertex>& a) {
    if (a.empty()) throw PreconditionError("is_nearly_connected: empty set");
    std::vector<Vertex> set = a;
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw PreconditionError("is_nearly_connected: repeated vertex");
    for (Vertex v : set)
        if (v < 0 || v >= g.order()) throw PreconditionError("is_nearly_connected: vertex out of range");
    if (induced_connected(g, set)) return set;
    for (Vertex x = 0; x < g.order(); ++x) {
        if (std::binary_search(set.begin(), set.end(), x)) continue;
        std::vector<Vertex> bigger = set;
        bigger.insert(std::upper_bound(bigger.begin(), bigger.end(), x), x);
        if (induced_connected(g, bigger)) return bigger;
    }
    return std::nullopt;
}

Verdict verify_partition(const SimpleGraph& g, const Partition& parts,
                         const std::optional<std::vector<int>>& expected_sizes) {
    auto fail = [](std::string why) { return Verdict{false, std::move(why)}; };
    std::vector<int> owner(g.order(), -1);
    std::vector<int> sizes;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& members = parts[i].members;
        if (members.empty()) return fail("part " + std::to_string(i) + " is empty");
        sizes.push_back(static_cast<int>(members.size()));
        for (Vertex v : members) {
            if (v < 0 || v >= g.order()) return fail("part " + std::to_string(i) + " names vertex " + std::to_string(v));
            if (owner[v] >= 0)
                return fail("vertex " + std::to_string(v) + " in parts " + std::to_string(owner[v]) + " and " +
                            std::to_string(i));
            owner[v] = static_cast<int>(i);
        }
    }
    for (Vertex v = 0; v < g.order(); ++v)
        if (owner[v] < 0) return fail("vertex " + std::to_string(v) + " is not covered");

    std::vector<int> want = expected_sizes ? *expected_sizes : std::vector<int>(parts.size(), 4);
    std::sort(want.begin(), want.end());
    std::sort(sizes.begin(), sizes.end());
    if (want != sizes) return fail("part sizes do not match");

    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!is_nearly_connected(g, parts[i].members)) return fail("part " + std::to_string(i) + " is not nearly connected");
    return {};
}

void attach_witnesses(const SimpleGraph& g, Partition& parts) {
    for (auto& p : parts) {
        auto w = is_nearly_connected(g, p.members);
        if (!w) throw PreconditionError("part has no witness");
        p.witness = std::move(*w);
    }
}

std::optional<std::vector<std::vector<Vertex>>> has_kr_factor(const SimpleGraph& g, int r) {
    if (r < 2) throw PreconditionError("has_kr_factor: r must be at least 2");
    const int n = g.order();
    if (n % r != 0) return std::nullopt;
    if (n == 0) return std::vector<std::vector<Vertex>>{};

    // all r-cliques, grown in increasing vertex order
    std::vector<std::vector<Vertex>> cliques;
    std::vector<Vertex> cur;
    std::function<void(Vertex)> grow = [&](Vertex from) {
        if (static_cast<int>(cur.size()) == r) {
            cliques.push_back(cur);
            return;
        }
        for (Vertex v = from; v < n; ++v) {
            bool ok = std::all_of(cur.begin(), cur.end(), [&](Vertex u) { return g.has_edge(u, v); });
            if (!ok) continue;
            cur.push_back(v);
            grow(v + 1);
            cur.pop_back();
        }
    };
    grow(0);

    std::vector<std::vector<int>> containing(n);
    for (std::size_t c = 0; c < cliques.size(); ++c)
        for (Vertex v : cliques[c]) containing[v].push_back(static_cast<int>(c));

    std::vector<char> covered(n, 0);
    std::vector<int> chosen;
    std::unordered_set<std::uint64_t> dead;
    const bool memo = n <= 64;
    auto mask = [&] {
        std::uint64_t m = 0;
        for (int v = 0; v < n; ++v)
            if (covered[v]) m |= std::uint64_t{1} << v;
        return m;
    };

    std::function<bool(int)> search = [&](int left) -> bool {
        if (left == 0) return true;
        if (memo && dead.count(mask())) return false;
        // vertex with the fewest usable cliques
        int best = -1;
        std::size_t best_count = SIZE_MAX;
        for (int v = 0; v < n && best_count > 0; ++v) {
            if (covered[v]) continue;
            std::size_t count = 0;
            for (int c : containing[v]) {
                const auto& cl = cliques[c];
                if (std::none_of(cl.begin(), cl.end(), [&](Vertex u) { return covered[u]; })) ++count;
            }
            if (count < best_count) {
                best_count = count;
                best = v;
            }
        }
        if (best_count > 0) {
            for (int c : containing[best]) {
                const auto& cl = cliques[c];
                if (std::any_of(cl.begin(), cl.end(), [&](Vertex u) { return covered[u]; })) continue;
                for (Vertex u : cl) covered[u] = 1;
                chosen.push_back(c);
                if (search(left - r)) return true;
                chosen.pop_back();
                for (Vertex u : cl) covered[u] = 0;
            }
        }
        if (memo) dead.insert(mask());
        return false;
    };
    if (!search(n)) return std::nullopt;
    std::vector<std::vector<Vertex>> out;
    for (int c : chosen) out.push_back(cliques[c]);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Partition> brute_force_partition(const SimpleGraph& g, const std::vector<int>& sizes,
                                               const BruteForceOptions& options) {
    const int n = g.order();
    int total = 0;
    for (int s : sizes) {
        if (s < 1) throw PreconditionError("brute_force_partition: part sizes must be positive");
        total += s;
    }
    if (total != n) throw PreconditionError("brute_force_partition: sizes sum to " + std::to_string(total) +
                                            ", graph has " + std::to_string(n) + " vertices");
    if (n > options.max_order && !options.ignore_limit)
        throw PreconditionError("brute_force_partition: " + std::to_string(n) + " vertices exceeds the limit of " +
                                std::to_string(options.max_order));
    if (options.mode == PartMode::CliqueInPower && options.power < 1)
        throw PreconditionError("brute_force_partition: power must be positive");

    const auto dist = all_distances(g);
    auto close = [&](Vertex a, Vertex b, int s) {
        const int d = dist[a][b];
        if (d < 0) return false;
        return options.mode == PartMode::CliqueInPower ? d <= options.power : d <= s;
    };

    std::map<int, int> left;  // size -> remaining count
    for (int s : sizes) ++left[s];
    std::vector<char> used(n, 0);
    Partition out;
    std::set<std::pair<std::vector<char>, std::vector<int>>> dead;

    std::function<bool()> search = [&]() -> bool {
        Vertex seed = -1;
        for (Vertex v = 0; v < n; ++v)
            if (!used[v]) {
                seed = v;
                break;
            }
        if (seed < 0) return true;
        std::vector<int> key_sizes;
        for (auto [s, c] : left) key_sizes.insert(key_sizes.end(), c, s);
        auto key = std::make_pair(used, key_sizes);
        if (dead.count(key)) return false;

        for (auto& [s, count] : left) {
            if (count == 0) continue;
            const int size = s;
            std::vector<Vertex> pool;
            for (Vertex v = seed + 1; v < n; ++v)
                if (!used[v] && close(seed, v, size)) pool.push_back(v);
            std::vector<Vertex> part{seed};
            std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
                if (static_cast<int>(part.size()) == size) {
                    if (options.mode == PartMode::NearlyConnected && !is_nearly_connected(g, part)) return false;
                    for (Vertex v : part) used[v] = 1;
                    --count;
                    out.push_back({part, {}});
                    if (search()) return true;
                    out.pop_back();
                    ++count;
                    for (Vertex v : part) used[v] = 0;
                    return false;
                }
                for (std::size_t i = from; i < pool.size(); ++i) {
                    Vertex v = pool[i];
                    if (!std::all_of(part.begin(), part.end(), [&](Vertex u) { return close(u, v, size); })) continue;
                    part.push_back(v);
                    if (extend(i + 1)) return true;
                    part.pop_back();
                }
                return false;
            };
            if (extend(0)) return true;
        }
        dead.insert(std::move(key));
        return false;
    };
    if (!search()) return std::nullopt;
    if (options.mode == PartMode::NearlyConnected) attach_witnesses(g, out);
    return out;
}

}  // namespace powfactor
