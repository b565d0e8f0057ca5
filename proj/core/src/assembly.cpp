#include "powfactor/assembly.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "powfactor/error.hpp"

namespace powfactor {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

struct TreeCandidate {
    Mask nodes = 0;
    Mask covered = 0;  // active members taken out of the cover
    std::vector<int> order;   // order[0] is the root
    std::vector<int> parent;  // index into order
    int dummy = -1;           // index into order
};

}  // namespace

struct LocalAssembly::Local {
    std::vector<Node> nodes;
    std::vector<Mask> adj;
    Mask outer = 0;
    Mask must = 0;
    std::vector<Mask> near;  // nodes within distance 4
    mutable std::unordered_map<Mask, Mask> memo;

    void prepare() {
        const int n = static_cast<int>(nodes.size());
        outer = must = 0;
        for (int i = 0; i < n; ++i) {
            if (nodes[i].role == Role::Outer) outer |= bit(i);
            else if (nodes[i].active) must |= bit(i);
        }
        near.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            Mask reach = bit(i);
            Mask frontier = bit(i);
            for (int d = 0; d < 4; ++d) {
                Mask next = 0;
                for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
                frontier = next & ~reach;
                reach |= next;
            }
            near[i] = reach;
        }
    }

    bool connected(Mask set) const {
        if (!set) return false;
        Mask seen = set & (~set + 1);
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
            frontier = next & set & ~seen;
            seen |= frontier;
        }
        return seen == set;
    }

    bool nearly_connected(Mask set) const {
        if (connected(set)) return true;
        Mask around = 0;
        for (Mask f = set; f; f &= f - 1) around |= adj[std::countr_zero(f)];
        for (Mask extra = around & ~set; extra; extra &= extra - 1)
            if (connected(set | (extra & (~extra + 1)))) return true;
        return false;
    }

    bool cover(Mask rest) const {
        if (!rest) return true;
        if (std::popcount(rest) % 4 != 0) return false;
        if (auto it = memo.find(rest); it != memo.end()) return it->second != 0;
        const int r = std::countr_zero(rest);
        std::vector<int> pool;
        for (Mask c = rest & near[r] & ~bit(r); c; c &= c - 1) pool.push_back(std::countr_zero(c));
        const std::size_t k = pool.size();
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = x + 1; y < k; ++y)
                for (std::size_t z = y + 1; z < k; ++z) {
                    Mask group = bit(r) | bit(pool[x]) | bit(pool[y]) | bit(pool[z]);
                    if (nearly_connected(group) && cover(rest & ~group)) {
                        memo[rest] = group;
                        return true;
                    }
                }
        memo[rest] = 0;
        return false;
    }

    std::vector<Mask> groups_of(Mask rest) const {
        std::vector<Mask> out;
        while (rest) {
            Mask g = memo.at(rest);
            out.push_back(g);
            rest &= ~g;
        }
        return out;
    }

    std::vector<TreeCandidate> trees(int root, TreeSet target, Mask forbidden) const {
        const int limit = max_order(target);
        std::vector<Mask> sets{bit(root)};
        std::unordered_set<Mask> seen{bit(root)};
        for (std::size_t i = 0; i < sets.size(); ++i) {
            Mask cur = sets[i];
            if (std::popcount(cur) >= limit) continue;
            Mask around = 0;
            for (Mask f = cur; f; f &= f - 1) around |= adj[std::countr_zero(f)];
            for (Mask grow = around & ~cur & ~forbidden; grow; grow &= grow - 1) {
                Mask next = cur | (grow & (~grow + 1));
                if (seen.insert(next).second) sets.push_back(next);
            }
        }
        std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
            return std::pair(std::popcount(a), a) < std::pair(std::popcount(b), b);
        });

        std::vector<TreeCandidate> out;
        for (Mask set : sets) {
            TreeCandidate c;
            c.nodes = set;
            c.order = {root};
            c.parent = {-1};
            Mask seen_here = bit(root);
            for (std::size_t i = 0; i < c.order.size(); ++i)
                for (Mask nb = adj[c.order[i]] & set & ~seen_here; nb; nb &= nb - 1) {
                    int w = std::countr_zero(nb);
                    seen_here |= bit(w);
                    c.order.push_back(w);
                    c.parent.push_back(static_cast<int>(i));
                }
            int inactive = -1;
            int inactive_count = 0;
            for (std::size_t i = 1; i < c.order.size(); ++i)
                if (!nodes[c.order[i]].active) {
                    inactive = static_cast<int>(i);
                    ++inactive_count;
                }
            if (inactive_count > 1) continue;
            std::vector<int> dummy_options;
            if (inactive_count == 1) {
                dummy_options.push_back(inactive);
            } else {
                dummy_options.push_back(-1);
                for (std::size_t i = 1; i < c.order.size(); ++i) dummy_options.push_back(static_cast<int>(i));
            }
            for (int d : dummy_options) {
                TreeShape shape{c.parent, std::vector<bool>(c.order.size(), false)};
                if (d >= 0) shape.dummy[d] = true;
                if (!fits(shape, target)) continue;
                TreeCandidate chosen = c;
                chosen.dummy = d;
                chosen.covered = 0;
                for (std::size_t i = 1; i < c.order.size(); ++i)
                    if (static_cast<int>(i) != d && nodes[c.order[i]].active) chosen.covered |= bit(c.order[i]);
                out.push_back(std::move(chosen));
            }
        }
        return out;
    }

    AttachedTree to_tree(const TreeCandidate& c) const {
        AttachedTree tree;
        for (std::size_t i = 1; i < c.order.size(); ++i)
            tree.push_back({nodes[c.order[i]].vertex, c.parent[i] == 0 ? -1 : c.parent[i] - 1,
                            static_cast<int>(i) == c.dummy});
        return tree;
    }

    std::vector<Part> parts_of(Mask rest) const {
        std::vector<Part> out;
        for (Mask g : groups_of(rest)) {
            Part p;
            for (Mask f = g; f; f &= f - 1) p.members.push_back(nodes[std::countr_zero(f)].vertex);
            std::sort(p.members.begin(), p.members.end());
            out.push_back(std::move(p));
        }
        return out;
    }

    std::optional<Realization> solve_split(int a, TreeSet p, int b, TreeSet q) const {
        auto left = trees(a, p, outer & ~bit(a));
        auto right = trees(b, q, outer & ~bit(b));
        for (const auto& t1 : left)
            for (const auto& t2 : right) {
                if (t1.nodes & t2.nodes) continue;
                Mask rest = must & ~t1.covered & ~t2.covered;
                if (!cover(rest)) continue;
                Realization r;
                r.tail = to_tree(t1);
                r.head = to_tree(t2);
                r.parts = parts_of(rest);
                return r;
            }
        return std::nullopt;
    }

    std::optional<Realization> solve_close() const {
        if (!cover(must)) return std::nullopt;
        Realization r;
        r.parts = parts_of(must);
        return r;
    }
};

int LocalAssembly::add_node(Vertex v, Role role, bool active) {
    if (nodes_.size() >= 64) throw GuardTrap("local assembly exceeds 64 nodes");
    nodes_.push_back({v, role, active});
    adj_.push_back(0);
    return static_cast<int>(nodes_.size()) - 1;
}

void LocalAssembly::link(int x, int y) {
    if (x == y) return;
    adj_[x] |= bit(y);
    adj_[y] |= bit(x);
}

int LocalAssembly::add_outer(Vertex v) { return add_node(v, Role::Outer, false); }

int LocalAssembly::add_junction(Vertex v) { return add_node(v, Role::Junction, true); }

void LocalAssembly::attach(const Realization& r, int tail, int head) {
    std::vector<int> tail_ends, head_ends;
    if (r.subdivided) {
        int prev = tail;
        for (Vertex v : r.path) {
            int x = add_node(v, Role::Member, true);
            link(prev, x);
            if (prev == tail) tail_ends.push_back(x);
            prev = x;
        }
        link(prev, head);
        head_ends.push_back(prev);
        if (r.path.empty()) tail_ends.push_back(head);
    } else {
        auto hang = [&](const AttachedTree& tree, int root, std::vector<int>& ends) {
            std::vector<int> ids;
            for (const auto& node : tree) {
                int x = add_node(node.vertex, Role::Member, !node.dummy);
                ids.push_back(x);
                int p = node.parent < 0 ? root : ids.at(node.parent);
                link(p, x);
                if (node.parent < 0) ends.push_back(x);
            }
        };
        hang(r.tail, tail, tail_ends);
        hang(r.head, head, head_ends);
    }
    if (nodes_[tail].role == Role::Junction) arms_.push_back({tail, tail_ends});
    if (nodes_[head].role == Role::Junction) arms_.push_back({head, head_ends});
    inherited_.insert(inherited_.end(), r.parts.begin(), r.parts.end());
}

Realization LocalAssembly::solve(const std::function<std::optional<Realization>(const Local&)>& attempt,
                                 const std::string& what) const {
    auto finish = [&](Realization r) {
        std::vector<Part> parts = inherited_;
        parts.insert(parts.end(), r.parts.begin(), r.parts.end());
        r.parts = std::move(parts);
        return r;
    };
    Local base;
    base.nodes = nodes_;
    base.adj = adj_;
    base.prepare();
    if (auto r = attempt(base)) return finish(std::move(*r));

    // Split a junction v into an active copy and a dummy copy, handing each
    // child arm to one of them.
    for (std::size_t j = 0; j < nodes_.size(); ++j) {
        std::vector<const Arm*> mine;
        for (const auto& arm : arms_)
            if (arm.junction == static_cast<int>(j)) mine.push_back(&arm);
        const int k = static_cast<int>(mine.size());
        if (k < 2 || nodes_.size() >= 64) continue;
        for (int moved = 1; moved < (1 << k) - 1; ++moved) {
            Local v;
            v.nodes = nodes_;
            v.adj = adj_;
            const int copy = static_cast<int>(v.nodes.size());
            v.nodes.push_back({nodes_[j].vertex, Role::Member, false});
            v.adj.push_back(0);
            for (int t = 0; t < k; ++t) {
                if (!(moved >> t & 1)) continue;
                for (int e : mine[t]->ends) {
                    v.adj[j] &= ~bit(e);
                    v.adj[e] &= ~bit(static_cast<int>(j));
                    v.adj[copy] |= bit(e);
                    v.adj[e] |= bit(copy);
                }
            }
            v.prepare();
            if (auto r = attempt(v)) return finish(std::move(*r));
        }
    }
    throw GuardTrap("no local completion for " + what + ": " + describe());
}

Realization LocalAssembly::split(int a, TreeSet p, int b, TreeSet q) const {
    return solve([&](const Local& l) { return l.solve_split(a, p, b, q); },
                 "split (" + std::string(name(p)) + "," + std::string(name(q)) + ")");
}

Realization LocalAssembly::close() const {
    return solve([](const Local& l) { return l.solve_close(); }, "close");
}

std::string LocalAssembly::describe() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        out << i << ":" << n.vertex
            << (n.role == Role::Outer ? "o" : n.role == Role::Junction ? "j" : (n.active ? "a" : "d")) << "[";
        bool first = true;
        for (Mask nb = adj_[i]; nb; nb &= nb - 1) {
            out << (first ? "" : ",") << std::countr_zero(nb);
            first = false;
        }
        out << "] ";
    }
    return out.str();
}

}  // namespace powfactor
