#include "powfactor/labels.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "powfactor/error.hpp"

namespace powfactor {

namespace {

using enum TreeSet;

constexpr std::array<std::string_view, 10> kSetNames = {"S0", "S1", "S2", "S3", "S1p", "S2p", "S3p", "S2m", "S3m", "S5m"};
constexpr std::array<std::string_view, 10> kLabelNames = {"L0",  "L00", "L1",  "L10", "L2",
                                                          "L20", "L21", "L30", "L31", "L32"};

// The label catalog, one row per label, pairs in the order they are listed.
constexpr SetPair kL0[] = {{S0, S0}};
constexpr SetPair kL00[] = {{S0, S0}, {S1, S3p}, {S1p, S3}, {S2, S2p}, {S2p, S2}, {S3, S1p}, {S3p, S1}};
constexpr SetPair kL1[] = {{S0, S1}, {S1, S0}};
constexpr SetPair kL10[] = {{S0, S1}, {S1, S0}, {S2, S3p}, {S2p, S3}, {S3, S2p}, {S3p, S2}};
constexpr SetPair kL2[] = {{S0, S2}, {S1, S1}, {S2, S0}};
constexpr SetPair kL20[] = {{S0, S2}, {S1, S1}, {S2, S0}, {S3, S3p}, {S3p, S3}};
constexpr SetPair kL21[] = {{S0, S2m}, {S1, S1p}, {S1, S5m}, {S1p, S1}, {S5m, S1}, {S2m, S0}, {S3m, S3m}};
constexpr SetPair kL30[] = {{S0, S3}, {S1, S2}, {S2, S1}, {S3, S0}};
constexpr SetPair kL31[] = {{S0, S3m}, {S1, S2m}, {S2, S1p}, {S2, S5m}, {S2p, S1}, {S3, S0}};
constexpr SetPair kL32[] = {{S0, S3}, {S1, S2p}, {S1p, S2}, {S5m, S2}, {S2m, S1}, {S3m, S0}};

constexpr std::array<std::span<const SetPair>, 10> kPairs = {kL0, kL00, kL1, kL10, kL2, kL20, kL21, kL30, kL31, kL32};
constexpr std::array<int, 10> kWeights = {0, 0, 1, 1, 2, 2, 2, 3, 3, 3};

constexpr std::size_t idx(TreeSet s) { return static_cast<std::size_t>(s); }
constexpr std::size_t idx(Label l) { return static_cast<std::size_t>(l); }

bool set_less(SetPair a, SetPair b) {
    return std::pair(idx(a.p), idx(a.q)) < std::pair(idx(b.p), idx(b.q));
}

std::vector<std::vector<int>> children_of(const TreeShape& t) {
    std::vector<std::vector<int>> ch(t.size());
    for (int i = 1; i < t.size(); ++i) ch[t.parent[i]].push_back(i);
    return ch;
}

int subtree_size(const std::vector<std::vector<int>>& ch, int v) {
    int n = 1;
    for (int c : ch[v]) n += subtree_size(ch, c);
    return n;
}

}  // namespace

std::string_view name(TreeSet s) { return kSetNames[idx(s)]; }
std::string_view name(Label l) { return kLabelNames[idx(l)]; }

std::optional<TreeSet> parse_tree_set(std::string_view text) {
    for (TreeSet s : kAllTreeSets)
        if (name(s) == text) return s;
    return std::nullopt;
}

std::optional<Label> parse_label(std::string_view text) {
    for (Label l : kAllLabels)
        if (name(l) == text) return l;
    return std::nullopt;
}

int weight(Label l) { return kWeights[idx(l)]; }

Label involution(Label l) {
    if (l == Label::L31) return Label::L32;
    if (l == Label::L32) return Label::L31;
    return l;
}

std::span<const SetPair> pairs(Label l) { return kPairs[idx(l)]; }

bool contains(Label l, SetPair pair) {
    auto ps = pairs(l);
    return std::find(ps.begin(), ps.end(), pair) != ps.end();
}

std::optional<Label> plain_label(int w) {
    switch (w) {
        case 0: return Label::L0;
        case 1: return Label::L1;
        case 2: return Label::L2;
        default: return std::nullopt;
    }
}

Label zero_label(int w) {
    switch (w) {
        case 0: return Label::L00;
        case 1: return Label::L10;
        case 2: return Label::L20;
        case 3: return Label::L30;
        default: throw PreconditionError("zero_label weight out of range");
    }
}

bool leq(TreeSet a, TreeSet b) {
    if (a == b) return true;
    switch (b) {
        case S1p: return a == S1;
        case S2: return a == S2m;
        case S2p: return a == S2 || a == S2m;
        case S3: return a == S3m;
        case S3p: return a == S3 || a == S3m;
        default: return false;
    }
}

std::optional<SetPair> admits(Label l, TreeSet p, TreeSet q) {
    std::optional<SetPair> best;
    for (SetPair c : pairs(l))
        if (leq(c.p, p) && leq(c.q, q) && (!best || set_less(c, *best))) best = c;
    return best;
}

int max_order(TreeSet s) {
    constexpr std::array<int, 10> orders = {1, 2, 3, 4, 3, 4, 5, 3, 4, 6};
    return orders[idx(s)];
}

int active_count(TreeSet s) {
    constexpr std::array<int, 10> counts = {0, 1, 2, 3, 1, 2, 3, 2, 3, 5};
    return counts[idx(s)];
}

TreeSet s(int i) {
    constexpr std::array<TreeSet, 4> sets = {S0, S1, S2, S3};
    if (i < 0 || i > 3) throw GuardTrap("tree set index " + std::to_string(i) + " out of range");
    return sets[i];
}

TreeSet sp(int i) {
    constexpr std::array<TreeSet, 4> sets = {S0, S1p, S2p, S3p};
    if (i < 0 || i > 3) throw GuardTrap("tree set index " + std::to_string(i) + " out of range");
    return sets[i];
}

TreeSet s(int i, bool plus) { return plus ? sp(i) : s(i); }

bool is_valid_tree(const TreeShape& t) {
    const int n = t.size();
    if (n == 0 || static_cast<int>(t.dummy.size()) != n || t.parent[0] != -1) return false;
    for (int i = 1; i < n; ++i) {
        // walk to the root; more than n steps means a cycle
        int v = i;
        int steps = 0;
        while (v != 0) {
            v = t.parent[v];
            if (v < 0 || v >= n || ++steps > n) return false;
        }
    }
    return true;
}

bool is_member(const TreeShape& t, TreeSet set) {
    if (!is_valid_tree(t)) return false;
    const int n = t.size();
    const int dummies = static_cast<int>(std::count(t.dummy.begin(), t.dummy.end(), true));
    if (t.dummy[0]) return false;
    auto ch = children_of(t);
    const int root_degree = static_cast<int>(ch[0].size());
    switch (set) {
        case S0:
        case S1:
        case S2:
        case S3: return n == static_cast<int>(idx(set)) + 1 && dummies == 0;
        case S1p: return n == 3 && dummies == 1;
        case S2p: return n == 4 && dummies == 1;
        case S3p: return n == 5 && dummies == 1;
        case S2m: return n == 3 && dummies == 0 && root_degree == 2;
        case S3m: return n == 4 && dummies == 0 && root_degree >= 2;
        case S5m: {
            if (n != 6 || dummies != 0) return false;
            // root children split into a 3-vertex side and a 2-vertex side
            std::vector<int> sizes;
            for (int c : ch[0]) sizes.push_back(subtree_size(ch, c));
            const int k = static_cast<int>(sizes.size());
            for (int mask = 0; mask < (1 << k); ++mask) {
                int sum = 0;
                for (int b = 0; b < k; ++b)
                    if (mask >> b & 1) sum += sizes[b];
                if (sum == 3) return true;
            }
            return false;
        }
    }
    return false;
}

bool fits(const TreeShape& t, TreeSet set) {
    for (TreeSet y : kAllTreeSets)
        if (leq(y, set) && is_member(t, y)) return true;
    return false;
}

std::string canonical_code(const TreeShape& t) {
    auto ch = children_of(t);
    std::function<std::string(int)> code = [&](int v) {
        std::vector<std::string> parts;
        for (int c : ch[v]) parts.push_back(code(c));
        std::sort(parts.begin(), parts.end());
        std::string out = t.dummy[v] ? "(d" : "(";
        for (auto& p : parts) out += p;
        return out + ")";
    };
    return code(0);
}

TreeShape canonical_member(TreeSet s, const std::optional<TreeShape>& shape_hint) {
    if (shape_hint && is_member(*shape_hint, s)) return *shape_hint;
    return canonical_member(s);
}

TreeShape canonical_member(TreeSet set) {
    switch (set) {
        case S0: return {{-1}, {false}};
        case S1: return {{-1, 0}, {false, false}};
        case S2: return {{-1, 0, 1}, {false, false, false}};
        case S3: return {{-1, 0, 1, 2}, {false, false, false, false}};
        case S1p: return {{-1, 0, 1}, {false, false, true}};
        case S2p: return {{-1, 0, 1, 2}, {false, false, false, true}};
        case S3p: return {{-1, 0, 1, 2, 3}, {false, false, false, false, true}};
        case S2m: return {{-1, 0, 0}, {false, false, false}};
        case S3m: return {{-1, 0, 0, 2}, {false, false, false, false}};
        case S5m: return {{-1, 0, 0, 2, 0, 4}, std::vector<bool>(6, false)};
    }
    throw GuardTrap("unknown tree set");
}

std::vector<TreeShape> all_members(TreeSet set) {
    const int n = max_order(set);
    std::map<std::string, TreeShape> found;
    TreeShape t{std::vector<int>(n, -1), std::vector<bool>(n, false)};
    // parent[i] < i enumerates every rooted tree shape at least once
    std::function<void(int)> grow = [&](int i) {
        if (i == n) {
            for (int d = 0; d < n; ++d) {
                std::fill(t.dummy.begin(), t.dummy.end(), false);
                if (d > 0) t.dummy[d] = true;
                if (is_member(t, set)) found.emplace(canonical_code(t), t);
            }
            return;
        }
        for (int p = 0; p < i; ++p) {
            t.parent[i] = p;
            grow(i + 1);
        }
    };
    grow(1);
    std::vector<TreeShape> out;
    for (auto& [code, shape] : found) out.push_back(shape);
    return out;
}

std::string dump_catalog() {
    std::ostringstream out;
    out << "# tree sets: name max_order members\n";
    for (TreeSet set : kAllTreeSets) {
        out << name(set) << " " << max_order(set);
        for (const auto& m : all_members(set)) out << " " << canonical_code(m);
        out << "\n";
    }
    out << "# order\n";
    for (TreeSet a : kAllTreeSets)
        for (TreeSet b : kAllTreeSets)
            if (a != b && leq(a, b)) out << name(a) << " <= " << name(b) << "\n";
    out << "# labels: name weight involution pairs\n";
    for (Label l : kAllLabels) {
        out << name(l) << " " << weight(l) << " " << name(involution(l));
        for (SetPair p : pairs(l)) out << " (" << name(p.p) << "," << name(p.q) << ")";
        out << "\n";
    }
    return out.str();
}

}  // namespace powfactor
