#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "powfactor/labels.hpp"
#include "powfactor/realization.hpp"

namespace {

using namespace powfactor;
using enum TreeSet;

// The pair lists, typed in a second time from the definitions.
const std::vector<std::pair<Label, std::vector<SetPair>>> kTranscribed = {
    {Label::L0, {{S0, S0}}},
    {Label::L00, {{S0, S0}, {S1, S3p}, {S1p, S3}, {S2, S2p}, {S2p, S2}, {S3, S1p}, {S3p, S1}}},
    {Label::L1, {{S0, S1}, {S1, S0}}},
    {Label::L10, {{S0, S1}, {S1, S0}, {S2, S3p}, {S2p, S3}, {S3, S2p}, {S3p, S2}}},
    {Label::L2, {{S0, S2}, {S1, S1}, {S2, S0}}},
    {Label::L20, {{S0, S2}, {S1, S1}, {S2, S0}, {S3, S3p}, {S3p, S3}}},
    {Label::L21, {{S0, S2m}, {S1, S1p}, {S1, S5m}, {S1p, S1}, {S5m, S1}, {S2m, S0}, {S3m, S3m}}},
    {Label::L30, {{S0, S3}, {S1, S2}, {S2, S1}, {S3, S0}}},
    {Label::L31, {{S0, S3m}, {S1, S2m}, {S2, S1p}, {S2, S5m}, {S2p, S1}, {S3, S0}}},
    {Label::L32, {{S0, S3}, {S1, S2p}, {S1p, S2}, {S5m, S2}, {S2m, S1}, {S3m, S0}}},
};

std::set<std::pair<TreeSet, TreeSet>> as_set(std::span<const SetPair> ps) {
    std::set<std::pair<TreeSet, TreeSet>> out;
    for (auto p : ps) out.insert({p.p, p.q});
    return out;
}

// Generated order: S1 <= S1p and S_i^- <= S_i <= S_i^+ for i = 2, 3, closed.
bool order_oracle(TreeSet a, TreeSet b) {
    const std::set<std::pair<TreeSet, TreeSet>> base = {{S1, S1p}, {S2m, S2}, {S2, S2p}, {S3m, S3}, {S3, S3p}};
    if (a == b || base.count({a, b})) return true;
    for (TreeSet c : kAllTreeSets)
        if (base.count({a, c}) && base.count({c, b})) return true;
    return false;
}

TEST(Labels, CatalogMatchesTheDefinitions) {
    for (const auto& [label, pairs_] : kTranscribed) EXPECT_EQ(as_set(pairs(label)), as_set(pairs_)) << name(label);
}

TEST(Labels, Weights) {
    for (Label l : kAllLabels) {
        const auto n = name(l);
        EXPECT_EQ(weight(l), n[1] - '0') << n;
    }
}

TEST(Labels, Involution) {
    EXPECT_EQ(involution(Label::L31), Label::L32);
    EXPECT_EQ(involution(Label::L32), Label::L31);
    EXPECT_EQ(involution(Label::L2), Label::L2);
    for (Label l : kAllLabels) {
        EXPECT_EQ(involution(involution(l)), l);
        EXPECT_EQ(weight(involution(l)), weight(l));
        for (SetPair p : pairs(l)) EXPECT_TRUE(contains(involution(l), {p.q, p.p})) << name(l);
    }
}

TEST(Labels, IndexSumsAgreeWithWeight) {
    // pairs built only from S_x and S_x^+ have x + y = w (mod 4)
    auto index = [](TreeSet s) -> int {
        switch (s) {
            case S0: return 0;
            case S1: case S1p: return 1;
            case S2: case S2p: return 2;
            case S3: case S3p: return 3;
            default: return -1;
        }
    };
    for (Label l : kAllLabels) {
        if (l == Label::L21 || l == Label::L31 || l == Label::L32) continue;
        for (SetPair p : pairs(l)) {
            ASSERT_GE(index(p.p), 0);
            ASSERT_GE(index(p.q), 0);
            EXPECT_EQ((index(p.p) + index(p.q)) % 4, weight(l)) << name(l);
        }
    }
}

TEST(Order, Examples) {
    EXPECT_TRUE(leq(S2m, S2p));
    EXPECT_TRUE(leq(S1, S1p));
    EXPECT_FALSE(leq(S1, S2));
}

TEST(Order, IsTheGeneratedPartialOrder) {
    for (TreeSet a : kAllTreeSets)
        for (TreeSet b : kAllTreeSets) {
            EXPECT_EQ(leq(a, b), order_oracle(a, b)) << name(a) << " " << name(b);
            if (a != b && leq(a, b)) EXPECT_FALSE(leq(b, a));
            for (TreeSet c : kAllTreeSets)
                if (leq(a, b) && leq(b, c)) EXPECT_TRUE(leq(a, c));
        }
    for (TreeSet x : kAllTreeSets) {
        if (x == S0 || x == S5m) continue;
        bool related = false;
        for (TreeSet y : kAllTreeSets) related |= x != y && (leq(x, y) || leq(y, x));
        EXPECT_TRUE(related) << name(x);
    }
    for (TreeSet y : kAllTreeSets) {
        if (y == S0 || y == S5m) continue;
        EXPECT_FALSE(leq(S0, y));
        EXPECT_FALSE(leq(S5m, y));
    }
}

TEST(Admits, Examples) {
    EXPECT_EQ(admits(Label::L20, S3, S3p), (SetPair{S3, S3p}));
    EXPECT_EQ(admits(Label::L21, S1, S1p), (SetPair{S1, S1p}));
    EXPECT_FALSE(admits(Label::L2, S3, S3p));
    EXPECT_EQ(admits(Label::L21, S3, S3p), (SetPair{S3m, S3m}));
}

TEST(Admits, AgreesWithAScanOverPairs) {
    for (Label l : kAllLabels)
        for (TreeSet p : kAllTreeSets)
            for (TreeSet q : kAllTreeSets) {
                std::optional<SetPair> best;
                for (const auto& [label, ps] : kTranscribed) {
                    if (label != l) continue;
                    for (SetPair c : ps) {
                        if (!order_oracle(c.p, p) || !order_oracle(c.q, q)) continue;
                        if (!best || std::pair{c.p, c.q} < std::pair{best->p, best->q}) best = c;
                    }
                }
                EXPECT_EQ(admits(l, p, q), best) << name(l) << " " << name(p) << " " << name(q);
            }
}

TEST(Names, RoundTrip) {
    for (Label l : kAllLabels) EXPECT_EQ(parse_label(name(l)), l);
    for (TreeSet s : kAllTreeSets) EXPECT_EQ(parse_tree_set(name(s)), s);
    EXPECT_FALSE(parse_label("L4"));
    EXPECT_FALSE(parse_tree_set("S4"));
}

// Independent rooted-tree enumeration for the membership checks.
std::string code(const TreeShape& t, int v = 0) {
    std::vector<std::string> kids;
    for (int c = 1; c < t.size(); ++c)
        if (t.parent[c] == v) kids.push_back(code(t, c));
    std::sort(kids.begin(), kids.end());
    std::string out = t.dummy[v] ? "[*" : "[";
    for (auto& k : kids) out += k;
    return out + "]";
}

std::vector<TreeShape> rooted_trees(int n) {
    std::vector<TreeShape> out;
    std::set<std::string> seen;
    TreeShape t{std::vector<int>(n, -1), std::vector<bool>(n, false)};
    std::function<void(int)> go = [&](int i) {
        if (i == n) {
            if (seen.insert(code(t)).second) out.push_back(t);
            return;
        }
        for (int p = 0; p < i; ++p) {
            t.parent[i] = p;
            go(i + 1);
        }
    };
    go(1);
    return out;
}

int root_degree(const TreeShape& t) { return static_cast<int>(std::count(t.parent.begin(), t.parent.end(), 0)); }

std::set<std::string> codes(const std::vector<TreeShape>& ts) {
    std::set<std::string> out;
    for (const auto& t : ts) out.insert(code(t));
    return out;
}

TEST(Members, PlainSetsHoldEveryRootedTree) {
    const std::vector<int> counts = {1, 1, 2, 4};  // rooted trees on 1..4 vertices
    for (int i = 0; i <= 3; ++i) {
        EXPECT_EQ(codes(all_members(s(i))), codes(rooted_trees(i + 1)));
        EXPECT_EQ(static_cast<int>(all_members(s(i)).size()), counts[i]);
    }
}

TEST(Members, PlusSetsCarryOneNonRootDummy) {
    for (int i = 1; i <= 3; ++i) {
        std::set<std::string> expect;
        for (auto t : rooted_trees(i + 2))
            for (int d = 1; d < t.size(); ++d) {
                auto u = t;
                u.dummy[d] = true;
                expect.insert(code(u));
            }
        EXPECT_EQ(codes(all_members(sp(i))), expect) << i;
    }
}

TEST(Members, RestrictedSets) {
    std::set<std::string> s2m;
    std::set<std::string> s3m;
    for (auto t : rooted_trees(3))
        if (root_degree(t) == 2) s2m.insert(code(t));
    for (auto t : rooted_trees(4))
        if (root_degree(t) >= 2) s3m.insert(code(t));
    EXPECT_EQ(codes(all_members(S2m)), s2m);
    EXPECT_EQ(s2m.size(), 1u);
    EXPECT_EQ(codes(all_members(S3m)), s3m);
    EXPECT_EQ(s3m.size(), 2u);  // P4 and K_{1,3}, rooted at a degree >= 2 vertex

    // S5m: an S3 tree and an S2 tree glued at their roots
    std::set<std::string> s5m;
    for (const auto& a : rooted_trees(4))
        for (const auto& b : rooted_trees(3)) {
            TreeShape t = a;
            for (int c = 1; c < b.size(); ++c) {
                t.parent.push_back(b.parent[c] == 0 ? 0 : b.parent[c] + 3);
                t.dummy.push_back(false);
            }
            s5m.insert(code(t));
        }
    EXPECT_EQ(codes(all_members(S5m)), s5m);
}

TEST(Members, CanonicalMemberBelongs) {
    for (TreeSet x : kAllTreeSets) EXPECT_TRUE(is_member(canonical_member(x), x)) << name(x);
    EXPECT_EQ(canonical_member(S0).size(), 1);
    EXPECT_EQ(root_degree(canonical_member(S2m)), 2);
    EXPECT_EQ(canonical_member(S5m).size(), 6);
}

TEST(Members, ShapeHint) {
    const TreeShape star{{-1, 0, 0, 0}, {false, false, false, false}};  // K_{1,3} rooted at the centre
    EXPECT_EQ(canonical_code(canonical_member(S3, star)), canonical_code(star));
    EXPECT_EQ(canonical_code(canonical_member(S2, star)), canonical_code(canonical_member(S2)));
    EXPECT_EQ(canonical_code(canonical_member(S3, std::nullopt)), canonical_code(canonical_member(S3)));
}

TEST(Members, FitsFollowsTheOrder) {
    for (TreeSet x : kAllTreeSets)
        for (const auto& t : all_members(x))
            for (TreeSet y : kAllTreeSets)
                if (leq(x, y)) EXPECT_TRUE(fits(t, y)) << name(x) << " in " << name(y);
}

TEST(Operations, ExactOperationsOfEachLabel) {
    for (Label l : kAllLabels) {
        const auto ops = exact_operations(l);
        std::size_t splits = 0;
        for (const auto& op : ops) {
            if (op.is_split()) {
                ++splits;
                EXPECT_TRUE(contains(l, op.sets));
            } else {
                EXPECT_EQ(plain_label(op.times), l);
            }
        }
        EXPECT_EQ(splits, pairs(l).size());
        EXPECT_EQ(ops.size() - splits, plain_label(weight(l)) == l ? 1u : 0u) << name(l);
    }
}

TEST(Catalog, DumpMentionsEverything) {
    const auto text = dump_catalog();
    for (Label l : kAllLabels) EXPECT_NE(text.find(std::string(name(l))), std::string::npos);
    for (TreeSet x : kAllTreeSets) EXPECT_NE(text.find(std::string(name(x))), std::string::npos);
}

}  // namespace
