#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace powfactor {

// Sets of small rooted trees. `p` marks the variants with one dummy vertex,
// `m` the restricted variants.
enum class TreeSet : std::uint8_t { S0, S1, S2, S3, S1p, S2p, S3p, S2m, S3m, S5m };

inline constexpr std::array<TreeSet, 10> kAllTreeSets = {
    TreeSet::S0,  TreeSet::S1,  TreeSet::S2,  TreeSet::S3,  TreeSet::S1p,
    TreeSet::S2p, TreeSet::S3p, TreeSet::S2m, TreeSet::S3m, TreeSet::S5m,
};

enum class Label : std::uint8_t { L0, L00, L1, L10, L2, L20, L21, L30, L31, L32 };

inline constexpr std::array<Label, 10> kAllLabels = {
    Label::L0, Label::L00, Label::L1, Label::L10, Label::L2, Label::L20, Label::L21, Label::L30, Label::L31, Label::L32,
};

struct SetPair {
    TreeSet p;
    TreeSet q;
    friend bool operator==(const SetPair&, const SetPair&) = default;
};

std::string_view name(TreeSet s);
std::string_view name(Label l);
std::optional<TreeSet> parse_tree_set(std::string_view text);
std::optional<Label> parse_label(std::string_view text);

int weight(Label l);
Label involution(Label l);
std::span<const SetPair> pairs(Label l);
bool contains(Label l, SetPair pair);

// The label L_w (w = 0, 1, 2) that may be subdivided w times.
std::optional<Label> plain_label(int w);
// L_{w0}: L0 -> L00 ... L3 -> L30.
Label zero_label(int w);

bool leq(TreeSet a, TreeSet b);

// Lexicographically smallest (p1, q1) in l with p1 <= p and q1 <= q.
std::optional<SetPair> admits(Label l, TreeSet p, TreeSet q);

// Largest vertex count (root included) of a member of s.
int max_order(TreeSet s);
// Number of active non-root vertices of the members of s.
int active_count(TreeSet s);

// S0..S3 by index, S1p..S3p by index. sp(0) is S0: a zero-vertex tree has no
// room for a dummy.
TreeSet s(int i);
TreeSet sp(int i);
// s(i) or sp(i).
TreeSet s(int i, bool plus);

// Rooted tree on up to 6 slots. Slot 0 is the root; parent[0] == -1.
struct TreeShape {
    std::vector<int> parent;
    std::vector<bool> dummy;

    int size() const { return static_cast<int>(parent.size()); }
    friend bool operator==(const TreeShape&, const TreeShape&) = default;
};

bool is_valid_tree(const TreeShape& t);
bool is_member(const TreeShape& t, TreeSet s);
// Member of some Y with Y <= s.
bool fits(const TreeShape& t, TreeSet s);

// Isomorphism-invariant encoding of a rooted tree with dummy marks.
std::string canonical_code(const TreeShape& t);

TreeShape canonical_member(TreeSet s);
// The hint itself when it is a member of s, else the fixed member.
TreeShape canonical_member(TreeSet s, const std::optional<TreeShape>& shape_hint);
// Every member of s up to rooted isomorphism, ordered by canonical code.
std::vector<TreeShape> all_members(TreeSet s);

std::string dump_catalog();

}  // namespace powfactor
