#include "powfactor/gadgets.hpp"

#include <algorithm>
#include <map>

#include "powfactor/assembly.hpp"
#include "powfactor/error.hpp"

namespace powfactor {

namespace {

using enum TreeSet;
using Op = Operation;

Op split(TreeSet p, TreeSet q) { return Op::split(p, q); }
Op sub(int k) { return Op::subdivide(k); }

// Index i and plus flag of S_i / S_i^+.
struct Indexed {
    int i;
    bool plus;
};

Indexed decode(TreeSet t) {
    switch (t) {
        case S0: return {0, false};
        case S1: return {1, false};
        case S2: return {2, false};
        case S3: return {3, false};
        case S1p: return {1, true};
        case S2p: return {2, true};
        case S3p: return {3, true};
        default: throw GuardTrap("set " + std::string(name(t)) + " has no index");
    }
}

bool in_range(int i) { return i >= 0 && i <= 3; }

// admits() on index form; out-of-range indices simply fail.
bool allows(Label l, int a, bool ap, int b, bool bp) {
    if (!in_range(a) || !in_range(b)) return false;
    return admits(l, s(a, ap), s(b, bp)).has_value();
}

bool is_plain(const Arc& e, int w) { return plain_label(w) == e.label(); }

// An L_w edge is subdivided; anything else gets the split.
Op sub_or(const Arc& e, Op otherwise) { return is_plain(e, e.weight()) ? sub(e.weight()) : otherwise; }

[[noreturn]] void gap(const std::string& where, const Op& op) {
    throw GuardTrap("no branch in " + where + " for " + op.to_string());
}

std::vector<Vertex> merge(std::vector<Vertex> a, const std::vector<Vertex>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct Row {
    SetPair e;
    Op first;
    Op second;
};

const Row& lookup(const std::vector<Row>& table, const Op& op, const std::string& where) {
    for (const auto& row : table)
        if (row.e == op.sets) return row;
    gap(where, op);
}

}  // namespace

EdgeGadget::EdgeGadget(Label label, Vertex tail, Vertex head, std::string kind)
    : label_(label), tail_(tail), head_(head), kind_(std::move(kind)) {}

void EdgeGadget::own(const std::vector<Vertex>& vertices) {
    owned_ = vertices;
    std::sort(owned_.begin(), owned_.end());
    if (std::adjacent_find(owned_.begin(), owned_.end()) != owned_.end())
        throw GuardTrap(kind_ + ": a vertex is owned twice");
}

Realization EdgeGadget::realize(const Operation& op) const {
    const std::string where = kind_ + " " + std::string(name(label_)) + " " + std::to_string(tail_) + "->" +
                              std::to_string(head_) + " " + op.to_string();
    Operation exact = op;
    if (op.is_split()) {
        auto a = admits(label_, op.sets.p, op.sets.q);
        if (!a) throw GuardTrap(where + ": label does not admit the split");
        exact = Operation::split(a->p, a->q);
    } else if (plain_label(op.times) != label_) {
        throw GuardTrap(where + ": label cannot be subdivided " + std::to_string(op.times) + " times");
    }

    Realization r;
    try {
        r = do_realize(exact);
    } catch (const GuardTrap& e) {
        throw GuardTrap(std::string(e.what()) + "\n  in " + where);
    }

    auto fail = [&](const std::string& why) { throw GuardTrap(where + ": " + why); };
    if (exact.is_split()) {
        if (r.subdivided || !r.path.empty()) fail("split produced a path");
        if (!fits(shape_of(r.tail), exact.sets.p)) fail("tail tree outside " + std::string(name(exact.sets.p)));
        if (!fits(shape_of(r.head), exact.sets.q)) fail("head tree outside " + std::string(name(exact.sets.q)));
    } else {
        if (!r.subdivided || !r.tail.empty() || !r.head.empty()) fail("subdivision produced trees");
        if (static_cast<int>(r.path.size()) != exact.times) fail("wrong subdivision length");
    }
    std::vector<Vertex> covered = r.path;
    for (const auto* tree : {&r.tail, &r.head})
        for (const auto& node : *tree) {
            if (!node.dummy) covered.push_back(node.vertex);
            else if (!std::binary_search(owned_.begin(), owned_.end(), node.vertex)) fail("foreign dummy vertex");
        }
    for (const auto& part : r.parts) {
        if (part.members.size() != 4) fail("part of size " + std::to_string(part.members.size()));
        covered.insert(covered.end(), part.members.begin(), part.members.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != owned_) fail("vertices not covered exactly once");
    return r;
}

Realization Arc::realize(const Operation& op) const {
    if (!reversed) return gadget->realize(op);
    Realization r = gadget->realize(op.reversed());
    std::swap(r.tail, r.head);
    std::reverse(r.path.begin(), r.path.end());
    return r;
}

Arc arc_from(GadgetPtr g, Vertex from) {
    if (g->tail() != from && g->head() != from) throw GuardTrap("arc_from: vertex is not an endpoint");
    bool rev = g->tail() != from;
    return {std::move(g), rev};
}

// ---------------------------------------------------------------------------

OriginalEdge::OriginalEdge(Vertex u, Vertex v) : EdgeGadget(Label::L0, u, v, "edge") {}

Realization OriginalEdge::do_realize(const Operation& exact) const {
    Realization r;
    r.subdivided = !exact.is_split();
    return r;
}

// ---------------------------------------------------------------------------

Label ParallelGadget::label_for(const Arc& e1, const Arc& e2) {
    if (e1.label() == Label::L30 && e2.label() == Label::L30) return Label::L21;
    if (e1.label() == Label::L1 && e2.label() == Label::L1) return Label::L2;
    return zero_label((e1.weight() + e2.weight()) % 4);
}

ParallelGadget::ParallelGadget(Arc e1, Arc e2)
    : EdgeGadget(label_for(e1, e2), e1.tail(), e1.head(), "parallel"), e1_(std::move(e1)), e2_(std::move(e2)) {
    if (e1_.tail() != e2_.tail() || e1_.head() != e2_.head()) throw GuardTrap("parallel: arcs not aligned");
    if (e1_.weight() < 1 || e1_.weight() > e2_.weight()) throw GuardTrap("parallel: weights not normalized");
    if (e1_.label() == Label::L30 && e2_.label() != Label::L30) throw GuardTrap("parallel: e1 is L30");
    own(merge(e1_.gadget->owned(), e2_.gadget->owned()));
}

Realization ParallelGadget::do_realize(const Operation& op) const {
    const Label l1 = e1_.label();
    const Label l2 = e2_.label();
    Op o1, o2;
    if (l1 == Label::L1 && l2 == Label::L1) {
        if (!op.is_split()) {
            Realization r1 = e1_.realize(sub(1));
            Realization r2 = e2_.realize(sub(1));
            Realization r;
            r.subdivided = true;
            r.path = {r1.path.at(0), r2.path.at(0)};
            r.parts = r1.parts;
            r.parts.insert(r.parts.end(), r2.parts.begin(), r2.parts.end());
            return r;
        }
        if (op.sets == SetPair{S0, S2}) o1 = o2 = split(S0, S1);
        else if (op.sets == SetPair{S2, S0}) o1 = o2 = split(S1, S0);
        else if (op.sets == SetPair{S1, S1}) o1 = split(S1, S0), o2 = split(S0, S1);
        else gap("parallel L1+L1", op);
    } else if (l1 == Label::L30 && l2 == Label::L30) {
        static const std::vector<Row> table = {
            {{S0, S2m}, split(S2, S1), split(S2, S1)}, {{S2m, S0}, split(S1, S2), split(S1, S2)},
            {{S1, S1p}, split(S1, S2), split(S0, S3)}, {{S1p, S1}, split(S2, S1), split(S3, S0)},
            {{S1, S5m}, split(S1, S2), split(S0, S3)}, {{S5m, S1}, split(S2, S1), split(S3, S0)},
            {{S3m, S3m}, split(S2, S1), split(S1, S2)},
        };
        const Row& row = lookup(table, op, "parallel L30+L30");
        o1 = row.first;
        o2 = row.second;
    } else {
        return general(op);
    }
    LocalAssembly la;
    int a = la.add_outer(tail());
    int b = la.add_outer(head());
    la.attach(e1_.realize(o1), a, b);
    la.attach(e2_.realize(o2), a, b);
    return la.split(a, op.sets.p, b, op.sets.q);
}

Realization ParallelGadget::general(const Operation& op) const {
    if (!op.is_split()) gap("parallel", op);
    const Label l1 = e1_.label();
    const Label l2 = e2_.label();
    const int i = e1_.weight();
    const int j = e2_.weight();
    const auto [x, xp] = decode(op.sets.p);
    const auto [y, yp] = decode(op.sets.q);
    Op o1, o2;
    bool done = true;

    if (!xp && !yp && x + y == i + j) {
        if (x <= j) {
            if (allows(l2, x, false, j - x, false)) o2 = split(s(x), s(j - x)), o1 = split(S0, s(i));
            else if (l2 == Label::L21 && x == 1 && y == 2) o1 = split(S1, S0), o2 = split(S0, S2m);
            else done = false;
        } else {
            if (allows(l2, j - y, false, y, false)) o2 = split(s(j - y), s(y)), o1 = split(s(i), S0);
            else if (l2 == Label::L21 && x == 2 && y == 1) o1 = split(S0, S1), o2 = split(S2m, S0);
            else done = false;
        }
    } else if (!xp && !yp && x + y == i + j - 4) {
        if (x == 0) {
            if (allows(l1, i - y, false, y, false)) o1 = split(s(i - y), s(y)), o2 = split(s(j), S0);
            else if (allows(l2, j - y, false, y, false)) o2 = split(s(j - y), s(y)), o1 = split(s(i), S0);
            else if (y == 1 && l1 == Label::L21 && l2 == Label::L31) o1 = split(S0, S2m), o2 = split(S0, S3m);
            else if (y == 2 && l1 == Label::L32 && l2 == Label::L32) o1 = o2 = split(S2m, S1);
            else done = false;
        } else if (y == 0) {
            if (allows(l1, x, false, i - x, false)) o1 = split(s(x), s(i - x)), o2 = split(S0, s(j));
            else if (allows(l2, x, false, j - x, false)) o2 = split(s(x), s(j - x)), o1 = split(S0, s(i));
            else if (x == 1 && l1 == Label::L21 && l2 == Label::L32) o1 = split(S2m, S0), o2 = split(S3m, S0);
            else if (x == 2 && l1 == Label::L31 && l2 == Label::L31) o1 = o2 = split(S1, S2m);
            else done = false;
        } else if (x == 1 && y == 1) {
            if (l1 == Label::L31) o1 = split(S1, S2m), o2 = split(S0, S3);
            else if (l1 == Label::L32) o1 = split(S2m, S1), o2 = split(S3, S0);
            else done = false;
        } else {
            done = false;
        }
    } else if ((xp || yp) && x + y == i + j) {
        if (yp) {
            if (x <= j) o2 = split(s(x), sp(j - x)), o1 = split(S0, s(i));
            else o2 = split(s(j - y), sp(y)), o1 = split(s(i), S0);
        } else {
            if (y <= j) o2 = split(sp(j - y), s(y)), o1 = split(s(i), S0);
            else o2 = split(sp(x), s(j - x)), o1 = split(S0, s(i));
        }
    } else if ((xp || yp) && i == 1 && j == 1 && x + y == 6) {
        // one of the two is not L1 and takes the big side
        const bool first_heavy = l1 != Label::L1;
        Op heavy = yp ? split(S3, S2p) : split(S2p, S3);
        Op light = yp ? split(S0, S1) : split(S1, S0);
        o1 = first_heavy ? heavy : light;
        o2 = first_heavy ? light : heavy;
    } else {
        done = false;
    }
    if (!done) gap("parallel general " + std::string(name(l1)) + "+" + std::string(name(l2)), op);

    LocalAssembly la;
    int a = la.add_outer(tail());
    int b = la.add_outer(head());
    la.attach(e1_.realize(o1), a, b);
    la.attach(e2_.realize(o2), a, b);
    return la.split(a, op.sets.p, b, op.sets.q);
}

// ---------------------------------------------------------------------------

SeriesGadget::Case SeriesGadget::classify(Label l1, Label l2) {
    if (l1 == Label::L0 && (l2 == Label::L0 || l2 == Label::L1)) return Case::Path;
    if (l1 == Label::L0 && l2 == Label::L21) return Case::ZeroTwentyOne;
    if (l1 == Label::L00 && l2 == Label::L21) return Case::DoubleZeroTwentyOne;
    if (l1 == Label::L21 && l2 == Label::L31) return Case::TwentyOneThirtyOne;
    if (l1 == Label::L32 && l2 == Label::L32) return Case::ThirtyTwoThirtyTwo;
    return Case::General;
}

Label SeriesGadget::label_for(const Arc& e1, const Arc& e2) {
    switch (classify(e1, e2)) {
        case Case::Path: return *plain_label(e2.weight() + 1);
        case Case::ZeroTwentyOne:
        case Case::DoubleZeroTwentyOne: return Label::L31;
        case Case::TwentyOneThirtyOne: return Label::L21;
        case Case::ThirtyTwoThirtyTwo: return Label::L32;
        case Case::General: return zero_label((e1.weight() + e2.weight() + 1) % 4);
    }
    throw GuardTrap("series: unknown case");
}

std::string SeriesGadget::case_id(Case c) {
    switch (c) {
        case Case::Path: return "series-path";
        case Case::ZeroTwentyOne: return "series-0-21";
        case Case::DoubleZeroTwentyOne: return "series-00-21";
        case Case::TwentyOneThirtyOne: return "series-21-31";
        case Case::ThirtyTwoThirtyTwo: return "series-32-32";
        case Case::General: return "series-general";
    }
    return "series";
}

SeriesGadget::SeriesGadget(Arc e1, Arc e2)
    : EdgeGadget(label_for(e1, e2), e1.tail(), e2.head(), case_id(classify(e1, e2))),
      e1_(std::move(e1)),
      e2_(std::move(e2)),
      case_(classify(e1_, e2_)),
      v_(e1_.head()) {
    if (e2_.tail() != v_) throw GuardTrap("series: arcs do not meet");
    if (e1_.weight() > e2_.weight()) throw GuardTrap("series: weights not normalized");
    own(merge(merge(e1_.gadget->owned(), e2_.gadget->owned()), {v_}));
}

Realization SeriesGadget::assemble(const Operation& op, const Operation& o1, const Operation& o2) const {
    LocalAssembly la;
    int a = la.add_outer(tail());
    int j = la.add_junction(v_);
    int b = la.add_outer(head());
    la.attach(e1_.realize(o1), a, j);
    la.attach(e2_.realize(o2), j, b);
    return la.split(a, op.sets.p, b, op.sets.q);
}

Realization SeriesGadget::do_realize(const Operation& op) const {
    switch (case_) {
        case Case::Path: {
            const int j = e2_.weight();
            if (!op.is_split()) {
                Realization r1 = e1_.realize(sub(0));
                Realization r2 = e2_.realize(sub(j));
                Realization r;
                r.subdivided = true;
                r.path.push_back(v_);
                r.path.insert(r.path.end(), r2.path.begin(), r2.path.end());
                r.parts = r1.parts;
                r.parts.insert(r.parts.end(), r2.parts.begin(), r2.parts.end());
                return r;
            }
            const int x = decode(op.sets.p).i;
            if (x == 0) return assemble(op, split(S0, S0), sub(j));
            return assemble(op, sub(0), split(s(x - 1), s(j + 1 - x)));
        }
        case Case::ZeroTwentyOne: {
            if (op.sets == SetPair{S0, S3m}) return assemble(op, split(S0, S0), split(S3m, S3m));
            static const std::vector<Row> table = {
                {{S1, S2m}, sub(0), split(S0, S2m)}, {{S2, S1p}, sub(0), split(S1, S1p)},
                {{S2, S5m}, sub(0), split(S1, S5m)}, {{S2p, S1}, sub(0), split(S1p, S1)},
                {{S3, S0}, sub(0), split(S2m, S0)},
            };
            const Row& row = lookup(table, op, "series L0+L21");
            return assemble(op, row.first, row.second);
        }
        case Case::DoubleZeroTwentyOne: {
            static const std::vector<Row> table = {
                {{S0, S3m}, split(S0, S0), split(S3m, S3m)},  {{S1, S2m}, split(S1, S3p), split(S0, S2m)},
                {{S2, S1p}, split(S2, S2p), split(S1, S1p)},  {{S2, S5m}, split(S2, S2p), split(S1, S5m)},
                {{S2p, S1}, split(S2p, S2), split(S1p, S1)},  {{S3, S0}, split(S3, S1p), split(S2m, S0)},
            };
            const Row& row = lookup(table, op, "series L00+L21");
            return assemble(op, row.first, row.second);
        }
        case Case::TwentyOneThirtyOne: {
            static const std::vector<Row> table = {
                {{S0, S2m}, split(S0, S2m), split(S1, S2m)},   {{S1, S1p}, split(S1, S1p), split(S2, S1p)},
                {{S1, S5m}, split(S1, S1p), split(S2, S5m)},   {{S1p, S1}, split(S1p, S1), split(S2p, S1)},
                {{S5m, S1}, split(S5m, S1), split(S2p, S1)},
                {{S2m, S0}, split(S2m, S0), split(S3, S0)},    {{S3m, S3m}, split(S3m, S3m), split(S0, S3m)},
            };
            const Row& row = lookup(table, op, "series L21+L31");
            return assemble(op, row.first, row.second);
        }
        case Case::ThirtyTwoThirtyTwo: {
            static const std::vector<Row> table = {
                {{S0, S3}, split(S0, S3), split(S0, S3)},       {{S1, S2p}, split(S1, S2p), split(S1, S2p)},
                {{S1p, S2}, split(S1p, S2), split(S1p, S2)},    {{S5m, S2}, split(S5m, S2), split(S1p, S2)},
                {{S2m, S1}, split(S2m, S1), split(S2m, S1)},    {{S3m, S0}, split(S3m, S0), split(S3m, S0)},
            };
            const Row& row = lookup(table, op, "series L32+L32");
            return assemble(op, row.first, row.second);
        }
        case Case::General: return general(op);
    }
    gap("series", op);
}

Realization SeriesGadget::general(const Operation& op) const {
    if (!op.is_split()) gap("series general", op);
    const Label l1 = e1_.label();
    const Label l2 = e2_.label();
    const int i = e1_.weight();
    const int j = e2_.weight();
    const auto [x, xp] = decode(op.sets.p);
    const auto [y, yp] = decode(op.sets.q);
    const bool plain1 = is_plain(e1_, i);
    const bool plain2 = is_plain(e2_, j);
    const std::string where = "series general " + std::string(name(l1)) + "+" + std::string(name(l2));

    if (i + j + 1 <= 3) {
        if (!xp && !yp && x + y == i + j + 1) {
            if (y <= j) {
                if (!allows(l2, j - y, false, y, false)) gap(where, op);
                return assemble(op, plain1 ? sub(i) : split(s(x), sp(i + 4 - x)), split(s(j - y), s(y)));
            }
            return assemble(op, split(s(x), s(i - x)), plain2 ? sub(j) : split(sp(j + 4 - y), s(y)));
        }
        if ((xp || yp) && x + y == i + j + 5) {
            if (l1 == Label::L0 && plain2) gap(where, op);
            if (yp) {
                if (l1 != Label::L0) return assemble(op, split(s(x), sp(4 - x)), plain2 ? sub(j) : split(s(j + 4 - y), sp(y)));
                return assemble(op, sub(0), split(s(x - 1), sp(y)));
            }
            if (l1 != Label::L0) return assemble(op, split(sp(x), s(4 - x)), plain2 ? sub(j) : split(sp(j + 4 - y), s(y)));
            return assemble(op, sub(0), split(sp(x - 1), s(y)));
        }
        gap(where, op);
    }

    if (!xp && !yp && x + y == i + j - 3) {
        if (allows(l1, x, false, i - x, false)) return assemble(op, split(s(x), s(i - x)), split(sp(j - y), s(y)));
        if (allows(l2, j - y, false, y, false)) return assemble(op, split(s(x), sp(i - x)), split(s(j - y), s(y)));
        gap(where, op);
    }
    if ((xp || yp) && x + y == i + j + 1) {
        if (yp) {
            if (x <= i) return assemble(op, split(s(x), sp(i - x)), plain2 ? sub(j) : split(s(j + 4 - y), sp(y)));
            return assemble(op, plain1 ? sub(i) : split(s(x), sp(i + 4 - x)), split(s(j - y), sp(y)));
        }
        if (y <= j) return assemble(op, plain1 ? sub(i) : split(sp(x), s(i + 4 - x)), split(sp(j - y), s(y)));
        return assemble(op, split(sp(x), s(i - x)), plain2 ? sub(j) : split(sp(j + 4 - y), s(y)));
    }
    gap(where, op);
}

// ---------------------------------------------------------------------------

ReducibleEdgeGadget::ReducibleEdgeGadget(Arc e1, Arc e2)
    : EdgeGadget(Label::L20, e2.tail(), e2.head(), "reducible-edge"), e1_(std::move(e1)), e2_(std::move(e2)) {
    if (e1_.tail() != e2_.tail()) throw GuardTrap("reducible edge: arcs do not share a tail");
    if (e1_.label() != Label::L32) throw GuardTrap("reducible edge: e1 is not L32");
    if (e2_.label() != Label::L32 && e2_.label() != Label::L30) throw GuardTrap("reducible edge: e2 is not L30/L32");
    own(merge(e1_.gadget->owned(), e2_.gadget->owned()));
}

Realization ReducibleEdgeGadget::do_realize(const Operation& op) const {
    if (!op.is_split()) gap("reducible edge", op);
    Op o2;
    if (op.sets == SetPair{S0, S2}) o2 = e2_.label() == Label::L30 ? split(S1, S2) : split(S5m, S2);
    else if (op.sets == SetPair{S1, S1}) o2 = split(S2, S1);
    else if (op.sets == SetPair{S2, S0}) o2 = split(S3, S0);
    else if (op.sets == SetPair{S3, S3p} || op.sets == SetPair{S3p, S3}) o2 = split(S0, S3);
    else gap("reducible edge", op);
    LocalAssembly la;
    int a = la.add_outer(tail());
    int b = la.add_outer(head());
    int anchor = la.add_outer(e1_.head());
    la.attach(e1_.realize(split(S3m, S0)), a, anchor);
    la.attach(e2_.realize(o2), a, b);
    return la.split(a, op.sets.p, b, op.sets.q);
}

// ---------------------------------------------------------------------------

namespace {

struct NewEdge {
    Vertex tail;
    Vertex head;
    Label label;
};

NewEdge new_edge_for(VertexGadget::Case c, const std::vector<Arc>& arcs) {
    using C = VertexGadget::Case;
    auto head = [&](std::size_t k) {
        if (k >= arcs.size()) throw GuardTrap("vertex gadget: too few arcs");
        return arcs[k].head();
    };
    switch (c) {
        case C::Low21: return {head(0), head(2), zero_label(arcs[0].weight())};
        case C::Low: return {head(0), head(1), zero_label(arcs[0].weight() + arcs[1].weight() + arcs[2].weight() - 3)};
        case C::ThirtyOneThirty: return {head(1), head(2), Label::L10};
        case C::ThirtyOneThirtyTwo: return {head(0), head(2), Label::L10};
        case C::Nine: return {head(0), head(1), Label::L10};
        case C::AllThree: return {head(1), head(2), Label::L20};
        case C::Light20: return {head(0), head(1), Label::L20};
        case C::Light10: return {head(0), head(1), Label::L10};
        case C::Heavy: return {head(0), head(1), Label::L20};
    }
    throw GuardTrap("vertex gadget: unknown case");
}

}  // namespace

std::string VertexGadget::case_id(Case c) {
    switch (c) {
        case Case::Low21: return "vertex3-21";
        case Case::Low: return "vertex3-low";
        case Case::ThirtyOneThirty: return "vertex3-31-30";
        case Case::ThirtyOneThirtyTwo: return "vertex3-31-32";
        case Case::Nine: return "vertex3-nine";
        case Case::AllThree: return "vertex3-all3";
        case Case::Light20: return "vertex-light-20";
        case Case::Light10: return "vertex-light-10";
        case Case::Heavy: return "vertex-heavy";
    }
    return "vertex";
}

VertexGadget::VertexGadget(Case c, Vertex v, std::vector<Arc> arcs)
    : EdgeGadget(new_edge_for(c, arcs).label, new_edge_for(c, arcs).tail, new_edge_for(c, arcs).head, case_id(c)),
      case_(c),
      v_(v),
      arcs_(std::move(arcs)) {
    std::vector<Vertex> owned;
    for (const auto& a : arcs_) {
        if (a.tail() != v_) throw GuardTrap("vertex gadget: arc does not leave v");
        if (a.weight() < 1) throw GuardTrap("vertex gadget: weight-0 arc");
        owned = merge(owned, a.gadget->owned());
    }
    if (c != Case::Heavy) owned.push_back(v_);
    own(owned);
}

std::vector<Operation> VertexGadget::plan(const Operation& op) const {
    if (!op.is_split()) gap(kind(), op);
    const auto& e = arcs_;
    const SetPair ps = op.sets;
    const std::string where = kind();

    switch (case_) {
        case Case::Low21: {
            const int i = e[0].weight();
            const auto [x, xp] = decode(ps.p);
            const auto [y, yp] = decode(ps.q);
            const Op o2 = split(S2m, S0);
            if (!xp && !yp && x + y == i) {
                if (y <= 1) return {split(sp(i - x), s(x)), o2, split(s(1 - y), s(y))};
                if (y == 2) return {split(S2m, s(x)), o2, sub_or(e[2], split(S3p, S2))};
                if (y == 3) return {split(S3m, S0), o2, sub_or(e[2], split(S2p, S3))};
            }
            // L20 also carries the two plus splits; three vertices behind e1
            // plus one leaf of e2 make a part, the other leaf reaches v3.
            if (i == 2 && ps == SetPair{S3, S3p}) return {split(S3m, S3m), o2, sub_or(e[2], split(S2, S3p))};
            if (i == 2 && ps == SetPair{S3p, S3}) return {split(S3m, S3m), o2, sub_or(e[2], split(S2p, S3))};
            gap(where, op);
        }
        case Case::Low: {
            const int i = e[0].weight();
            const int j = e[1].weight();
            const int k = e[2].weight();
            const auto [x, xp] = decode(ps.p);
            const auto [y, yp] = decode(ps.q);
            if (!xp && !yp && x + y == i + j + k - 3) {
                const Op o3 = split(s(k), S0);
                if (x <= i && y <= j) {
                    if (allows(e[0].label(), i - x, false, x, false))
                        return {split(s(i - x), s(x)), split(sp(j - y), s(y)), o3};
                    if (allows(e[1].label(), j - y, false, y, false))
                        return {split(sp(i - x), s(x)), split(s(j - y), s(y)), o3};
                    gap(where, op);
                }
                if (x <= i) return {split(s(i), S0), sub_or(e[1], split(S3p, s(y))), o3};
                if (x == 3 && y == 0) return {sub_or(e[0], split(S3p, S3)), split(S2, S0), o3};
                gap(where, op);
            }
            if ((xp || yp) && k == 1 && x + y == i + j + k + 1) {
                const Op o3 = split(S1, S0);
                if (x == 2 && y == 3) return {split(S0, S2), sub_or(e[1], split(S2p, S3)), o3};
                if (x == 3 && y == 2) {
                    if (yp) return {sub_or(e[0], split(S3p, S3)), sub_or(e[1], split(S3, S2p)), o3};
                    return {sub_or(e[0], split(S3, S3p)), sub_or(e[1], split(S3p, S2)), o3};
                }
                if (x == 3 && y == 3) {
                    if (i == 3) return {split(S0, S3), sub_or(e[1], split(S2p, S3)), o3};
                    if (yp) return {sub_or(e[0], split(S3p, S3)), sub_or(e[1], split(S3, S3p)), o3};
                    return {sub_or(e[0], split(S3, S3p)), sub_or(e[1], split(S3p, S3)), o3};
                }
            }
            gap(where, op);
        }
        case Case::ThirtyOneThirty: {
            const Op o1 = split(S3, S0);
            if (ps == SetPair{S1, S0}) return {o1, split(S2, S1), split(S2, S0)};
            if (ps == SetPair{S0, S1}) return {o1, split(S3, S0), split(S1, S1)};
            if (ps == SetPair{S2, S3p} || ps == SetPair{S2p, S3}) return {o1, split(S1, S2), sub_or(e[2], split(S3p, S3))};
            if (ps == SetPair{S3, S2p} || ps == SetPair{S3p, S2}) return {o1, split(S0, S3), split(S0, S2)};
            gap(where, op);
        }
        case Case::ThirtyOneThirtyTwo: {
            const Op o2 = split(S3m, S0);
            if (ps == SetPair{S1, S0}) return {split(S2p, S1), o2, split(S2, S0)};
            if (ps == SetPair{S0, S1}) return {split(S3, S0), o2, split(S1, S1)};
            if (ps == SetPair{S2, S3p} || ps == SetPair{S2p, S3}) return {split(S1, S2m), o2, sub_or(e[2], split(S3p, S3))};
            if (ps == SetPair{S3, S2p} || ps == SetPair{S3p, S2}) return {split(S0, S3m), o2, split(S0, S2)};
            gap(where, op);
        }
        case Case::Nine: {
            const bool l31 = e[0].label() == Label::L31;
            const Op o3 = l31 ? split(S2m, S0) : split(S2, S0);
            if (ps == SetPair{S1, S0}) return {l31 ? split(S2p, S1) : split(S2, S1), split(S3, S0), o3};
            if (ps == SetPair{S0, S1}) return {split(S3, S0), split(S2, S1), o3};
            if (ps == SetPair{S2, S3p} || ps == SetPair{S2p, S3}) return {split(S1p, S2), split(S0, S3), o3};
            if (ps == SetPair{S3, S2p} || ps == SetPair{S3p, S2}) return {split(S0, S3), split(S1p, S2), o3};
            gap(where, op);
        }
        case Case::AllThree:
        case Case::Heavy: {
            // rows give the ops for the two L30 arcs feeding the new edge
            static const std::vector<Row> table = {
                {{S0, S2}, split(S3, S0), split(S1, S2)}, {{S1, S1}, split(S2, S1), split(S2, S1)},
                {{S2, S0}, split(S1, S2), split(S3, S0)}, {{S3, S3p}, split(S0, S3), split(S0, S3)},
                {{S3p, S3}, split(S0, S3), split(S0, S3)},
            };
            const Row& row = lookup(table, op, where);
            if (case_ == Case::Heavy) return {row.first, row.second};
            return {split(S3, S0), row.first, row.second};
        }
        case Case::Light20: {
            const int d = static_cast<int>(e.size());
            const int w1 = e[0].weight();
            std::vector<Op> ops(e.size(), split(S1, S0));
            if (ps == SetPair{S2, S0}) {
                ops[0] = d == 4 ? split(S0, S2) : sub_or(e[0], split(S3p, S2));
                ops[1] = split(S1, S0);
            } else if (ps == SetPair{S0, S2}) {
                ops[0] = split(s(w1), S0);
                ops[1] = sub_or(e[1], split(S3p, S2));
            } else if (ps == SetPair{S1, S1}) {
                ops[0] = d == 5 ? split(S0, S1) : split(S1p, S1);
                ops[1] = split(S0, S1);
            } else if (ps == SetPair{S3, S3p}) {
                ops[1] = sub_or(e[1], split(S2, S3p));
                ops[0] = d == 5 ? sub_or(e[0], split(S2p, S3)) : sub_or(e[0], split(S3p, S3));
            } else if (ps == SetPair{S3p, S3}) {
                ops[1] = sub_or(e[1], split(S2p, S3));
                ops[0] = w1 == 1 ? sub_or(e[0], split(S2, S3p)) : sub_or(e[0], split(S3, S3p));
            } else {
                gap(where, op);
            }
            return ops;
        }
        case Case::Light10: {
            std::vector<Op> ops(e.size(), split(S1, S0));
            if (ps == SetPair{S0, S1}) {
                ops[0] = split(S1, S0);
                ops[1] = split(S0, S1);
                return ops;
            }
            if (ps == SetPair{S1, S0}) {
                ops[0] = split(S0, S1);
                ops[1] = split(S1, S0);
                return ops;
            }
            const auto [a, ap] = decode(ps.p);
            const auto [b, bp] = decode(ps.q);
            if (a + b != 5) gap(where, op);
            ops[0] = sub_or(e[0], split(s(5 - a, bp), s(a, ap)));
            ops[1] = sub_or(e[1], split(s(5 - b, ap), s(b, bp)));
            return ops;
        }
    }
    gap(where, op);
}

Realization VertexGadget::do_realize(const Operation& op) const {
    const std::vector<Op> ops = plan(op);
    LocalAssembly la;
    const int center = case_ == Case::Heavy ? la.add_outer(v_) : la.add_junction(v_);
    std::map<Vertex, int> far;
    for (const auto& a : arcs_) far.emplace(a.head(), -1);
    for (auto& [vertex, node] : far) node = la.add_outer(vertex);
    for (std::size_t k = 0; k < arcs_.size(); ++k) la.attach(arcs_[k].realize(ops[k]), center, far.at(arcs_[k].head()));
    return la.split(far.at(tail()), op.sets.p, far.at(head()), op.sets.q);
}

// ---------------------------------------------------------------------------

Realization close_around(Vertex center, bool remove_center, const std::vector<std::pair<Arc, Operation>>& steps) {
    LocalAssembly la;
    const int c = remove_center ? la.add_junction(center) : la.add_outer(center);
    std::map<Vertex, int> far;
    for (const auto& [arc, op] : steps) {
        if (arc.tail() != center) throw GuardTrap("close_around: arc does not leave the center");
        auto [it, fresh] = far.emplace(arc.head(), -1);
        if (fresh) it->second = la.add_outer(arc.head());
    }
    for (const auto& [arc, op] : steps) la.attach(arc.realize(op), c, far.at(arc.head()));
    return la.close();
}

}  // namespace powfactor
