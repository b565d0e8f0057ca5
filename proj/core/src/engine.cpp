#include "powfactor/engine.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "powfactor/assembly.hpp"
#include "powfactor/error.hpp"
#include "powfactor/verify.hpp"

namespace powfactor {

namespace {

using enum TreeSet;
using VC = VertexGadget::Case;

std::string describe_arc(const LabeledMultigraph& lg, const Arc& a) {
    return std::to_string(lg.id_of(a.gadget)) + ":" + std::to_string(a.tail()) + ">" + std::to_string(a.head()) + ":" +
           std::string(name(a.label()));
}

std::string join_arcs(const LabeledMultigraph& lg, const std::vector<Arc>& arcs) {
    std::string out;
    for (const auto& a : arcs) out += (out.empty() ? "" : ",") + describe_arc(lg, a);
    return out;
}

std::string new_edge_note(const LabeledMultigraph& lg, EdgeId id) {
    const auto& g = lg.edge(id);
    return " new=" + std::to_string(id) + ":" + std::to_string(g->tail()) + ">" + std::to_string(g->head()) +
           " label=" + std::string(name(g->label()));
}

void keep_parts(LabeledMultigraph& lg, const Realization& r) {
    lg.finalized().insert(lg.finalized().end(), r.parts.begin(), r.parts.end());
}

// Removes the arcs' edges.
void drop(LabeledMultigraph& lg, const std::vector<Arc>& arcs) {
    for (const auto& a : arcs) lg.remove_edge(lg.id_of(a.gadget));
}

bool biconnected_without_vertex(const LabeledMultigraph& lg, Vertex v) {
    std::vector<bool> present(lg.capacity());
    for (Vertex x = 0; x < lg.capacity(); ++x) present[x] = lg.alive(x) && x != v;
    return is_biconnected_subgraph(lg.adjacency(), present);
}

bool biconnected_without_edge(const LabeledMultigraph& lg, EdgeId e) {
    std::vector<bool> present(lg.capacity());
    for (Vertex x = 0; x < lg.capacity(); ++x) present[x] = lg.alive(x);
    return is_biconnected_subgraph(lg.adjacency(e), present);
}

bool is_reducible_vertex(const LabeledMultigraph& lg, Vertex v) {
    if (!lg.alive(v) || lg.degree(v) < 3) return false;
    int l31 = 0;
    for (const auto& a : lg.arcs_from(v)) l31 += a.label() == Label::L31;
    return l31 <= 1 && biconnected_without_vertex(lg, v);
}

bool heavy_partner(Label l) { return l == Label::L30 || l == Label::L32; }

// A reducible edge leaving v: (e1, e2).
std::optional<std::pair<EdgeId, EdgeId>> reducible_edge_at(const LabeledMultigraph& lg, Vertex v) {
    if (!lg.alive(v)) return std::nullopt;
    const auto arcs = lg.arcs_from(v);
    for (const auto& a : arcs) {
        if (a.label() != Label::L32) continue;
        const EdgeId e1 = lg.id_of(a.gadget);
        for (const auto& b : arcs) {
            if (b.gadget == a.gadget || !heavy_partner(b.label())) continue;
            if (!biconnected_without_edge(lg, e1)) break;
            return std::make_pair(e1, lg.id_of(b.gadget));
        }
    }
    return std::nullopt;
}

// Candidate vertices for the irreducible-case search: all of them when the
// graph is 3-connected, else the smallest 2-cut component (with the cut
// vertices appended for the edge scan).
struct Region {
    std::vector<Vertex> vertices;
    std::vector<Vertex> edge_scan;
};

Region search_region(const LabeledMultigraph& lg) {
    const auto alive = lg.vertices();
    std::vector<int> index(lg.capacity(), -1);
    for (std::size_t i = 0; i < alive.size(); ++i) index[alive[i]] = static_cast<int>(i);
    SimpleGraph s(static_cast<int>(alive.size()));
    for (EdgeId e : lg.edges()) s.add_edge(index[lg.edge(e)->tail()], index[lg.edge(e)->head()]);
    Region r;
    auto cut = smallest_2cut_component(s);
    if (!cut) {
        r.vertices = alive;
        r.edge_scan = alive;
        return r;
    }
    for (Vertex c : cut->component) r.vertices.push_back(alive[c]);
    r.edge_scan = r.vertices;
    r.edge_scan.push_back(alive[std::min(cut->u, cut->v)]);
    r.edge_scan.push_back(alive[std::max(cut->u, cut->v)]);
    return r;
}

Operation op(TreeSet p, TreeSet q) { return Operation::split(p, q); }

std::string replace_with_gadget(LabeledMultigraph& lg, Vertex v, const std::vector<Arc>& all, VC c,
                                std::vector<Arc> arcs, bool remove_center) {
    auto g = std::make_shared<VertexGadget>(c, v, std::move(arcs));
    const std::string touched = join_arcs(lg, all);
    drop(lg, all);
    if (remove_center) lg.remove_vertex(v);
    const EdgeId id = lg.add_edge(g);
    return "case=" + VertexGadget::case_id(c) + " v=" + std::to_string(v) + " arcs=" + touched + new_edge_note(lg, id);
}

std::string finalize_around(LabeledMultigraph& lg, Vertex v, bool remove_center, const std::string& case_id,
                            const std::vector<std::pair<Arc, Operation>>& steps) {
    std::vector<Arc> arcs;
    for (const auto& [a, o] : steps) arcs.push_back(a);
    const std::string touched = join_arcs(lg, arcs);
    keep_parts(lg, close_around(v, remove_center, steps));
    drop(lg, arcs);
    if (remove_center) lg.remove_vertex(v);
    return "case=" + case_id + " v=" + std::to_string(v) + " arcs=" + touched;
}

// An L32 arc at v with an L30/L32 partner; used when a vertex case would
// need one of its weight-3 arcs to be L30.
std::optional<std::string> local_reducible_edge(LabeledMultigraph& lg, Vertex v) {
    if (auto pair = reducible_edge_at(lg, v)) return reduce_edge(lg, pair->first, pair->second, v);
    return std::nullopt;
}

std::string vertex_degree3(LabeledMultigraph& lg, Vertex v, std::vector<Arc> arcs) {
    std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) { return a.weight() > b.weight(); });
    const int i = arcs[0].weight();
    const int j = arcs[1].weight();
    const int k = arcs[2].weight();
    const int s = i + j + k + 1;
    const std::vector<Arc> all = arcs;

    if (s == 4)
        return finalize_around(lg, v, true, "vertex3-direct",
                               {{arcs[0], op(S1, S0)}, {arcs[1], op(S1, S0)}, {arcs[2], op(S1, S0)}});
    if (s == 8) {
        if (j == 2)
            return finalize_around(lg, v, true, "vertex3-direct",
                                   {{arcs[0], op(S3, S0)}, {arcs[1], op(S2, S0)}, {arcs[2], op(S2, S0)}});
        return finalize_around(lg, v, true, "vertex3-direct",
                               {{arcs[0], op(S3, S0)}, {arcs[1], op(S3, S0)}, {arcs[2], op(S1, S0)}});
    }
    if (s >= 5 && s <= 7) {
        auto low21 = [&](const Arc& a, const Arc& b) {
            return (a.label() == Label::L21 || a.label() == Label::L32) && b.label() == Label::L21 && k == 1;
        };
        if (low21(arcs[0], arcs[1])) return replace_with_gadget(lg, v, all, VC::Low21, arcs, true);
        if (i == j && low21(arcs[1], arcs[0]))
            return replace_with_gadget(lg, v, all, VC::Low21, {arcs[1], arcs[0], arcs[2]}, true);
        return replace_with_gadget(lg, v, all, VC::Low, arcs, true);
    }
    if (s == 9) {
        if (arcs[1].label() == Label::L31 && arcs[0].label() != Label::L31) std::swap(arcs[0], arcs[1]);
        const Label l3 = arcs[2].label();
        const bool low3 = l3 == Label::L2 || l3 == Label::L20;
        if (arcs[0].label() == Label::L31 && low3 && arcs[1].label() == Label::L30)
            return replace_with_gadget(lg, v, all, VC::ThirtyOneThirty, arcs, true);
        if (arcs[0].label() == Label::L31 && low3 && arcs[1].label() == Label::L32)
            return replace_with_gadget(lg, v, all, VC::ThirtyOneThirtyTwo, arcs, true);
        return replace_with_gadget(lg, v, all, VC::Nine, arcs, true);
    }
    if (s == 10) {
        if (auto done = local_reducible_edge(lg, v)) return *done;
        std::stable_partition(arcs.begin(), arcs.end(), [](const Arc& a) { return a.label() == Label::L31; });
        return replace_with_gadget(lg, v, all, VC::AllThree, arcs, true);
    }
    throw GuardTrap("degree-3 vertex " + std::to_string(v) + " with weight sum " + std::to_string(s));
}

std::string vertex_high_degree(LabeledMultigraph& lg, Vertex v, std::vector<Arc> arcs) {
    const std::size_t d = arcs.size();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = a + 1; b < d; ++b)
            if (arcs[a].weight() + arcs[b].weight() == 4)
                return finalize_around(lg, v, false, "vertex-pair4",
                                       {{arcs[a], op(s(arcs[a].weight()), S0)}, {arcs[b], op(s(arcs[b].weight()), S0)}});

    const bool has3 = std::any_of(arcs.begin(), arcs.end(), [](const Arc& a) { return a.weight() == 3; });
    if (!has3) {
        std::stable_partition(arcs.begin(), arcs.end(), [](const Arc& a) { return a.weight() == 2; });
        const std::vector<Arc> all = arcs;
        if (d >= 6)
            return finalize_around(lg, v, false, "vertex-peel",
                                   {{arcs[d - 4], op(S1, S0)}, {arcs[d - 3], op(S1, S0)},
                                    {arcs[d - 2], op(S1, S0)}, {arcs[d - 1], op(S1, S0)}});
        if (d == 5 && arcs[0].weight() == 2)
            return finalize_around(lg, v, false, "vertex-peel",
                                   {{arcs[0], op(S2, S0)}, {arcs[3], op(S1, S0)}, {arcs[4], op(S1, S0)}});
        if (d == 5 || arcs[0].weight() == 2) return replace_with_gadget(lg, v, all, VC::Light20, arcs, true);
        return replace_with_gadget(lg, v, all, VC::Light10, arcs, true);
    }

    if (auto done = local_reducible_edge(lg, v)) return *done;
    std::vector<Arc> l30;
    for (const auto& a : arcs)
        if (a.label() == Label::L30) l30.push_back(a);
    if (l30.size() < 2) throw GuardTrap("heavy vertex " + std::to_string(v) + " has fewer than two L30 arcs");
    std::vector<Arc> pair{l30[0], l30[1]};
    return replace_with_gadget(lg, v, pair, VC::Heavy, pair, false);
}

}  // namespace

// ---------------------------------------------------------------------------

LabeledMultigraph::LabeledMultigraph(int n) : alive_(n, true), alive_count_(n), incident_(n) {}

EdgeId LabeledMultigraph::add_edge(GadgetPtr g) {
    const Vertex u = g->tail();
    const Vertex v = g->head();
    if (u == v) throw GuardTrap("labeled multigraph: loop at " + std::to_string(u));
    if (!alive(u) || !alive(v)) throw GuardTrap("labeled multigraph: edge to a removed vertex");
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    weight_ += powfactor::weight(g->label());
    edges_.push_back(std::move(g));
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    ++edge_count_;
    return id;
}

void LabeledMultigraph::remove_edge(EdgeId e) {
    const GadgetPtr g = edge(e);
    for (Vertex x : {g->tail(), g->head()}) {
        auto& inc = incident_[x];
        inc.erase(std::find(inc.begin(), inc.end(), e));
    }
    weight_ -= powfactor::weight(g->label());
    edges_[e] = nullptr;
    --edge_count_;
}

void LabeledMultigraph::remove_vertex(Vertex v) {
    if (!alive(v)) throw GuardTrap("labeled multigraph: vertex removed twice");
    if (!incident_[v].empty()) throw GuardTrap("labeled multigraph: removing a vertex with edges");
    alive_[v] = false;
    --alive_count_;
}

const GadgetPtr& LabeledMultigraph::edge(EdgeId e) const {
    if (!has_edge(e)) throw GuardTrap("labeled multigraph: no edge " + std::to_string(e));
    return edges_[e];
}

std::vector<EdgeId> LabeledMultigraph::edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e)
        if (edges_[e]) out.push_back(e);
    return out;
}

std::vector<Vertex> LabeledMultigraph::vertices() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < capacity(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<Arc> LabeledMultigraph::arcs_from(Vertex v) const {
    std::vector<Arc> out;
    for (EdgeId e : incident_.at(v)) out.push_back(arc_from(edges_[e], v));
    return out;
}

EdgeId LabeledMultigraph::id_of(const GadgetPtr& g) const {
    for (EdgeId e : incident_.at(g->tail()))
        if (edges_[e] == g) return e;
    throw GuardTrap("labeled multigraph: gadget is not an edge");
}

std::vector<std::vector<Vertex>> LabeledMultigraph::adjacency(EdgeId skip) const {
    std::vector<std::vector<Vertex>> adj(capacity());
    for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
        if (!edges_[e] || e == skip) continue;
        adj[edges_[e]->tail()].push_back(edges_[e]->head());
        adj[edges_[e]->head()].push_back(edges_[e]->tail());
    }
    return adj;
}

bool LabeledMultigraph::is_block() const {
    std::vector<bool> present(alive_.begin(), alive_.end());
    return is_biconnected_subgraph(adjacency(), present);
}

LabeledMultigraph init_labeled(const SimpleGraph& g) {
    if (g.order() < 4 || g.order() % 4 != 0)
        throw PreconditionError("graph order " + std::to_string(g.order()) + " is not a positive multiple of 4");
    if (!is_biconnected(g)) throw PreconditionError("graph is not 2-connected");
    LabeledMultigraph lg(g.order());
    for (auto [u, v] : g.edges()) lg.add_edge(std::make_shared<OriginalEdge>(u, v));
    return lg;
}

std::string to_string(const ReductionChoice& c) {
    using K = ReductionChoice::Kind;
    switch (c.kind) {
        case K::Base: return "base";
        case K::Parallel: return "parallel(" + std::to_string(c.e1) + "," + std::to_string(c.e2) + ")";
        case K::Series: return "series(" + std::to_string(c.v) + ")";
        case K::ReducibleEdge:
            return "reducible-edge(" + std::to_string(c.e1) + "," + std::to_string(c.e2) + "," + std::to_string(c.v) + ")";
        case K::ReducibleVertex: return "reducible-vertex(" + std::to_string(c.v) + ")";
    }
    return "?";
}

ReductionChoice find_reduction(const LabeledMultigraph& lg) {
    using K = ReductionChoice::Kind;
    if (lg.edge_count() == 1) return {K::Base, lg.edges().front(), -1, -1};

    std::map<std::pair<Vertex, Vertex>, EdgeId> first;
    for (EdgeId e : lg.edges()) {
        const auto& g = lg.edge(e);
        const std::pair<Vertex, Vertex> key{std::min(g->tail(), g->head()), std::max(g->tail(), g->head())};
        auto [it, fresh] = first.emplace(key, e);
        if (!fresh) return {K::Parallel, it->second, e, -1};
    }
    for (Vertex v : lg.vertices())
        if (lg.degree(v) == 2) return {K::Series, -1, -1, v};

    const Region region = search_region(lg);
    const std::vector<Vertex> everyone = lg.vertices();
    for (const auto* scan : {&region, static_cast<const Region*>(nullptr)}) {
        const auto& vs = scan ? scan->vertices : everyone;
        const auto& es = scan ? scan->edge_scan : everyone;
        for (Vertex v : vs) {
            if (!is_reducible_vertex(lg, v)) continue;
            for (const auto& a : lg.arcs_from(v))
                if (a.weight() == 0) return {K::ReducibleVertex, -1, -1, v};
        }
        for (Vertex v : es)
            if (auto pair = reducible_edge_at(lg, v)) return {K::ReducibleEdge, pair->first, pair->second, v};
        for (Vertex v : vs)
            if (is_reducible_vertex(lg, v)) return {K::ReducibleVertex, -1, -1, v};
    }
    throw GuardTrap("no reduction applies");
}

std::string reduce_parallel(LabeledMultigraph& lg, EdgeId e1, EdgeId e2) {
    const GadgetPtr g1 = lg.edge(e1);
    const GadgetPtr g2 = lg.edge(e2);
    const Vertex u = g1->tail();
    Arc a = arc_from(g1, u);
    Arc b = arc_from(g2, u);
    if (a.head() != b.head()) throw PreconditionError("reduce_parallel: edges are not parallel");
    if (a.weight() > b.weight() || (a.label() == Label::L30 && b.label() != Label::L30)) std::swap(a, b);
    const std::string touched = join_arcs(lg, {a, b});
    if (a.weight() == 0) {
        keep_parts(lg, a.realize(op(S0, S0)));
        lg.remove_edge(lg.id_of(a.gadget));
        return "case=parallel-strip arcs=" + touched;
    }
    auto g = std::make_shared<ParallelGadget>(a, b);
    lg.remove_edge(e1);
    lg.remove_edge(e2);
    const EdgeId id = lg.add_edge(g);
    return "case=parallel arcs=" + touched + new_edge_note(lg, id);
}

std::string reduce_series(LabeledMultigraph& lg, Vertex v) {
    if (lg.degree(v) != 2) throw PreconditionError("reduce_series: vertex does not have degree 2");
    const auto arcs = lg.arcs_from(v);
    if (arcs[0].head() == arcs[1].head()) throw PreconditionError("reduce_series: edges are parallel");
    std::optional<std::pair<Arc, Arc>> pick;
    for (auto [x, y] : {std::pair{arcs[0], arcs[1]}, std::pair{arcs[1], arcs[0]}}) {
        Arc e1 = x.flipped();
        if (e1.weight() > y.weight()) continue;
        if (!pick || (SeriesGadget::classify(pick->first, pick->second) == SeriesGadget::Case::General &&
                      SeriesGadget::classify(e1, y) != SeriesGadget::Case::General))
            pick = std::pair{e1, y};
    }
    auto g = std::make_shared<SeriesGadget>(pick->first, pick->second);
    const std::string touched = join_arcs(lg, arcs);
    drop(lg, arcs);
    lg.remove_vertex(v);
    const EdgeId id = lg.add_edge(g);
    return "case=" + g->kind() + " v=" + std::to_string(v) + " arcs=" + touched + new_edge_note(lg, id);
}

std::string reduce_edge(LabeledMultigraph& lg, EdgeId e1, EdgeId e2, Vertex v) {
    Arc a = arc_from(lg.edge(e1), v);
    Arc b = arc_from(lg.edge(e2), v);
    auto g = std::make_shared<ReducibleEdgeGadget>(a, b);
    const std::string touched = join_arcs(lg, {a, b});
    lg.remove_edge(e1);
    lg.remove_edge(e2);
    const EdgeId id = lg.add_edge(g);
    return "case=reducible-edge v=" + std::to_string(v) + " arcs=" + touched + new_edge_note(lg, id);
}

std::string reduce_vertex(LabeledMultigraph& lg, Vertex v) {
    if (!lg.alive(v) || lg.degree(v) < 3) throw PreconditionError("reduce_vertex: vertex has degree below 3");
    const auto arcs = lg.arcs_from(v);
    for (const auto& a : arcs)
        if (a.weight() == 0) {
            const std::string touched = describe_arc(lg, a);
            keep_parts(lg, a.realize(op(S0, S0)));
            lg.remove_edge(lg.id_of(a.gadget));
            return "case=vertex-strip v=" + std::to_string(v) + " arcs=" + touched;
        }
    if (arcs.size() == 3) return vertex_degree3(lg, v, arcs);
    return vertex_high_degree(lg, v, arcs);
}

Partition solve_base(const LabeledMultigraph& lg) {
    if (lg.edge_count() != 1) throw GuardTrap("base case needs exactly one edge");
    const GadgetPtr& g = lg.edge(lg.edges().front());
    if (weight(g->label()) != 2) throw GuardTrap("base edge has weight " + std::to_string(weight(g->label())));
    const Operation o = g->label() == Label::L2 ? Operation::subdivide(2) : op(S3, S3p);
    LocalAssembly la;
    const int a = la.add_junction(g->tail());
    const int b = la.add_junction(g->head());
    la.attach(g->realize(o), a, b);
    Realization r = la.close();
    Partition parts = lg.finalized();
    parts.insert(parts.end(), r.parts.begin(), r.parts.end());
    return parts;
}

EngineResult partition_2connected(const SimpleGraph& g, const EngineOptions& options) {
    LabeledMultigraph lg = init_labeled(g);
    EngineResult out;
    auto bug = [&](const std::string& what) { return EngineBug(what, out.trace); };
    try {
        for (int step = 1;; ++step) {
            const ReductionChoice choice = find_reduction(lg);
            using K = ReductionChoice::Kind;
            if (choice.kind == K::Base) {
                out.parts = solve_base(lg);
                out.trace.push_back("step=" + std::to_string(step) + " case=base edge=" + std::to_string(choice.e1) +
                                    " label=" + std::string(name(lg.edge(choice.e1)->label())));
                break;
            }
            const int edges_before = lg.edge_count();
            std::string what;
            switch (choice.kind) {
                case K::Parallel: what = reduce_parallel(lg, choice.e1, choice.e2); break;
                case K::Series: what = reduce_series(lg, choice.v); break;
                case K::ReducibleEdge: what = reduce_edge(lg, choice.e1, choice.e2, choice.v); break;
                case K::ReducibleVertex: what = reduce_vertex(lg, choice.v); break;
                case K::Base: break;
            }
            std::ostringstream line;
            line << "step=" << step << " " << what << " n=" << lg.order() << " w=" << lg.weight()
                 << " mod4=" << (lg.order() + lg.weight()) % 4;
            if (options.check_invariants) {
                const bool block = lg.is_block();
                line << " block=" << (block ? 1 : 0);
                out.trace.push_back(line.str());
                if ((lg.order() + lg.weight()) % 4 != 0) throw bug("mod-4 invariant broken at step " + std::to_string(step));
                if (!block) throw bug("block invariant broken at step " + std::to_string(step));
                if (lg.edge_count() >= edges_before) throw bug("no progress at step " + std::to_string(step));
            } else {
                out.trace.push_back(line.str());
            }
        }
    } catch (const GuardTrap& e) {
        throw bug(e.what());
    }

    for (auto& p : out.parts) std::sort(p.members.begin(), p.members.end());
    std::sort(out.parts.begin(), out.parts.end(),
              [](const Part& a, const Part& b) { return a.members < b.members; });
    if (options.verify) {
        if (auto verdict = verify_partition(g, out.parts); !verdict) throw bug("verification failed: " + verdict.detail);
        attach_witnesses(g, out.parts);
    }
    return out;
}

}  // namespace powfactor
