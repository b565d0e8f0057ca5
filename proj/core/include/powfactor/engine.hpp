#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powfactor/gadgets.hpp"
#include "powfactor/graph.hpp"

namespace powfactor {

// Block multigraph whose edges are gadgets. Vertex ids are the original ones;
// removed vertices stay in the id space but are no longer alive.
class LabeledMultigraph {
public:
    explicit LabeledMultigraph(int n = 0);

    int capacity() const noexcept { return static_cast<int>(alive_.size()); }
    bool alive(Vertex v) const { return alive_.at(v); }
    int order() const noexcept { return alive_count_; }
    int edge_count() const noexcept { return edge_count_; }
    // Sum of edge weights.
    int weight() const noexcept { return weight_; }

    EdgeId add_edge(GadgetPtr g);
    void remove_edge(EdgeId e);
    // v must have no edges left.
    void remove_vertex(Vertex v);

    const GadgetPtr& edge(EdgeId e) const;
    bool has_edge(EdgeId e) const { return e >= 0 && e < static_cast<EdgeId>(edges_.size()) && edges_[e] != nullptr; }
    // Alive edge ids in increasing order.
    std::vector<EdgeId> edges() const;
    // Incident edge ids in increasing order.
    const std::vector<EdgeId>& incident(Vertex v) const { return incident_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(incident_.at(v).size()); }
    std::vector<Vertex> vertices() const;

    // Arcs of the incident edges read away from v, in edge id order.
    std::vector<Arc> arcs_from(Vertex v) const;
    EdgeId id_of(const GadgetPtr& g) const;

    // Adjacency over capacity() slots, one entry per edge.
    std::vector<std::vector<Vertex>> adjacency(EdgeId skip = -1) const;
    bool is_block() const;

    // Parts finalized by reductions that delete material outright.
    std::vector<Part>& finalized() noexcept { return finalized_; }
    const std::vector<Part>& finalized() const noexcept { return finalized_; }

private:
    std::vector<bool> alive_;
    int alive_count_;
    std::vector<GadgetPtr> edges_;
    std::vector<std::vector<EdgeId>> incident_;
    int edge_count_ = 0;
    int weight_ = 0;
    std::vector<Part> finalized_;
};

// Every edge labeled L0. Throws PreconditionError unless g is 2-connected
// with order divisible by 4.
LabeledMultigraph init_labeled(const SimpleGraph& g);

struct ReductionChoice {
    enum class Kind { Base, Parallel, Series, ReducibleEdge, ReducibleVertex };
    Kind kind = Kind::Base;
    EdgeId e1 = -1;
    EdgeId e2 = -1;
    Vertex v = -1;
};

std::string to_string(const ReductionChoice& c);

// Throws GuardTrap when nothing applies.
ReductionChoice find_reduction(const LabeledMultigraph& lg);

// Each reduction mutates lg in place and returns a one-line description of
// what it did (case id, touched edges, new label).
std::string reduce_parallel(LabeledMultigraph& lg, EdgeId e1, EdgeId e2);
std::string reduce_series(LabeledMultigraph& lg, Vertex v);
std::string reduce_edge(LabeledMultigraph& lg, EdgeId e1, EdgeId e2, Vertex v);
std::string reduce_vertex(LabeledMultigraph& lg, Vertex v);

// lg has a single edge. Returns every part, including lg.finalized().
Partition solve_base(const LabeledMultigraph& lg);

struct EngineOptions {
    bool check_invariants = true;
    bool verify = true;
};

struct EngineResult {
    Partition parts;
    // One line per step: key=value tokens.
    std::vector<std::string> trace;
};

// Throws PreconditionError on bad input and EngineBug on any internal failure.
EngineResult partition_2connected(const SimpleGraph& g, const EngineOptions& options = {});

}  // namespace powfactor
