#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "powfactor/realization.hpp"

namespace powfactor {

// What a labeled edge stands for: given an operation the label admits,
// produce the trees at its endpoints (or its subdivision path) and the parts
// that cover everything else it owns.
class EdgeGadget {
public:
    EdgeGadget(Label label, Vertex tail, Vertex head, std::string kind);
    virtual ~EdgeGadget() = default;

    EdgeGadget(const EdgeGadget&) = delete;
    EdgeGadget& operator=(const EdgeGadget&) = delete;

    Label label() const noexcept { return label_; }
    Vertex tail() const noexcept { return tail_; }
    Vertex head() const noexcept { return head_; }
    const std::string& kind() const noexcept { return kind_; }
    // Original vertices strictly inside the edge, sorted.
    const std::vector<Vertex>& owned() const noexcept { return owned_; }

    // op is read tail -> head. Split requests are narrowed with admits();
    // throws GuardTrap when the label does not admit op or when the result
    // breaks the realization contract.
    Realization realize(const Operation& op) const;

protected:
    virtual Realization do_realize(const Operation& exact) const = 0;
    void own(const std::vector<Vertex>& vertices);

private:
    Label label_;
    Vertex tail_;
    Vertex head_;
    std::string kind_;
    std::vector<Vertex> owned_;
};

using GadgetPtr = std::shared_ptr<const EdgeGadget>;

// A gadget read in a chosen direction.
struct Arc {
    GadgetPtr gadget;
    bool reversed = false;

    Vertex tail() const { return reversed ? gadget->head() : gadget->tail(); }
    Vertex head() const { return reversed ? gadget->tail() : gadget->head(); }
    Label label() const { return reversed ? involution(gadget->label()) : gadget->label(); }
    int weight() const { return powfactor::weight(gadget->label()); }
    Arc flipped() const { return {gadget, !reversed}; }
    Realization realize(const Operation& op) const;
};

// Arc of g read starting from `from`.
Arc arc_from(GadgetPtr g, Vertex from);

class OriginalEdge final : public EdgeGadget {
public:
    OriginalEdge(Vertex u, Vertex v);

private:
    Realization do_realize(const Operation& exact) const override;
};

// Two parallel edges e1, e2, both read u -> v, weight(e1) <= weight(e2),
// weight(e1) >= 1, and e1 not L30 unless e2 is too.
class ParallelGadget final : public EdgeGadget {
public:
    ParallelGadget(Arc e1, Arc e2);
    static Label label_for(const Arc& e1, const Arc& e2);

private:
    Realization do_realize(const Operation& exact) const override;
    Realization general(const Operation& op) const;

    Arc e1_, e2_;
};

// Path v1 -> v -> v2 through a degree-2 vertex v; weight(e1) <= weight(e2).
class SeriesGadget final : public EdgeGadget {
public:
    enum class Case { Path, ZeroTwentyOne, DoubleZeroTwentyOne, TwentyOneThirtyOne, ThirtyTwoThirtyTwo, General };

    SeriesGadget(Arc e1, Arc e2);
    static Case classify(Label l1, Label l2);
    static Case classify(const Arc& e1, const Arc& e2) { return classify(e1.label(), e2.label()); }
    static Label label_for(const Arc& e1, const Arc& e2);
    static std::string case_id(Case c);

private:
    Realization do_realize(const Operation& exact) const override;
    Realization general(const Operation& op) const;
    Realization assemble(const Operation& op, const Operation& o1, const Operation& o2) const;

    Arc e1_, e2_;
    Case case_;
    Vertex v_;
};

// e1 = v -> v1 labeled L32 is dropped; e2 = v -> v2 labeled L30 or L32
// becomes an L20 edge v -> v2.
class ReducibleEdgeGadget final : public EdgeGadget {
public:
    ReducibleEdgeGadget(Arc e1, Arc e2);

private:
    Realization do_realize(const Operation& exact) const override;

    Arc e1_, e2_;
};

// Reductions around a vertex v that add one edge between two of its
// neighbours. Arcs are read out of v, in the order each case expects;
// for Heavy only the two L30 arcs are passed and v is kept.
class VertexGadget final : public EdgeGadget {
public:
    enum class Case { Low21, Low, ThirtyOneThirty, ThirtyOneThirtyTwo, Nine, AllThree, Light20, Light10, Heavy };

    VertexGadget(Case c, Vertex v, std::vector<Arc> arcs);
    static std::string case_id(Case c);

private:
    Realization do_realize(const Operation& exact) const override;
    std::vector<Operation> plan(const Operation& op) const;

    Case case_;
    Vertex v_;
    std::vector<Arc> arcs_;
};

// Apply fixed operations to arcs leaving `center` and cover whatever is left.
// center is covered too when `remove_center` is set.
Realization close_around(Vertex center, bool remove_center, const std::vector<std::pair<Arc, Operation>>& steps);

}  // namespace powfactor
