#pragma once

#include <string>
#include <vector>

#include "powfactor/graph.hpp"
#include "powfactor/labels.hpp"

namespace powfactor {

// One non-root vertex of a tree attached at an edge endpoint.
struct TreeNode {
    Vertex vertex;
    int parent;  // index into the same tree, or -1 for the endpoint itself
    bool dummy;
};

using AttachedTree = std::vector<TreeNode>;

TreeShape shape_of(const AttachedTree& tree);

struct Part {
    std::vector<Vertex> members;
    std::vector<Vertex> witness;  // may be empty until verified
};

using Partition = std::vector<Part>;

struct Operation {
    enum class Kind { Split, Subdivide };

    Kind kind = Kind::Split;
    SetPair sets{TreeSet::S0, TreeSet::S0};
    int times = 0;

    static Operation split(TreeSet p, TreeSet q) { return {Kind::Split, {p, q}, 0}; }
    static Operation subdivide(int k) { return {Kind::Subdivide, {TreeSet::S0, TreeSet::S0}, k}; }

    bool is_split() const { return kind == Kind::Split; }
    // The same operation seen from the other endpoint.
    Operation reversed() const;
    std::string to_string() const;

    friend bool operator==(const Operation&, const Operation&) = default;
};

// Outcome of applying an operation to a labeled edge tail -> head.
struct Realization {
    bool subdivided = false;
    AttachedTree tail;
    AttachedTree head;
    std::vector<Vertex> path;  // subdivision vertices, tail side first
    std::vector<Part> parts;
};

// Every operation a label admits exactly: its pairs, plus Subdivide(w) on L_w.
std::vector<Operation> exact_operations(Label l);

}  // namespace powfactor
