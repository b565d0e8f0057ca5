#pragma once

#include <vector>

#include "powfactor/graph.hpp"

namespace powfactor {

struct TreePart {
    std::vector<Vertex> members;  // sorted
    std::vector<Vertex> witness;  // sorted, connected, at most 2|members|-1 vertices
};

// Parts of the requested sizes, in the order given. Works on the BFS tree
// from vertex 0. Throws PreconditionError if g is disconnected or the sizes
// do not sum to the order.
std::vector<TreePart> partition_tree(const SimpleGraph& g, const std::vector<int>& sizes);

}  // namespace powfactor
