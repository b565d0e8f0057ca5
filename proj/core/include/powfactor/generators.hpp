#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "powfactor/graph.hpp"

namespace powfactor {

// K_{1,r+1} with every edge subdivided r-2 times: r^2 vertices. Vertex 0 is
// the centre, 1..r+1 the leaves, then each leg's inner vertices from the
// centre outwards.
SimpleGraph spider(int r);

// K4 on 0..3 with edge 01 subdivided r+1 times and the other five r-1 times:
// 6r vertices. Subdivision vertices follow, edge by edge (01, 02, 03, 12, 13, 23).
SimpleGraph subdivided_k4(int r);

// r+2 internally disjoint paths of length r between 0 and 1: r^2+r vertices.
SimpleGraph theta(int r);

// Hamiltonian cycle on a random permutation plus each chord with probability 1/2.
SimpleGraph random_2connected(int n, std::uint64_t seed);

// Uniform random labelled tree (Prufer sequence).
SimpleGraph random_tree(int n, std::uint64_t seed);

// One representative per isomorphism class of 2-connected graphs on n
// vertices, 3 <= n <= 8, in canonical form, sorted by graph6.
std::vector<SimpleGraph> enumerate_2connected(int n);

// Canonical relabeling: isomorphic graphs give equal results.
SimpleGraph canonical_form(const SimpleGraph& g);

}  // namespace powfactor
