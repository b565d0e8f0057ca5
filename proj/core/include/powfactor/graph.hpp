#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

namespace powfactor {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

// Undirected simple graph on vertices 0..n-1. Adjacency lists are kept sorted.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }
    std::size_t size() const noexcept { return m_; }

    // Returns false if the edge was already present. Throws PreconditionError
    // on a loop or an endpoint out of range.
    bool add_edge(Vertex u, Vertex v);
    bool has_edge(Vertex u, Vertex v) const;

    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    // Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t m_ = 0;
};

struct MultiEdge {
    EdgeId id;
    Vertex u;
    Vertex v;
};

// Undirected multigraph with stable edge ids. Loops are rejected.
class Multigraph {
public:
    explicit Multigraph(int n = 0) : n_(n) {}

    int order() const noexcept { return n_; }
    const std::vector<MultiEdge>& edges() const noexcept { return edges_; }

    EdgeId add_edge(Vertex u, Vertex v);
    bool remove_edge(EdgeId id);

private:
    int n_;
    EdgeId next_id_ = 0;
    std::vector<MultiEdge> edges_;
};

bool is_connected(const SimpleGraph& g);
bool is_biconnected(const SimpleGraph& g);
bool is_biconnected(const Multigraph& g);

// Biconnectivity of the subgraph induced by the vertices flagged in `present`.
// adj may list a neighbour several times (parallel edges) and may mention
// vertices that are not present; those are ignored.
bool is_biconnected_subgraph(const std::vector<std::vector<Vertex>>& adj, const std::vector<bool>& present);

struct TwoCut {
    Vertex u;
    Vertex v;
    std::vector<Vertex> component;  // sorted
};

// Among all 2-cuts, one whose smallest component of g - {u,v} has minimum
// order. Ties go to the lexicographically first pair, then to the component
// holding the lowest vertex. Absent when g is 3-connected or has < 4 vertices.
std::optional<TwoCut> smallest_2cut_component(const SimpleGraph& g);

std::vector<int> bfs_distances(const SimpleGraph& g, Vertex source);
SimpleGraph graph_power(const SimpleGraph& g, int k);

}  // namespace powfactor
