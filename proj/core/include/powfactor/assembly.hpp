#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "powfactor/realization.hpp"

namespace powfactor {

// Local picture around a reduction: the endpoints and eliminated vertices,
// with the realized child edges hung off them. Finds output trees and a
// partition of the leftover active vertices into nearly connected 4-sets.
class LocalAssembly {
public:
    // A vertex that survives the reduction. It may root an output tree or
    // serve as a connector, but is never covered here.
    int add_outer(Vertex v);
    // A vertex removed by the reduction; it must be covered.
    int add_junction(Vertex v);

    // Hang a child realization between two nodes of this assembly.
    void attach(const Realization& r, int tail, int head);

    // Output trees rooted at a (from p) and b (from q), the rest covered.
    Realization split(int a, TreeSet p, int b, TreeSet q) const;
    // Everything covered, no output trees.
    Realization close() const;

    std::string describe() const;

private:
    enum class Role : std::uint8_t { Outer, Junction, Member };

    struct Node {
        Vertex vertex;
        Role role;
        bool active;
    };

    struct Arm {
        int junction;
        std::vector<int> ends;  // nodes adjacent to the junction through this child
    };

    struct Local;

    int add_node(Vertex v, Role role, bool active);
    Realization solve(const std::function<std::optional<Realization>(const Local&)>& attempt,
                      const std::string& what) const;
    void link(int x, int y);

    std::vector<Node> nodes_;
    std::vector<std::uint64_t> adj_;
    std::vector<Arm> arms_;
    std::vector<Part> inherited_;
};

}  // namespace powfactor
