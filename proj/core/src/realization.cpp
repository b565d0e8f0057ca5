#include "powfactor/realization.hpp"

namespace powfactor {

TreeShape shape_of(const AttachedTree& tree) {
    TreeShape t;
    t.parent.push_back(-1);
    t.dummy.push_back(false);
    for (const auto& node : tree) {
        t.parent.push_back(node.parent + 1);
        t.dummy.push_back(node.dummy);
    }
    return t;
}

Operation Operation::reversed() const {
    if (kind == Kind::Subdivide) return *this;
    return split(sets.q, sets.p);
}

std::string Operation::to_string() const {
    if (kind == Kind::Subdivide) return "Sub(" + std::to_string(times) + ")";
    return "(" + std::string(name(sets.p)) + "," + std::string(name(sets.q)) + ")";
}

std::vector<Operation> exact_operations(Label l) {
    std::vector<Operation> out;
    if (auto plain = plain_label(weight(l)); plain && *plain == l) out.push_back(Operation::subdivide(weight(l)));
    for (SetPair p : pairs(l)) out.push_back(Operation::split(p.p, p.q));
    return out;
}

}  // namespace powfactor
