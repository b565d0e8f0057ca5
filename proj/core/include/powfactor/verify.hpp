#pragma once

#include <optional>
#include <string>
#include <vector>

#include "powfactor/graph.hpp"
#include "powfactor/realization.hpp"

namespace powfactor {

// Connected vertex set S with a ⊆ S and |S| <= |a|+1, sorted; a itself is
// tried first, then a plus each outside vertex in id order.
std::optional<std::vector<Vertex>> is_nearly_connected(const SimpleGraph& g, const std::vector<Vertex>& a);

struct Verdict {
    bool ok = true;
    std::string detail;

    explicit operator bool() const { return ok; }
};

// Disjoint, covering, sizes as a multiset equal to expected_sizes (all 4 if
// absent), every part nearly connected.
Verdict verify_partition(const SimpleGraph& g, const Partition& parts,
                         const std::optional<std::vector<int>>& expected_sizes = std::nullopt);

// Fills in each part's witness. Throws PreconditionError if some part has none.
void attach_witnesses(const SimpleGraph& g, Partition& parts);

// Exact K_r-factor search on g itself (pass a power for G^k).
std::optional<std::vector<std::vector<Vertex>>> has_kr_factor(const SimpleGraph& g, int r);

enum class PartMode { NearlyConnected, CliqueInPower };

struct BruteForceOptions {
    PartMode mode = PartMode::NearlyConnected;
    int power = 1;             // k for CliqueInPower
    int max_order = 16;        // refuse larger inputs ...
    bool ignore_limit = false; // ... unless this is set
};

// Complete backtracking search for a partition with the given part sizes.
std::optional<Partition> brute_force_partition(const SimpleGraph& g, const std::vector<int>& sizes,
                                               const BruteForceOptions& options = {});

}  // namespace powfactor
