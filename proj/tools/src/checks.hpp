#pragma once

// Acceptance checks shared by `powfactor selftest` and the acceptance test
// binary. Everything is seeded, so two runs print the same numbers.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "powfactor/graph.hpp"

namespace powfactor::checks {

struct ExploreReport {
    std::size_t graphs = 0;
    std::vector<SimpleGraph> failures;  // no partition with the requested sizes
};

// Brute-force search for a nearly connected partition with the given part
// sizes on every graph. on_failure fires as failures are found.
ExploreReport explore(const std::vector<SimpleGraph>& graphs, const std::vector<int>& sizes,
                      const std::function<void(const SimpleGraph&)>& on_failure = {});

// Optional second opinions. When set they are consulted alongside the
// library's own verifier and must agree.
struct CrossCheck {
    std::function<bool(const SimpleGraph&, const std::vector<Vertex>&)> nearly_connected;
    std::function<bool(const SimpleGraph&, int r)> clique_factor;
};

struct CriterionResult {
    int id = 0;
    bool ok = false;
    bool engine_bug = false;
    std::string summary;
    double seconds = 0;
};

std::string format(const CriterionResult& r);

// Runs criteria 1..8 in order, calling on_result after each.
std::vector<CriterionResult> run_acceptance(const CrossCheck& cross = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace powfactor::checks
