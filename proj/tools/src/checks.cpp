#include "checks.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "powfactor/engine.hpp"
#include "powfactor/error.hpp"
#include "powfactor/generators.hpp"
#include "powfactor/graph_io.hpp"
#include "powfactor/labels.hpp"
#include "powfactor/tree_partition.hpp"
#include "powfactor/verify.hpp"

namespace powfactor::checks {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::map<std::string, std::string> tokens(const std::string& line) {
    std::map<std::string, std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq != std::string::npos) out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

bool is_clique(const SimpleGraph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.has_edge(s[i], s[j])) return false;
    return true;
}

bool induced_connected(const SimpleGraph& g, const std::vector<Vertex>& s) {
    if (s.empty()) return false;
    std::vector<bool> in(g.order(), false);
    for (Vertex v : s) in[v] = true;
    std::vector<Vertex> stack{s[0]};
    std::vector<bool> seen(g.order(), false);
    seen[s[0]] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : g.neighbors(x))
            if (in[y] && !seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == s.size();
}

// Shared between criteria 1 and 2.
struct Corpus {
    std::vector<SimpleGraph> graphs;
    std::vector<std::vector<std::string>> traces;
};

std::vector<SimpleGraph> distinct_random(int n, std::size_t count, std::uint64_t seed) {
    std::vector<SimpleGraph> out;
    std::set<std::string> seen;
    for (std::uint64_t s = seed; out.size() < count; ++s) {
        auto g = random_2connected(n, s);
        if (seen.insert(emit_graph6(canonical_form(g))).second) out.push_back(std::move(g));
    }
    return out;
}

CriterionResult criterion1(const CrossCheck& cross, Corpus& corpus) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 1;
    const auto four = enumerate_2connected(4);
    const auto eight = enumerate_2connected(8);
    const auto twelve = distinct_random(12, 1000, 1);
    for (const auto* set : {&four, &eight, &twelve}) corpus.graphs.insert(corpus.graphs.end(), set->begin(), set->end());

    std::size_t failures = 0;
    std::string first;
    auto fail = [&](const SimpleGraph& g, const std::string& why) {
        if (failures++ == 0) first = emit_graph6(g) + ": " + why;
    };
    EngineOptions unchecked;
    unchecked.verify = false;  // verified below, separately
    for (const auto& g : corpus.graphs) {
        EngineResult res;
        try {
            res = partition_2connected(g, unchecked);
        } catch (const EngineBug& e) {
            r.engine_bug = true;
            fail(g, e.what());
            corpus.traces.push_back(e.trace());
            continue;
        }
        corpus.traces.push_back(res.trace);
        if (auto v = verify_partition(g, res.parts); !v) {
            fail(g, v.detail);
            continue;
        }
        if (cross.nearly_connected)
            for (const auto& p : res.parts)
                if (!cross.nearly_connected(g, p.members)) fail(g, "second opinion rejects a part");
    }
    r.seconds = since(t0);
    r.ok = four.size() == 3 && failures == 0 && r.seconds < 300;
    std::ostringstream s;
    s << "engine partitions verified: " << four.size() << " classes on 4, " << eight.size() << " on 8, "
      << twelve.size() << " distinct random on 12, " << failures << " failures";
    if (!first.empty()) s << " (first " << first << ")";
    r.summary = s.str();
    return r;
}

CriterionResult criterion2(const Corpus& corpus) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 2;
    std::size_t steps = 0;
    std::size_t bad = 0;
    std::string first;
    for (const auto& trace : corpus.traces) {
        bool saw_base = false;
        for (const auto& line : trace) {
            const auto t = tokens(line);
            if (!t.count("case")) {
                ++bad;
                continue;
            }
            if (t.at("case") == "base") {
                saw_base = true;
                continue;
            }
            ++steps;
            bool ok = t.count("mod4") && t.at("mod4") == "0" && t.count("block") && t.at("block") == "1" &&
                      t.count("n") && t.count("w");
            if (ok) ok = (std::stoi(t.at("n")) + std::stoi(t.at("w"))) % 4 == 0;
            if (!ok && bad++ == 0) first = line;
        }
        if (!saw_base && bad++ == 0) first = "trace without a base step";
    }
    r.ok = bad == 0 && steps > 0;
    std::ostringstream s;
    s << "replayed " << steps << " reduction steps over " << corpus.traces.size() << " traces, " << bad
      << " violations";
    if (!first.empty()) s << " (first: " << first << ")";
    r.summary = s.str();
    r.seconds = since(t0);
    return r;
}

CriterionResult criterion3(const CrossCheck& cross) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 3;
    std::vector<std::string> problems;

    const auto k4 = subdivided_k4(4);
    if (k4.order() != 24) problems.push_back("subdivided_k4(4) has " + std::to_string(k4.order()) + " vertices");
    const auto k4_cube = graph_power(k4, 3);
    if (has_kr_factor(k4_cube, 4)) problems.push_back("subdivided_k4(4)^3 has a K4-factor");
    if (cross.clique_factor && cross.clique_factor(k4_cube, 4)) problems.push_back("second opinion finds a factor in G^3");
    try {
        const auto res = partition_2connected(k4);
        if (auto v = verify_partition(k4, res.parts); !v) problems.push_back("engine partition: " + v.detail);
        const auto fourth = graph_power(k4, 4);
        for (const auto& p : res.parts)
            if (!is_clique(fourth, p.members)) problems.push_back("a part is not a clique of G^4");
    } catch (const EngineBug& e) {
        r.engine_bug = true;
        problems.push_back(e.what());
    }
    const double k4_seconds = since(t0);

    const auto t1 = Clock::now();
    const auto th = theta(4);
    if (th.order() != 20) problems.push_back("theta(4) has " + std::to_string(th.order()) + " vertices");
    const auto th_cube = graph_power(th, 3);
    if (has_kr_factor(th_cube, 4)) problems.push_back("theta(4)^3 has a K4-factor");
    if (cross.clique_factor && cross.clique_factor(th_cube, 4)) problems.push_back("second opinion finds a factor in theta^3");
    const double theta_seconds = since(t1);

    r.seconds = since(t0);
    r.ok = problems.empty() && k4_seconds < 60 && theta_seconds < 60;
    std::ostringstream s;
    if (problems.empty())
        s << "subdivided_k4(4): 24 vertices, no K4-factor in G^3, engine gives one in G^4; theta(4): 20 vertices, "
             "no K4-factor in G^3";
    else
        s << problems.front();
    r.summary = s.str();
    return r;
}

CriterionResult criterion4(const CrossCheck& cross) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 4;
    std::vector<std::string> problems;

    const auto t = spider(4);
    if (t.order() != 16) problems.push_back("spider(4) has " + std::to_string(t.order()) + " vertices");
    const auto t5 = graph_power(t, 5);
    if (has_kr_factor(t5, 4)) problems.push_back("spider(4)^5 has a K4-factor");
    if (cross.clique_factor && cross.clique_factor(t5, 4)) problems.push_back("second opinion finds a factor in T^5");
    const auto t6 = graph_power(t, 6);
    std::size_t widest = 0;
    for (const auto& p : partition_tree(t, {4, 4, 4, 4})) {
        widest = std::max(widest, p.witness.size());
        if (p.witness.size() > 7 || !induced_connected(t, p.witness)) problems.push_back("bad witness");
        if (!is_clique(t6, p.members)) problems.push_back("a part is not a clique of T^6");
    }

    const auto s3 = spider(3);
    if (s3.order() != 9) problems.push_back("spider(3) has " + std::to_string(s3.order()) + " vertices");
    if (has_kr_factor(graph_power(s3, 3), 3)) problems.push_back("spider(3)^3 has a K3-factor");
    if (!has_kr_factor(graph_power(s3, 4), 3)) problems.push_back("spider(3)^4 has no K3-factor");
    if (cross.clique_factor && (cross.clique_factor(graph_power(s3, 3), 3) || !cross.clique_factor(graph_power(s3, 4), 3)))
        problems.push_back("second opinion disagrees on spider(3)");

    r.seconds = since(t0);
    r.ok = problems.empty() && r.seconds < 10;
    std::ostringstream s;
    if (problems.empty())
        s << "spider(4): 16 vertices, no K4-factor in T^5, tree partition witnesses of order <= " << widest
          << " form a K4-factor of T^6; spider(3): no K3-factor in T^3, one in T^4";
    else
        s << problems.front();
    r.summary = s.str();
    return r;
}

CriterionResult criterion5() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 5;
    std::size_t checked = 0;
    std::size_t bad = 0;
    for (Label l : kAllLabels) {
        const Label f = involution(l);
        if (involution(f) != l) ++bad;
        const auto text = name(l);
        if (text.size() < 2 || weight(l) != text[1] - '0') ++bad;
        for (TreeSet p : kAllTreeSets)
            for (TreeSet q : kAllTreeSets) {
                ++checked;
                if (contains(l, {p, q}) != contains(f, {q, p})) ++bad;
                // lexicographically smallest listed pair dominated by (p, q)
                std::optional<SetPair> best;
                for (SetPair c : pairs(l))
                    if (leq(c.p, p) && leq(c.q, q) && (!best || std::pair{c.p, c.q} < std::pair{best->p, best->q}))
                        best = c;
                if (admits(l, p, q) != best) ++bad;
            }
    }
    r.ok = bad == 0;
    r.seconds = since(t0);
    r.summary = std::to_string(kAllLabels.size()) + " labels x " + std::to_string(checked / kAllLabels.size()) +
                " set pairs: involution, weights and admits, " + std::to_string(bad) + " mismatches";
    return r;
}

CriterionResult criterion6(const CrossCheck& cross) {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 6;
    std::size_t disagreements = 0;
    std::size_t total = 0;
    std::string first;
    for (int n : {8, 12}) {
        for (const auto& g : distinct_random(n, 250, 1000 + n)) {
            ++total;
            const auto bf = brute_force_partition(g, std::vector<int>(n / 4, 4));
            std::string why;
            if (!bf)
                why = "brute force finds nothing";
            else if (auto v = verify_partition(g, *bf); !v)
                why = "brute force output: " + v.detail;
            else if (cross.nearly_connected)
                for (const auto& p : *bf)
                    if (!cross.nearly_connected(g, p.members)) why = "second opinion rejects a brute-force part";
            if (why.empty()) {
                try {
                    if (auto v = verify_partition(g, partition_2connected(g).parts); !v) why = "engine: " + v.detail;
                } catch (const EngineBug& e) {
                    r.engine_bug = true;
                    why = e.what();
                }
            }
            if (!why.empty() && disagreements++ == 0) first = emit_graph6(g) + ": " + why;
        }
    }
    r.seconds = since(t0);
    r.ok = disagreements == 0 && r.seconds < 600;
    std::ostringstream s;
    s << total << " random 2-connected graphs on 8 and 12: brute force and engine agree, " << disagreements
      << " disagreements";
    if (!first.empty()) s << " (first " << first << ")";
    r.summary = s.str();
    return r;
}

CriterionResult criterion7() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 7;
    std::mt19937_64 rng(7);
    std::size_t parts = 0;
    std::size_t bad = 0;
    for (int i = 0; i < 200; ++i) {
        const int n = 1 + static_cast<int>(rng() % 30);
        const auto t = random_tree(n, rng());
        std::vector<int> sizes;
        for (int left = n; left > 0;) {
            const int s = 1 + static_cast<int>(rng() % std::min(left, 8));
            sizes.push_back(s);
            left -= s;
        }
        const auto out = partition_tree(t, sizes);
        std::vector<int> seen(n, 0);
        if (out.size() != sizes.size()) ++bad;
        for (std::size_t k = 0; k < out.size(); ++k) {
            const auto& p = out[k];
            ++parts;
            for (Vertex v : p.members) ++seen[v];
            const bool ok = static_cast<int>(p.members.size()) == sizes[k] &&
                            static_cast<int>(p.witness.size()) <= 2 * sizes[k] - 1 && induced_connected(t, p.witness) &&
                            std::includes(p.witness.begin(), p.witness.end(), p.members.begin(), p.members.end());
            if (!ok) ++bad;
        }
        if (std::any_of(seen.begin(), seen.end(), [](int x) { return x != 1; })) ++bad;
    }
    r.seconds = since(t0);
    r.ok = bad == 0 && r.seconds < 60;
    r.summary = "200 random trees, " + std::to_string(parts) + " parts: witness order and connectivity, " +
                std::to_string(bad) + " failures";
    return r;
}

CriterionResult criterion8() {
    const auto t0 = Clock::now();
    CriterionResult r;
    r.id = 8;
    const auto report = explore(enumerate_2connected(8), {3, 5});
    r.ok = report.failures.empty();
    r.seconds = since(t0);
    r.summary = "explore n=8 sizes 3,5: " + std::to_string(report.graphs) + " graphs, " +
                std::to_string(report.failures.size()) + " without a partition";
    if (!report.failures.empty()) r.summary += " (first " + emit_graph6(report.failures.front()) + ")";
    return r;
}

}  // namespace

ExploreReport explore(const std::vector<SimpleGraph>& graphs, const std::vector<int>& sizes,
                      const std::function<void(const SimpleGraph&)>& on_failure) {
    ExploreReport out;
    for (const auto& g : graphs) {
        ++out.graphs;
        BruteForceOptions opts;
        opts.ignore_limit = true;
        if (brute_force_partition(g, sizes, opts)) continue;
        out.failures.push_back(g);
        if (on_failure) on_failure(g);
    }
    return out;
}

std::string format(const CriterionResult& r) {
    std::ostringstream s;
    s << "criterion " << r.id << ": " << (r.ok ? "PASS" : "FAIL") << "  " << r.summary << " [" << std::fixed
      << std::setprecision(2) << r.seconds << "s]";
    return s.str();
}

std::vector<CriterionResult> run_acceptance(const CrossCheck& cross,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    std::vector<CriterionResult> out;
    auto emit = [&](CriterionResult r) {
        if (on_result) on_result(r);
        out.push_back(std::move(r));
    };
    Corpus corpus;
    emit(criterion1(cross, corpus));
    emit(criterion2(corpus));
    emit(criterion3(cross));
    emit(criterion4(cross));
    emit(criterion5());
    emit(criterion6(cross));
    emit(criterion7());
    emit(criterion8());
    return out;
}

}  // namespace powfactor::checks
