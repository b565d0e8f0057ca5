#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <numeric>
#include <string>
#include <vector>

#include "checks.hpp"
#include "powfactor/engine.hpp"
#include "powfactor/error.hpp"
#include "powfactor/generators.hpp"
#include "powfactor/graph_io.hpp"
#include "powfactor/labels.hpp"
#include "powfactor/tree_partition.hpp"
#include "powfactor/verify.hpp"

namespace {

using namespace powfactor;
using nlohmann::json;

enum Exit { kOk = 0, kViolation = 1, kUsage = 2, kEngineBug = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string input = "-";
    std::string format = "auto";
    bool json = false;
};

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

// An edge list holds one graph; graph6 input may hold one per line.
std::vector<SimpleGraph> read_graphs(const Common& c) {
    const auto text = slurp(c.input);
    GraphFormat f;
    if (c.format == "auto")
        f = sniff_format(text);
    else
        f = c.format == "graph6" ? GraphFormat::Graph6 : GraphFormat::EdgeList;
    if (f == GraphFormat::Graph6) {
        auto gs = parse_graph6_stream(text);
        if (gs.empty()) throw UsageError("no graph in " + c.input);
        return gs;
    }
    return {parse_edge_list(text)};
}

SimpleGraph read_one(const Common& c) {
    auto gs = read_graphs(c);
    if (gs.size() != 1) throw UsageError("expected one graph, got " + std::to_string(gs.size()));
    return gs.front();
}

std::string join(const std::vector<Vertex>& vs) {
    std::string out;
    for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

json parts_json(const Partition& parts) {
    json arr = json::array();
    for (const auto& p : parts) arr.push_back({{"members", p.members}, {"witness", p.witness}});
    return arr;
}

void print_parts(const Partition& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i)
        std::cout << "part " << i << ": " << join(parts[i].members) << "  witness: " << join(parts[i].witness) << "\n";
}

void add_input(CLI::App* sub, Common& c) {
    sub->add_option("file", c.input, "input graph, - for stdin")->required();
    sub->add_option("--format", c.format, "input format")
        ->check(CLI::IsMember({"auto", "edges", "graph6"}))
        ->capture_default_str();
    sub->add_flag("--json", c.json, "structured output");
}

int cmd_partition(const Common& c, bool with_trace) {
    int status = kOk;
    for (const auto& g : read_graphs(c)) {
        EngineResult res;
        try {
            res = partition_2connected(g);
        } catch (const EngineBug& e) {
            std::cerr << "engine bug on " << emit_graph6(g) << ": " << e.what() << "\n";
            for (const auto& line : e.trace()) std::cerr << "  " << line << "\n";
            return kEngineBug;
        }
        const auto verdict = verify_partition(g, res.parts);
        if (!verdict) {
            // never print an unverified partition
            std::cerr << "verification failed on " << emit_graph6(g) << ": " << verdict.detail << "\n";
            status = kViolation;
            continue;
        }
        if (c.json) {
            json out = {{"command", "partition"}, {"graph6", emit_graph6(g)}, {"order", g.order()},
                        {"parts", parts_json(res.parts)}, {"verified", true}};
            if (with_trace) out["trace"] = res.trace;
            std::cout << out.dump() << "\n";
        } else {
            if (with_trace)
                for (const auto& line : res.trace) std::cout << line << "\n";
            print_parts(res.parts);
            std::cout << res.parts.size() << " parts of 4, verified\n";
        }
    }
    return status;
}

int cmd_tree_partition(const Common& c, const std::vector<int>& sizes) {
    const auto g = read_one(c);
    for (int s : sizes)
        if (s < 1) throw UsageError("--sizes entries must be positive");
    if (std::accumulate(sizes.begin(), sizes.end(), 0) != g.order())
        throw UsageError("--sizes must sum to the order " + std::to_string(g.order()));
    const auto parts = partition_tree(g, sizes);
    if (c.json) {
        json arr = json::array();
        for (const auto& p : parts) arr.push_back({{"members", p.members}, {"witness", p.witness}});
        std::cout << json{{"command", "tree-partition"}, {"order", g.order()}, {"sizes", sizes}, {"parts", arr}}.dump()
                  << "\n";
        return kOk;
    }
    for (std::size_t i = 0; i < parts.size(); ++i)
        std::cout << "part " << i << ": " << join(parts[i].members) << "  witness: " << join(parts[i].witness) << "\n";
    return kOk;
}

void emit(const SimpleGraph& g, const std::string& out_format, bool as_json) {
    if (as_json) {
        std::cout << json{{"graph6", emit_graph6(g)}, {"order", g.order()}, {"edges", g.edges()}}.dump() << "\n";
        return;
    }
    if (out_format == "graph6")
        std::cout << emit_graph6(g) << "\n";
    else
        std::cout << emit_edge_list(g);
}

int cmd_power(const Common& c, int k, const std::string& out_format) {
    for (const auto& g : read_graphs(c)) emit(graph_power(g, k), out_format, c.json);
    return kOk;
}

int cmd_factor(const Common& c, int r, int k) {
    for (const auto& g : read_graphs(c)) {
        const auto host = k == 1 ? g : graph_power(g, k);
        const auto f = has_kr_factor(host, r);
        const std::string kr = "K" + std::to_string(r) + "-factor";
        if (c.json) {
            std::cout << json{{"command", "factor"}, {"graph6", emit_graph6(g)}, {"r", r}, {"k", k},
                              {"factor", f ? json(*f) : json(nullptr)}}
                             .dump()
                      << "\n";
        } else if (!f) {
            std::cout << "no " << kr << "\n";
        } else {
            std::cout << kr << ":\n";
            for (const auto& clique : *f) std::cout << "  " << join(clique) << "\n";
        }
    }
    return kOk;
}

Partition parse_parts(const std::string& text) {
    const bool inline_json = !text.empty() && (text.front() == '[' || text.front() == '{');
    json j;
    try {
        j = json::parse(inline_json ? text : slurp(text));
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("--parts: ") + e.what());
    }
    // accepts a bare array of arrays or the object printed by `partition --json`
    if (j.is_object() && j.contains("parts")) j = j["parts"];
    if (!j.is_array()) throw UsageError("--parts: expected an array of parts");
    Partition out;
    try {
        for (const auto& p : j) {
            Part part;
            part.members = (p.is_object() ? p.at("members") : p).get<std::vector<Vertex>>();
            out.push_back(std::move(part));
        }
    } catch (const json::exception& e) {
        throw UsageError(std::string("--parts: ") + e.what());
    }
    return out;
}

int cmd_verify(const Common& c, const std::string& parts_spec, const std::vector<int>& sizes) {
    const auto g = read_one(c);
    auto parts = parse_parts(parts_spec);
    std::optional<std::vector<int>> expected;
    if (!sizes.empty()) expected = sizes;
    const auto v = verify_partition(g, parts, expected);
    if (c.json) {
        json out = {{"command", "verify"}, {"ok", v.ok}, {"detail", v.detail}};
        if (v.ok) {
            attach_witnesses(g, parts);
            out["parts"] = parts_json(parts);
        }
        std::cout << out.dump() << "\n";
    } else {
        std::cout << (v.ok ? "verified" : "rejected: " + v.detail) << "\n";
    }
    return v.ok ? kOk : kViolation;
}

int cmd_gen(const std::string& family, int r, int n, std::uint64_t seed, const std::string& out_format, bool as_json) {
    SimpleGraph g;
    if (family == "spider" || family == "subdivided-k4" || family == "theta") {
        if (r < 2) throw UsageError(family + " needs -r >= 2");
        g = family == "spider" ? spider(r) : family == "theta" ? theta(r) : subdivided_k4(r);
    } else {
        if (n < 1) throw UsageError(family + " needs -n >= 1");
        if (family == "random-2connected" && n < 3) throw UsageError("random-2connected needs -n >= 3");
        g = family == "random-tree" ? random_tree(n, seed) : random_2connected(n, seed);
    }
    emit(g, out_format, as_json);
    return kOk;
}

int cmd_explore(int n, const std::vector<int>& sizes, const std::string& input, bool strict, bool as_json) {
    for (int s : sizes)
        if (s < 1) throw UsageError("--sizes entries must be positive");
    const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (input.empty() && total != n)
        throw UsageError("--sizes sum to " + std::to_string(total) + ", not --n " + std::to_string(n));
    std::vector<SimpleGraph> graphs;
    if (!input.empty()) {
        Common c;
        c.input = input;
        c.format = "graph6";
        // external streams (geng and the like) may hold graphs that are not 2-connected
        for (auto& g : read_graphs(c))
            if (is_biconnected(g)) graphs.push_back(std::move(g));
    } else {
        if (n < 3 || n > 8) throw UsageError("--n must be between 3 and 8 (or pass --input)");
        graphs = enumerate_2connected(n);
    }
    for (const auto& g : graphs)
        if (g.order() != total)
            throw UsageError("--sizes sum to " + std::to_string(total) + " but a graph has order " +
                             std::to_string(g.order()));
    const auto report = checks::explore(graphs, sizes, [&](const SimpleGraph& g) {
        if (!as_json) std::cout << "no partition: " << emit_graph6(g) << "\n";
    });
    if (as_json) {
        json failures = json::array();
        for (const auto& g : report.failures) failures.push_back(emit_graph6(g));
        std::cout << json{{"command", "explore"}, {"sizes", sizes}, {"graphs", report.graphs}, {"failures", failures}}
                         .dump()
                  << "\n";
    } else {
        std::cout << report.graphs << " graphs, " << report.failures.size() << " without a partition\n";
    }
    return strict && !report.failures.empty() ? kViolation : kOk;
}

int cmd_selftest(bool as_json) {
    const auto results = checks::run_acceptance({}, [&](const checks::CriterionResult& r) {
        if (!as_json) std::cout << checks::format(r) << std::endl;
    });
    bool ok = true;
    bool bug = false;
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.ok;
        bug = bug || r.engine_bug;
        arr.push_back({{"id", r.id}, {"ok", r.ok}, {"summary", r.summary}, {"seconds", r.seconds}});
    }
    if (as_json) std::cout << json{{"command", "selftest"}, {"ok", ok}, {"criteria", arr}}.dump() << "\n";
    return bug ? kEngineBug : ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Partitions of 2-connected graphs into nearly connected 4-sets"};
    app.require_subcommand(1);

    Common common;

    auto* partition = app.add_subcommand("partition", "engine partition of a 2-connected graph, verified");
    add_input(partition, common);
    bool trace = false;
    partition->add_flag("--trace", trace, "print the reduction trace");

    auto* tree = app.add_subcommand("tree-partition", "partition a connected graph into parts of given sizes");
    add_input(tree, common);
    std::vector<int> sizes;
    tree->add_option("--sizes", sizes, "part sizes, comma separated")->required()->delimiter(',');

    auto* power = app.add_subcommand("power", "emit the k-th power");
    add_input(power, common);
    int k = 1;
    std::string out_format = "edges";
    power->add_option("-k", k, "exponent")->required()->check(CLI::PositiveNumber);
    power->add_option("--out", out_format, "output format")->check(CLI::IsMember({"edges", "graph6"}));

    auto* factor = app.add_subcommand("factor", "exact K_r-factor decision on G or G^k");
    add_input(factor, common);
    int r = 0;
    factor->add_option("-r", r, "clique order")->required()->check(CLI::Range(2, 64));
    factor->add_option("-k", k, "power of G to search")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "check a proposed partition");
    add_input(verify, common);
    std::string parts_spec;
    verify->add_option("--parts", parts_spec, "JSON array of parts, inline or a file")->required();
    verify->add_option("--sizes", sizes, "expected part sizes (default all 4)")->delimiter(',');

    auto* gen = app.add_subcommand("gen", "emit a generated graph");
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    bool gen_json = false;
    gen->add_option("family", family, "graph family")
        ->required()
        ->check(CLI::IsMember({"spider", "subdivided-k4", "theta", "random-2connected", "random-tree"}));
    gen->add_option("-r", r, "family parameter");
    gen->add_option("-n", n, "order, for the random families");
    gen->add_option("--seed", seed, "seed, for the random families");
    gen->add_option("--out", out_format, "output format")->check(CLI::IsMember({"edges", "graph6"}));
    gen->add_flag("--json", gen_json, "structured output");

    auto* explore = app.add_subcommand("explore", "brute-force partitions with arbitrary part sizes");
    std::string explore_input;
    bool strict = false;
    bool explore_json = false;
    explore->add_option("--n", n, "order of the enumerated graphs");
    explore->add_option("--input", explore_input, "graph6 stream to use instead of the enumeration");
    explore->add_option("--sizes", sizes, "part sizes, comma separated")->required()->delimiter(',');
    explore->add_flag("--strict", strict, "exit 1 if some graph has no partition");
    explore->add_flag("--json", explore_json, "structured output");

    auto* selftest = app.add_subcommand("selftest", "run the acceptance checks");
    bool selftest_json = false;
    selftest->add_flag("--json", selftest_json, "structured output");

    app.add_subcommand("labels", "print the label catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*partition) return cmd_partition(common, trace);
        if (*tree) return cmd_tree_partition(common, sizes);
        if (*power) return cmd_power(common, k, out_format);
        if (*factor) return cmd_factor(common, r, k);
        if (*verify) return cmd_verify(common, parts_spec, sizes);
        if (*gen) return cmd_gen(family, r, n, seed, out_format, gen_json);
        if (*explore) return cmd_explore(n, sizes, explore_input, strict, explore_json);
        if (*selftest) return cmd_selftest(selftest_json);
        std::cout << dump_catalog();
        return kOk;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << common.input << ": " << e.what() << "\n";
        return kUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const EngineBug& e) {
        std::cerr << "engine bug: " << e.what() << "\n";
        return kEngineBug;
    } catch (const GuardTrap& e) {
        std::cerr << "engine bug: " << e.what() << "\n";
        return kEngineBug;
    }
}
