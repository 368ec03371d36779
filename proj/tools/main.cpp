#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acqtime/ac_one.hpp"
#include "acqtime/bounds.hpp"
#include "acqtime/dynamics.hpp"
#include "acqtime/exact.hpp"
#include "acqtime/families.hpp"
#include "acqtime/generators.hpp"
#include "acqtime/graph.hpp"
#include "acqtime/hardness.hpp"
#include "acqtime/io.hpp"
#include "acqtime/paths.hpp"

namespace {

using nlohmann::json;
using namespace acqtime;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCertificate = 3;

struct GenArgs {
    std::string family;
    std::vector<int> params;
    double p = 0.5;
    std::uint64_t seed = 1;
    std::string out;
    bool json_out = false;
};

struct BoundsArgs {
    std::string graph;
    std::vector<int> separator;
    bool have_separator = false;
    bool json_out = false;
};

struct StratArgs {
    std::string method;
    std::string graph;
    std::string out;
    int effort = 20000;
    std::uint64_t seed = 1;
    bool json_out = false;
};

struct VerifyArgs {
    std::string graph;
    std::string strategy;
    bool json_out = false;
};

struct ExactArgs {
    std::string graph;
    int max_rounds = 16;
    std::string witness_out;
    bool json_out = false;
};

struct Ac1Args {
    std::string mode;
    std::string graph;
    std::string out;
    std::uint64_t seed = 1;
    int c = 1;
    int restarts = 5;
    bool json_out = false;
};

struct ReduceArgs {
    int t = 1;
    std::string colored;
    std::string out;
    std::string witness;
    bool json_out = false;
};

struct AuditArgs {
    std::string graph;
    bool json_out = false;
};

void need_params(const GenArgs& a, std::size_t count) {
    if (a.params.size() != count) {
        throw std::runtime_error("family " + a.family + " expects " + std::to_string(count) +
                                 " value(s) in --params");
    }
}

int run_gen(const GenArgs& a) {
    if (a.family == "plant") {
        need_params(a, 2);
        ColoredGraph cg = plant_equicolorable(a.params[0], a.params[1], a.p, a.seed);
        write_colored_graph_file(a.out, cg);
        if (a.json_out) {
            json doc{{"format_version", kFormatVersion},
                     {"family", a.family},
                     {"n", cg.graph.vertex_count()},
                     {"m", cg.graph.edge_count()},
                     {"colors", cg.coloring.k},
                     {"path", a.out}};
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << "wrote " << a.out << " (n=" << cg.graph.vertex_count()
                      << ", m=" << cg.graph.edge_count() << ", colors=" << cg.coloring.k << ")\n";
        }
        return kExitOk;
    }

    std::optional<FamilySpec> spec;
    if (a.family == "path") {
        need_params(a, 1);
        spec = PathSpec{a.params[0]};
    } else if (a.family == "cycle") {
        need_params(a, 1);
        spec = CycleSpec{a.params[0]};
    } else if (a.family == "complete") {
        need_params(a, 1);
        spec = CompleteSpec{a.params[0]};
    } else if (a.family == "kbip") {
        need_params(a, 2);
        spec = CompleteBipartiteSpec{a.params[0], a.params[1]};
    } else if (a.family == "hypercube") {
        need_params(a, 1);
        spec = HypercubeSpec{a.params[0]};
    } else if (a.family == "bintree") {
        need_params(a, 1);
        spec = BinaryTreeSpec{a.params[0]};
    } else if (a.family == "barbell") {
        need_params(a, 1);
        spec = BarbellSpec{a.params[0]};
    } else if (a.family == "ring") {
        need_params(a, 2);
        spec = CliqueRingSpec{a.params[0], a.params[1]};
    } else if (a.family == "octopus") {
        need_params(a, 2);
        spec = OctopusSpec{a.params[0], a.params[1]};
    } else if (a.family == "gnp") {
        need_params(a, 1);
        spec = GnpSpec{a.params[0], a.p, a.seed};
    } else {
        throw std::runtime_error("unknown family " + a.family);
    }

    Graph g = generate(*spec);
    write_graph_file(a.out, g);
    if (a.json_out) {
        json doc{{"format_version", kFormatVersion},
                 {"family", a.family},
                 {"n", g.vertex_count()},
                 {"m", g.edge_count()},
                 {"path", a.out}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "wrote " << a.out << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
                  << ")\n";
    }
    return kExitOk;
}

int run_bounds(const BoundsArgs& a) {
    Graph g = read_graph_file(a.graph);
    std::optional<std::vector<Vertex>> sep;
    if (a.have_separator) sep = a.separator;
    BoundsReport r = lower_bounds(g, sep);
    if (a.json_out) {
        json doc{{"format_version", kFormatVersion},
                 {"diameter_bound", r.diameter_bound},
                 {"edge_bound", r.edge_bound},
                 {"bottleneck_separator", r.bottleneck_separator},
                 {"best_lower", r.best_lower}};
        doc["bottleneck_bound"] = r.bottleneck_bound ? json(*r.bottleneck_bound) : json(nullptr);
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "diameter_bound " << r.diameter_bound << '\n';
        std::cout << "edge_bound " << r.edge_bound << '\n';
        if (r.bottleneck_bound) {
            std::cout << "bottleneck_bound " << *r.bottleneck_bound << " separator";
            for (Vertex v : r.bottleneck_separator) std::cout << ' ' << v;
            std::cout << '\n';
        } else {
            std::cout << "bottleneck_bound -\n";
        }
        std::cout << "best_lower " << r.best_lower << '\n';
    }
    return kExitOk;
}

bool matches_family(const Graph& g, const FamilySpec& spec) {
    try {
        Graph canon = generate(spec);
        return canon.vertex_count() == g.vertex_count() && canon.edges() == g.edges();
    } catch (const std::exception&) {
        return false;
    }
}

int run_strat(const StratArgs& a) {
    Graph g = read_graph_file(a.graph);
    const int n = g.vertex_count();
    Strategy s;
    std::string method = a.method;
    if (a.method == "auto") {
        BestResult best = best_strategy(g, a.effort, a.seed);
        s = std::move(best.strategy);
        method = "auto:" + best.method;
    } else if (a.method == "path") {
        if (n < 1 || !matches_family(g, PathSpec{n})) {
            throw std::runtime_error("graph is not a path in canonical order");
        }
        s = path_strategy(n);
    } else if (a.method == "ham") {
        std::vector<Vertex> path = long_path(g, a.effort, a.seed);
        if (static_cast<int>(path.size()) != n) {
            throw std::runtime_error("no spanning path found; try a larger --effort");
        }
        s = hamiltonian_strategy(g, path);
    } else if (a.method == "tree") {
        int depth = -1;
        for (int d = 0; (1 << (d + 1)) - 1 <= n; ++d) {
            if ((1 << (d + 1)) - 1 == n) depth = d;
        }
        if (depth < 0 || !matches_family(g, BinaryTreeSpec{depth})) {
            throw std::runtime_error("graph is not a complete binary tree in heap order");
        }
        s = binary_tree_strategy(depth);
    } else if (a.method == "kbip") {
        int r = -1;
        for (int bits = 0; (2 << bits) <= n; ++bits) {
            if ((2 << bits) == n) r = bits;
        }
        if (r < 0 || !matches_family(g, CompleteBipartiteSpec{n / 2, n / 2})) {
            throw std::runtime_error("graph is not a balanced power-of-two complete bipartite graph");
        }
        s = complete_bipartite_strategy(r);
    } else if (a.method == "ring") {
        bool found = false;
        for (int size = 1; size <= n && !found; ++size) {
            if (n % size != 0 || n / size < 2) continue;
            if (matches_family(g, CliqueRingSpec{n / size, size})) {
                s = clique_ring_strategy(n / size, size);
                found = true;
            }
        }
        if (!found) throw std::runtime_error("graph is not a clique ring in canonical order");
    } else if (a.method == "octopus") {
        bool found = false;
        for (int size = 1; size < n && !found; ++size) {
            if ((n - 1) % size != 0 || (n - 1) / size < 2) continue;
            const int cliques = (n - 1) / size;
            if (matches_family(g, OctopusSpec{cliques, size})) {
                Strategy pairs = octopus_strategy(cliques, size, OctopusMode::pairs);
                Strategy center = octopus_strategy(cliques, size, OctopusMode::center);
                s = pairs.length() <= center.length() ? std::move(pairs) : std::move(center);
                found = true;
            }
        }
        if (!found) throw std::runtime_error("graph is not an octopus in canonical order");
    } else if (a.method == "longpath") {
        s = long_path_strategy(g, long_path(g, a.effort, a.seed));
    } else if (a.method == "maxdeg") {
        s = max_degree_strategy(g);
    } else if (a.method == "baseline") {
        s = dfs_baseline(g);
    } else {
        throw std::runtime_error("unknown method " + a.method);
    }

    write_strategy_file(a.out, s, {{"method", method}, {"source", a.graph}});
    if (a.json_out) {
        json doc{{"format_version", kFormatVersion},
                 {"method", method},
                 {"rounds", s.length()},
                 {"path", a.out}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "method " << method << " rounds " << s.length() << " -> " << a.out << '\n';
    }
    return kExitOk;
}

int run_verify(const VerifyArgs& a) {
    Graph g = read_graph_file(a.graph);
    StrategyFile f = read_strategy_file(a.strategy);
    if (f.strategy.n != g.vertex_count()) {
        throw std::runtime_error("strategy is for " + std::to_string(f.strategy.n) +
                                 " vertices, graph has " + std::to_string(g.vertex_count()));
    }
    SimulationReport rep;
    try {
        rep = simulate(g, f.strategy);
    } catch (const std::invalid_argument& e) {
        if (a.json_out) {
            json doc{{"format_version", kFormatVersion}, {"verified", false}, {"reason", e.what()}};
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cout << "invalid strategy: " << e.what() << '\n';
        }
        return kExitNegative;
    }
    if (a.json_out) {
        json doc{{"format_version", kFormatVersion},
                 {"verified", rep.all_met},
                 {"rounds", rep.rounds},
                 {"unmet_pairs", rep.unmet_pairs}};
        std::cout << doc.dump(2) << '\n';
    } else if (rep.all_met) {
        std::cout << "verified rounds " << rep.rounds << '\n';
    } else {
        std::cout << "not a witness: " << rep.unmet_pairs.size() << " unmet pair(s)\n";
    }
    return rep.all_met ? kExitOk : kExitNegative;
}

int run_exact(const ExactArgs& a) {
    Graph g = read_graph_file(a.graph);
    ExactResult r = exact_ac(g, a.max_rounds);
    if (r.exceeded) {
        if (a.json_out) {
            json doc{{"format_version", kFormatVersion},
                     {"value", nullptr},
                     {"max_rounds", a.max_rounds}};
            std::cout << doc.dump(2) << '\n';
        } else {
            std::cerr << "no strategy within " << a.max_rounds << " rounds\n";
        }
        return kExitNegative;
    }
    if (!a.witness_out.empty()) {
        write_strategy_file(a.witness_out, r.witness, {{"method", "exact"}, {"source", a.graph}});
    }
    if (a.json_out) {
        json doc{{"format_version", kFormatVersion}, {"value", r.value}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << r.value << '\n';
    }
    return kExitOk;
}

json audit_json(const StructureAudit& audit) {
    return json{{"format_version", kFormatVersion},
                {"edge_count_ok", audit.edge_count_ok},
                {"degree_spread_ok", audit.degree_spread_ok},
                {"matching_ok", audit.matching_ok},
                {"neighborhood_ok", audit.neighborhood_ok},
                {"passed", audit.passed()}};
}

void audit_print(const StructureAudit& audit) {
    auto line = [](const char* name, bool ok) {
        std::cout << name << ' ' << (ok ? "ok" : "fail") << '\n';
    };
    line("edge_count", audit.edge_count_ok);
    line("degree_spread", audit.degree_spread_ok);
    line("near_perfect_matching", audit.matching_ok);
    line("neighborhood_overlap", audit.neighborhood_ok);
    std::cout << (audit.passed() ? "pass" : "fail") << '\n';
}

int run_ac1(const Ac1Args& a) {
    Graph g = read_graph_file(a.graph);
    if (a.mode == "audit") {
        StructureAudit audit = structure_audit(g);
        if (a.json_out) {
            std::cout << audit_json(audit).dump(2) << '\n';
        } else {
            audit_print(audit);
        }
        if (audit.passed()) return kExitOk;
        std::cerr << "certificate: at least two rounds needed (" << audit.failure_text() << ")\n";
        return kExitCertificate;
    }

    Ac1Result r;
    if (a.mode == "det") {
        r = deterministic_strategy(g, a.c);
    } else if (a.mode == "rand") {
        RandomizedOptions opts;
        opts.seed = a.seed;
        opts.restarts = a.restarts;
        r = randomized_strategy(g, opts);
    } else {
        throw std::runtime_error("unknown mode " + a.mode);
    }

    switch (r.status) {
        case Ac1Result::Status::ok:
            if (!a.out.empty()) {
                write_strategy_file(a.out, r.strategy,
                                    {{"method", "ac1:" + a.mode}, {"source", a.graph}});
            }
            if (a.json_out) {
                json doc{{"format_version", kFormatVersion},
                         {"status", "ok"},
                         {"rounds", r.strategy.length()}};
                std::cout << doc.dump(2) << '\n';
            } else {
                std::cout << "rounds " << r.strategy.length() << '\n';
            }
            return kExitOk;
        case Ac1Result::Status::certificate:
            if (a.json_out) {
                json doc{{"format_version", kFormatVersion},
                         {"status", "certificate"},
                         {"note", r.note}};
                std::cout << doc.dump(2) << '\n';
            } else {
                std::cout << "certificate: " << r.note << '\n';
            }
            return kExitCertificate;
        case Ac1Result::Status::inconclusive:
        default:
            if (a.json_out) {
                json doc{{"format_version", kFormatVersion},
                         {"status", "inconclusive"},
                         {"note", r.note}};
                std::cout << doc.dump(2) << '\n';
            } else {
                std::cout << "inconclusive: " << r.note << '\n';
            }
            return kExitNegative;
    }
}

int run_reduce(const ReduceArgs& a) {
    ColoredGraph cg = read_colored_graph_file(a.colored);
    ReductionOutput out = reduce_to_acquaintance(cg, a.t);
    write_graph_file(a.out, out.graph);
    write_strategy_file(a.witness, out.witness,
                        {{"method", "reduction"}, {"t", std::to_string(a.t)}, {"source", a.colored}});
    if (a.json_out) {
        json doc{{"format_version", kFormatVersion},
                 {"n", out.graph.vertex_count()},
                 {"m", out.graph.edge_count()},
                 {"witness_rounds", out.witness.length()},
                 {"path", a.out},
                 {"witness_path", a.witness}};
        std::cout << doc.dump(2) << '\n';
    } else {
        std::cout << "wrote " << a.out << " (n=" << out.graph.vertex_count()
                  << ", m=" << out.graph.edge_count() << ") witness " << a.witness << " ("
                  << out.witness.length() << " rounds)\n";
    }
    return kExitOk;
}

int run_audit(const AuditArgs& a) {
    Graph g = read_graph_file(a.graph);
    StructureAudit audit = structure_audit(g);
    if (a.json_out) {
        std::cout << audit_json(audit).dump(2) << '\n';
    } else {
        audit_print(audit);
    }
    return audit.passed() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acquaintance time toolkit"};
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a family graph");
    gen->add_option("--family", gen_args.family,
                    "path|cycle|complete|kbip|hypercube|bintree|barbell|ring|octopus|gnp|plant")
        ->required();
    gen->add_option("--params", gen_args.params, "family parameters")->required()->delimiter(',');
    gen->add_option("--p", gen_args.p, "edge probability for gnp/plant");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("-o,--out", gen_args.out, "output file")->required();
    gen->add_flag("--json", gen_args.json_out, "machine-readable output");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "lower bounds for a graph");
    bounds->add_option("graph", bounds_args.graph, "graph file")->required();
    bounds->add_option("--separator", bounds_args.separator, "separator vertices")->delimiter(',');
    bounds->add_flag("--json", bounds_args.json_out, "machine-readable output");

    StratArgs strat_args;
    auto* strat = app.add_subcommand("strat", "generate a strategy");
    strat->add_option("--method", strat_args.method,
                      "auto|path|ham|tree|kbip|ring|octopus|longpath|maxdeg|baseline")
        ->required();
    strat->add_option("graph", strat_args.graph, "graph file")->required();
    strat->add_option("-o,--out", strat_args.out, "strategy output file")->required();
    strat->add_option("--effort", strat_args.effort, "long-path search effort");
    strat->add_option("--seed", strat_args.seed, "long-path search seed");
    strat->add_flag("--json", strat_args.json_out, "machine-readable output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "check a strategy against a graph");
    verify->add_option("graph", verify_args.graph, "graph file")->required();
    verify->add_option("strategy", verify_args.strategy, "strategy file")->required();
    verify->add_flag("--json", verify_args.json_out, "machine-readable output");

    ExactArgs exact_args;
    auto* exact = app.add_subcommand("exact", "exact acquaintance time by iterative deepening");
    exact->add_option("graph", exact_args.graph, "graph file")->required();
    exact->add_option("--max-rounds", exact_args.max_rounds, "search depth limit");
    exact->add_option("-o,--witness", exact_args.witness_out, "optional witness output file");
    exact->add_flag("--json", exact_args.json_out, "machine-readable output");

    Ac1Args ac1_args;
    auto* ac1 = app.add_subcommand("ac1", "one-round acquaintance tools");
    ac1->add_option("--mode", ac1_args.mode, "audit|det|rand")->required();
    ac1->add_option("graph", ac1_args.graph, "graph file")->required();
    ac1->add_option("-o,--out", ac1_args.out, "strategy output file");
    ac1->add_option("--seed", ac1_args.seed, "seed for rand mode");
    ac1->add_option("--c", ac1_args.c, "tail size for det mode");
    ac1->add_option("--restarts", ac1_args.restarts, "restart budget for rand mode");
    ac1->add_flag("--json", ac1_args.json_out, "machine-readable output");

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "equitable-coloring hardness instance");
    reduce->add_option("--t", reduce_args.t, "rounds in the produced instance")->required();
    reduce->add_option("colored", reduce_args.colored, "colored graph file")->required();
    reduce->add_option("-o,--out", reduce_args.out, "output graph file")->required();
    reduce->add_option("--witness", reduce_args.witness, "witness strategy output file")->required();
    reduce->add_flag("--json", reduce_args.json_out, "machine-readable output");

    AuditArgs audit_args;
    auto* audit = app.add_subcommand("audit", "structural one-round screen");
    audit->add_option("graph", audit_args.graph, "graph file")->required();
    audit->add_flag("--json", audit_args.json_out, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    bounds_args.have_separator = bounds->count("--separator") > 0;

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (bounds->parsed()) return run_bounds(bounds_args);
        if (strat->parsed()) return run_strat(strat_args);
        if (verify->parsed()) return run_verify(verify_args);
        if (exact->parsed()) return run_exact(exact_args);
        if (ac1->parsed()) return run_ac1(ac1_args);
        if (reduce->parsed()) return run_reduce(reduce_args);
        if (audit->parsed()) return run_audit(audit_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
