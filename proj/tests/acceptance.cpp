// Acceptance checks for the acquaintance-time suite. Each criterion prints
// one PASS/FAIL line; the process exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "acqtime/ac_one.hpp"
#include "acqtime/bounds.hpp"
#include "acqtime/dynamics.hpp"
#include "acqtime/exact.hpp"
#include "acqtime/families.hpp"
#include "acqtime/generators.hpp"
#include "acqtime/graph.hpp"
#include "acqtime/hardness.hpp"
#include "acqtime/matchings.hpp"
#include "acqtime/rng.hpp"
#include "acqtime/routing.hpp"

using namespace acqtime;
using Clock = std::chrono::steady_clock;

namespace {

// envelope constants, frozen from measured runs
constexpr double kPathPerN = 3.5;
constexpr double kRingPerR = 22.0;
constexpr double kTreePerNLogN = 11.0;
constexpr double kOctopusRatio = 4.0;
constexpr double kRandPerLogN = 10.0;

struct Harness {
    std::vector<std::string> lines;
    bool all_ok = true;
    std::vector<std::pair<Graph, Strategy>> witnesses;

    // pools shared between criteria
    std::vector<std::pair<Graph, int>> small_pool;  // graph, exact value
    std::vector<Graph> big_pool;                    // one-round instances

    void report(int criterion, bool ok, const std::string& detail) {
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail;
        lines.push_back(line.str());
        if (!ok) all_ok = false;
    }

    void remember(const Graph& g, const Strategy& s) { witnesses.push_back({g, s}); }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Graph random_tree(int n, Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.push_back({static_cast<Vertex>(rng.next_below(v)), v});
    return Graph::from_edges(n, edges);
}

Strategy single_round(int n, Matching m) {
    Strategy s;
    s.n = n;
    s.rounds = {std::move(m)};
    return s;
}

void criterion_1(Harness& h) {
    auto start = Clock::now();
    bool ok = true;
    for (int m = 1; m <= 6; ++m) ok &= exact_ac(generate(CompleteSpec{m})).value == 0;

    auto probe = [&](const FamilySpec& spec, int want) {
        Graph g = generate(spec);
        ExactResult r = exact_ac(g);
        ok &= !r.exceeded && r.value == want;
        if (!r.exceeded && r.value > 0) h.remember(g, r.witness);
    };
    probe(PathSpec{3}, 1);
    probe(PathSpec{4}, 2);
    probe(CycleSpec{4}, 1);
    probe(CompleteBipartiteSpec{2, 2}, 1);

    double dt = seconds_since(start);
    ok &= dt < 1.0;
    std::ostringstream d;
    d << "exact oracle values (K_1..K_6 = 0, P_3 = 1, P_4 = 2, C_4 = 1, K_22 = 1) in "
      << dt << " s";
    h.report(1, ok, d.str());
}

void criterion_2(Harness& h) {
    auto start = Clock::now();
    Graph k44 = generate(CompleteBipartiteSpec{4, 4});
    Strategy s = complete_bipartite_strategy(2);
    bool ok = s.length() == 2 && verify_acquaintance(k44, s);
    if (ok) h.remember(k44, s);

    auto matchings = enumerate_matchings(k44);
    ok &= matchings.size() == 208;
    int one_round_witnesses = 0;
    for (const auto& m : matchings)
        if (verify_acquaintance(k44, single_round(8, m))) ++one_round_witnesses;
    ok &= one_round_witnesses == 0;

    double dt = seconds_since(start);
    ok &= dt < 10.0;
    std::ostringstream d;
    d << "K_44 needs two rounds (208 matchings searched, "
      << one_round_witnesses << " depth-1 witnesses) in " << dt << " s";
    h.report(2, ok, d.str());
}

void criterion_3(Harness& h) {
    Graph p4 = generate(PathSpec{4});
    Strategy good;
    good.n = 4;
    good.rounds = {{{0, 1}}, {{2, 3}}, {{0, 1}}};
    Strategy reordered;
    reordered.n = 4;
    reordered.rounds = {{{0, 1}}, {{0, 1}}, {{2, 3}}};

    bool ok = verify_acquaintance(p4, good) && !verify_acquaintance(p4, reordered);
    if (ok) h.remember(p4, good);
    h.report(3, ok, "round order regression on P_4");
}

void criterion_4(Harness& h) {
    Rng rng(2024);
    int violations = 0;
    for (int i = 0; i < 100; ++i) {
        int n = 2 + static_cast<int>(rng.next_below(39));
        Graph tree_graph = random_tree(n, rng);
        Tree tree = spanning_tree(tree_graph, 0);
        int k = 1 + static_cast<int>(rng.next_below(std::min(n, 10)));

        std::vector<Vertex> all(n);
        for (int v = 0; v < n; ++v) all[v] = v;
        rng.shuffle(all);
        std::vector<Vertex> sources(all.begin(), all.begin() + k);
        rng.shuffle(all);
        std::vector<Vertex> targets(all.begin(), all.begin() + k);

        RoutingTask task{tree, sources, targets};
        Strategy s = route_on_tree(task);
        if (s.length() > routing_span(task) + 2 * (k - 1)) {
            ++violations;
            continue;
        }
        SimulationReport rep = simulate(tree_graph, s);
        std::set<Vertex> landed;
        for (Vertex src : sources) landed.insert(rep.final_placement[src]);
        if (landed != std::set<Vertex>(targets.begin(), targets.end())) ++violations;
    }
    std::ostringstream d;
    d << "tree routing envelope on 100 random trees (" << violations << " violations)";
    h.report(4, violations == 0, d.str());
}

void criterion_5(Harness& h) {
    bool ok = true;
    double worst_path = 0, worst_ring = 0, worst_tree = 0;

    for (int n : {16, 32, 64, 128, 256}) {
        Strategy s = path_strategy(n);
        worst_path = std::max(worst_path, double(s.length()) / n);
        Graph g = generate(PathSpec{n});
        ok &= verify_acquaintance(g, s);
        h.remember(g, s);
    }
    ok &= worst_path <= kPathPerN;

    for (int r : {4, 8, 16, 32, 64}) {
        Strategy s = clique_ring_strategy(r, 4);
        worst_ring = std::max(worst_ring, double(s.length()) / r);
        Graph g = generate(CliqueRingSpec{r, 4});
        ok &= verify_acquaintance(g, s);
        h.remember(g, s);
    }
    ok &= worst_ring <= kRingPerR;

    for (int d = 2; d <= 6; ++d) {
        Strategy s = binary_tree_strategy(d);
        int n = (1 << (d + 1)) - 1;
        worst_tree = std::max(worst_tree, s.length() / (n * std::log2(double(n))));
        Graph g = generate(BinaryTreeSpec{d});
        ok &= verify_acquaintance(g, s);
        h.remember(g, s);
    }
    ok &= worst_tree <= kTreePerNLogN;

    for (int r = 1; r <= 5; ++r) {
        Strategy s = complete_bipartite_strategy(r);
        ok &= s.length() == r;
        Graph g = generate(CompleteBipartiteSpec{1 << r, 1 << r});
        ok &= verify_acquaintance(g, s);
        h.remember(g, s);
    }

    std::ostringstream d;
    d << "schedule envelopes over >= 4 doublings (path/n " << worst_path << " <= "
      << kPathPerN << ", ring/r " << worst_ring << " <= " << kRingPerR
      << ", tree/(n log n) " << worst_tree << " <= " << kTreePerNLogN
      << ", bipartite length = r exactly)";
    h.report(5, ok, d.str());
}

void criterion_6(Harness& h) {
    const double probs[] = {0.3, 0.5, 0.7, 0.9};
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 5;
        Graph g = generate(GnpSpec{n, probs[i % 4], 1000u + i});
        h.small_pool.push_back({g, -1});
    }
    for (const FamilySpec& spec :
         {FamilySpec{PathSpec{1}}, FamilySpec{PathSpec{2}}, FamilySpec{CycleSpec{3}},
          FamilySpec{CompleteSpec{1}}, FamilySpec{CompleteSpec{2}},
          FamilySpec{CompleteBipartiteSpec{1, 1}}, FamilySpec{HypercubeSpec{0}},
          FamilySpec{HypercubeSpec{1}}, FamilySpec{BinaryTreeSpec{0}},
          FamilySpec{BinaryTreeSpec{1}}, FamilySpec{BarbellSpec{1}},
          FamilySpec{BarbellSpec{2}}, FamilySpec{CliqueRingSpec{2, 2}},
          FamilySpec{OctopusSpec{1, 1}}, FamilySpec{OctopusSpec{1, 2}}})
        h.small_pool.push_back({generate(spec), -1});

    int violations = 0;
    for (auto& [g, value] : h.small_pool) {
        ExactResult r = exact_ac(g);
        value = r.value;
        if (r.exceeded) {
            ++violations;
            continue;
        }
        if (r.value > 0) h.remember(g, r.witness);
        BoundsReport rep = lower_bounds(g);
        bool sound = rep.diameter_bound <= r.value && rep.edge_bound <= r.value &&
                     rep.bottleneck_bound.value_or(0) <= r.value &&
                     rep.best_lower <= r.value;
        if (!sound) ++violations;
    }
    std::ostringstream d;
    d << "lower bounds vs exact on " << h.small_pool.size() << " small graphs ("
      << violations << " violations)";
    h.report(6, violations == 0, d.str());
}

void criterion_8(Harness& h) {
    int failures = 0;
    int exact_checked = 0;
    for (int t : {1, 2}) {
        for (int i = 0; i < 50; ++i) {
            int n = 4 + 2 * (i % 5);  // 4..12
            ColoredGraph cg = plant_equicolorable(n, 2, 0.7, 3000 + 100 * t + i);
            ReductionOutput out = reduce_to_acquaintance(cg, t);
            bool ok = out.witness.length() == t &&
                      verify_acquaintance(out.graph, out.witness);
            if (t == 1) {
                ok &= out.graph.vertex_count() == 2 * n;
                if (out.graph.vertex_count() <= 8) {
                    ok &= exact_ac(out.graph).value == 1;
                    ++exact_checked;
                }
            }
            if (ok)
                h.remember(out.graph, out.witness);
            else
                ++failures;
        }
    }
    std::ostringstream d;
    d << "reduction witnesses on 50 planted instances per t in {1,2} ("
      << exact_checked << " exact checks, " << failures << " failures)";
    h.report(8, failures == 0, d.str());
}

void criterion_9(Harness& h) {
    for (int idx = 0; idx < 6; ++idx) {
        const int sizes[] = {8, 20, 40, 60, 80, 100};
        int half = sizes[idx];
        ColoredGraph cg = plant_equicolorable(half, 2, 0.6, 4000 + idx);
        h.big_pool.push_back(reduce_to_acquaintance(cg, 1).graph);

        Graph base = generate(GnpSpec{half, 0.5, 4100u + idx});
        h.big_pool.push_back(ramsey_double(base, DoublingRule::deterministic).graph);
        h.big_pool.push_back(ramsey_double(base, DoublingRule::seeded, 4200 + idx).graph);
    }

    int failures = 0;
    int max_n = 0;
    for (const Graph& g : h.big_pool) {
        int n = g.vertex_count();
        max_n = std::max(max_n, n);
        Ac1Result r = deterministic_strategy(g);
        bool ok = r.status == Ac1Result::Status::ok &&
                  r.strategy.length() <= n - 1 && verify_acquaintance(g, r.strategy);
        if (ok) h.remember(g, r.strategy);

        if (n <= 60) {
            Ac1Result tight = deterministic_strategy(g, 2);
            bool tight_ok = tight.status == Ac1Result::Status::ok &&
                            tight.strategy.length() <= n - 2 &&
                            verify_acquaintance(g, tight.strategy);
            if (tight_ok)
                h.remember(g, tight.strategy);
            else
                ok = false;
        }
        if (!ok) ++failures;
    }
    std::ostringstream d;
    d << "deterministic one-round-family algorithm on " << h.big_pool.size()
      << " instances up to n = " << max_n << " (" << failures << " failures)";
    h.report(9, failures == 0, d.str());
}

void criterion_10(Harness& h) {
    bool ok = true;
    std::ostringstream detail;
    detail << "randomized algorithm medians:";
    for (int n : {64, 128, 256}) {
        std::vector<Graph> instances;
        ColoredGraph cg = plant_equicolorable(n / 2, 2, 0.6, 5000 + n);
        instances.push_back(reduce_to_acquaintance(cg, 1).graph);
        instances.push_back(
            ramsey_double(generate(GnpSpec{n / 2, 0.5, 5100u + n}),
                          DoublingRule::seeded, 5200 + n)
                .graph);

        int successes = 0;
        std::vector<int> lengths;
        for (int seed = 0; seed < 50; ++seed) {
            for (const Graph& g : instances) {
                RandomizedOptions opts;
                opts.seed = 6000 + seed;
                Ac1Result r = randomized_strategy(g, opts);
                if (r.status == Ac1Result::Status::ok &&
                    verify_acquaintance(g, r.strategy)) {
                    ++successes;
                    lengths.push_back(r.strategy.length());
                    h.remember(g, r.strategy);
                }
            }
        }
        std::sort(lengths.begin(), lengths.end());
        double median = lengths.empty() ? 1e9 : lengths[lengths.size() / 2];
        double ratio = median / std::log2(double(n));
        ok &= successes >= 95;
        ok &= ratio <= kRandPerLogN;
        detail << " n=" << n << " success " << successes << "/100 median " << median
               << " ratio " << ratio;
    }
    detail << " (cap " << kRandPerLogN << ")";
    h.report(10, ok, detail.str());
}

void criterion_11(Harness& h) {
    int violations = 0;
    for (const auto& [g, value] : h.small_pool)
        if (!structure_audit(g).passed() && value < 2) ++violations;

    int screened = 0;
    for (const Graph& g : h.big_pool)
        if (g.vertex_count() >= 50) {
            ++screened;
            if (!structure_audit(g).neighborhood_ok) ++violations;
        }
    std::ostringstream d;
    d << "audit failure implies two rounds on " << h.small_pool.size()
      << " small graphs; neighborhood screen on " << screened
      << " large one-round instances (" << violations << " violations)";
    h.report(11, violations == 0, d.str());
}

void criterion_12(Harness& h) {
    bool ok = true;
    double worst = 0;
    for (auto [r, l] : {std::pair{2, 8}, {8, 2}, {4, 4}}) {
        Graph g = generate(OctopusSpec{r, l});
        int n = g.vertex_count();
        int best = -1;
        for (OctopusMode mode : {OctopusMode::pairs, OctopusMode::center}) {
            Strategy s = octopus_strategy(r, l, mode);
            ok &= verify_acquaintance(g, s);
            h.remember(g, s);
            if (best < 0 || s.length() < best) best = s.length();
        }
        worst = std::max(worst, double(best) / std::min(n * r, n * l));
    }
    ok &= worst <= kOctopusRatio;

    int prev = 0;
    std::vector<int> series;
    for (int l : {4, 8, 16}) {
        Graph g = generate(OctopusSpec{4, l});
        int bound = bottleneck_bound(g, {static_cast<Vertex>(4 * l)});
        series.push_back(bound);
        ok &= bound >= 1 && bound > prev;
        prev = bound;
    }
    std::ostringstream d;
    d << "octopus mode ratio " << worst << " <= " << kOctopusRatio
      << "; center bottleneck series " << series[0] << " " << series[1] << " "
      << series[2];
    h.report(12, ok, d.str());
}

void criterion_7(Harness& h) {
    int violations = 0;
    for (const auto& [g, s] : h.witnesses)
        if (!verify_acquaintance(g, reverse(s))) ++violations;
    std::ostringstream d;
    d << "reversal of all " << h.witnesses.size() << " collected witnesses ("
      << violations << " violations)";
    h.report(7, violations == 0, d.str());
}

}  // namespace

int main() {
    auto start = Clock::now();
    Harness h;
    criterion_1(h);
    criterion_2(h);
    criterion_3(h);
    criterion_4(h);
    criterion_5(h);
    criterion_6(h);
    criterion_8(h);
    criterion_9(h);
    criterion_10(h);
    criterion_11(h);
    criterion_12(h);
    criterion_7(h);  // last: checks every witness the other criteria produced

    std::sort(h.lines.begin(), h.lines.end(), [](const auto& a, const auto& b) {
        auto key = [](const std::string& s) {
            return std::stoi(s.substr(s.find("criterion ") + 10));
        };
        return key(a) < key(b);
    });
    for (const auto& line : h.lines) std::printf("%s\n", line.c_str());
    std::printf("%s: 12 criteria in %.1f s\n", h.all_ok ? "SUITE PASS" : "SUITE FAIL",
                seconds_since(start));
    return h.all_ok ? 0 : 1;
}
