#include "acqtime/ac_one.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>

#include "acqtime/matchings.hpp"

namespace acqtime {

namespace {

std::string vertex_pair(Vertex a, Vertex b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

// adjacency rows as bit masks, for neighborhood intersection counts
std::vector<std::vector<std::uint64_t>> adjacency_bits(const Graph& g) {
    const int n = g.vertex_count();
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(n, std::vector<std::uint64_t>(words, 0));
    for (Vertex v = 0; v < n; ++v) {
        for (Vertex w : g.neighbors(v)) rows[v][w / 64] |= std::uint64_t{1} << (w % 64);
    }
    return rows;
}

std::int64_t and_count(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    std::int64_t total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

struct Runner {
    AcquaintanceState state;
    Strategy strat;

    explicit Runner(const Graph& g) : state(g) { strat.n = g.vertex_count(); }

    void push(Matching m) {
        m = normalize_matching(std::move(m));
        state.apply_round(m);
        strat.rounds.push_back(std::move(m));
    }

    bool done() const { return state.all_met(); }

    bool met_everyone(int agent) const {
        for (int other = 0; other < strat.n; ++other) {
            if (other != agent && !state.met_pair(agent, other)) return false;
        }
        return true;
    }
};

int ceil_log2(int n) {
    if (n <= 2) return 1;
    return std::bit_width(static_cast<unsigned>(n - 1));
}

}  // namespace

PartitionVerdict verify_partition(const Graph& g, const AcOnePartition& p) {
    const int n = g.vertex_count();
    std::vector<int> seen(n, 0);
    for (auto [a, b] : p.pairs) {
        if (a < 0 || a >= n || b < 0 || b >= n || a == b) {
            throw std::invalid_argument("verify_partition: malformed pair");
        }
        ++seen[a];
        ++seen[b];
    }
    for (Vertex c : p.rest) {
        if (c < 0 || c >= n) throw std::invalid_argument("verify_partition: vertex out of range");
        ++seen[c];
    }
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v] != 1) throw std::invalid_argument("verify_partition: not a partition of the vertex set");
    }

    auto fail = [](std::string why) { return PartitionVerdict{false, std::move(why)}; };

    for (auto [a, b] : p.pairs) {
        if (!g.has_edge(a, b)) return fail("swap pair " + vertex_pair(a, b) + " is not an edge");
    }
    const std::size_t k = p.pairs.size();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            auto [ai, bi] = p.pairs[i];
            auto [aj, bj] = p.pairs[j];
            if (!g.has_edge(ai, bj) && !g.has_edge(aj, bi)) {
                return fail("pairs " + vertex_pair(ai, bi) + " and " + vertex_pair(aj, bj) +
                            " lack a cross edge");
            }
            if (!g.has_edge(ai, aj) && !g.has_edge(bi, bj)) {
                return fail("pairs " + vertex_pair(ai, bi) + " and " + vertex_pair(aj, bj) +
                            " lack a parallel edge");
            }
        }
    }
    for (std::size_t i = 0; i < p.rest.size(); ++i) {
        for (std::size_t j = i + 1; j < p.rest.size(); ++j) {
            if (!g.has_edge(p.rest[i], p.rest[j])) {
                return fail("resting vertices " + std::to_string(p.rest[i]) + " and " +
                            std::to_string(p.rest[j]) + " are not adjacent");
            }
        }
    }
    for (Vertex c : p.rest) {
        for (auto [a, b] : p.pairs) {
            if (!g.has_edge(c, a) && !g.has_edge(c, b)) {
                return fail("resting vertex " + std::to_string(c) + " misses pair " + vertex_pair(a, b));
            }
        }
    }

    Strategy s;
    s.n = n;
    s.rounds.push_back(normalize_matching(p.pairs));
    if (!verify_acquaintance(g, s)) {
        throw std::logic_error("verify_partition: conditions hold but the round does not acquaint");
    }
    return {true, ""};
}

bool StructureAudit::passed() const {
    return edge_count_ok && degree_spread_ok && matching_ok && neighborhood_ok &&
           pair_degree_ok.value_or(true) && clique_degree_ok.value_or(true);
}

std::string StructureAudit::failure_text() const {
    std::vector<std::string> bad;
    if (!edge_count_ok) bad.push_back("edge count");
    if (!degree_spread_ok) bad.push_back("degree spread");
    if (!matching_ok) bad.push_back("near-perfect matching");
    if (!neighborhood_ok) bad.push_back("neighborhood overlap");
    if (!pair_degree_ok.value_or(true)) bad.push_back("pair degree sums");
    if (!clique_degree_ok.value_or(true)) bad.push_back("resting degrees");
    std::string out;
    for (std::size_t i = 0; i < bad.size(); ++i) {
        if (i) out += ", ";
        out += bad[i];
    }
    return out;
}

StructureAudit structure_audit(const Graph& g) {
    StructureAudit a;
    const int n = g.vertex_count();
    const std::int64_t nn = static_cast<std::int64_t>(n);

    a.edge_count_ok = 4 * static_cast<std::int64_t>(g.edge_count()) >= nn * nn - 1;

    const int high_threshold = (n + 1) / 2;
    int high = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) >= high_threshold) ++high;
    }
    a.degree_spread_ok = high >= n / 2;

    a.matching_ok = has_near_perfect_matching(g);

    a.neighborhood_ok = true;
    const std::vector<Vertex> u_set = high_degree_set(g);
    if (u_set.size() >= 2) {
        const auto rows = adjacency_bits(g);
        for (std::size_t i = 0; i < u_set.size() && a.neighborhood_ok; ++i) {
            for (std::size_t j = i + 1; j < u_set.size(); ++j) {
                const Vertex u = u_set[i], v = u_set[j];
                if (10 * and_count(rows[u], rows[v]) >= nn) continue;
                std::int64_t ordered = 0;
                for (Vertex w : g.neighbors(u)) ordered += and_count(rows[w], rows[v]);
                // edges inside the common neighborhood were counted from both ends
                std::vector<std::uint64_t> common(rows[u].size());
                for (std::size_t t = 0; t < common.size(); ++t) common[t] = rows[u][t] & rows[v][t];
                std::int64_t inside = 0;
                for (Vertex w = 0; w < n; ++w) {
                    if (common[w / 64] >> (w % 64) & 1) inside += and_count(rows[w], common);
                }
                const std::int64_t between = ordered - inside / 2;
                if (100 * between >= nn * nn) continue;
                a.neighborhood_ok = false;
                break;
            }
        }
    }
    return a;
}

StructureAudit structure_audit(const Graph& g, const AcOnePartition& p) {
    StructureAudit a = structure_audit(g);
    const int n = g.vertex_count();
    bool pair_ok = true;
    for (auto [x, y] : p.pairs) {
        if (x < 0 || x >= n || y < 0 || y >= n) {
            throw std::invalid_argument("structure_audit: vertex out of range");
        }
        if (g.degree(x) + g.degree(y) < n) pair_ok = false;
    }
    a.pair_degree_ok = pair_ok;
    const int need = static_cast<int>(p.pairs.size() + p.rest.size()) - 1;
    bool rest_ok = true;
    for (Vertex c : p.rest) {
        if (c < 0 || c >= n) throw std::invalid_argument("structure_audit: vertex out of range");
        if (g.degree(c) < need) rest_ok = false;
    }
    a.clique_degree_ok = rest_ok;
    return a;
}

std::vector<Vertex> high_degree_set(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v) {
        if (2 * g.degree(v) >= n) out.push_back(v);
    }
    return out;
}

TransferResult transfer_matching(const Graph& g, const std::vector<Vertex>& u_side,
                                 const std::vector<Vertex>& w_side) {
    TransferResult r;
    r.matching = bipartite_max_matching(g, w_side, u_side);
    r.ok = r.matching.size() + 1 >= w_side.size();
    return r;
}

std::optional<Matching> meet_all_matching(const Graph& g, Vertex v) {
    const int n = g.vertex_count();
    if (v < 0 || v >= n) throw std::invalid_argument("meet_all_matching: vertex out of range");

    std::vector<char> near(n, 0);
    near[v] = 1;
    for (Vertex w : g.neighbors(v)) near[w] = 1;
    std::vector<Vertex> outside;
    for (Vertex w = 0; w < n; ++w) {
        if (!near[w]) outside.push_back(w);
    }
    Matching direct = bipartite_max_matching(g, outside, g.neighbors(v));
    if (direct.size() == outside.size()) return direct;

    for (Vertex u : g.neighbors(v)) {
        std::vector<char> covered(n, 0);
        covered[v] = covered[u] = 1;
        for (Vertex w : g.neighbors(v)) covered[w] = 1;
        for (Vertex w : g.neighbors(u)) covered[w] = 1;
        std::vector<Vertex> shared;
        for (Vertex w : g.neighbors(v)) {
            if (g.has_edge(u, w)) shared.push_back(w);
        }
        std::vector<Vertex> rest;
        for (Vertex w = 0; w < n; ++w) {
            if (!covered[w]) rest.push_back(w);
        }
        Matching m = bipartite_max_matching(g, rest, shared);
        if (m.size() == rest.size()) {
            m.push_back({std::min(v, u), std::max(v, u)});
            return normalize_matching(std::move(m));
        }
    }
    return std::nullopt;
}

namespace {

// try every matching over edges at the listed vertices; first one that
// finishes the acquaintance wins
bool finishing_round(const Graph& g, Runner& run, const std::vector<Vertex>& spots_in) {
    const int n = g.vertex_count();
    std::vector<Vertex> spots(spots_in);
    std::sort(spots.begin(), spots.end());
    spots.erase(std::unique(spots.begin(), spots.end()), spots.end());

    std::vector<std::pair<int, int>> unmet;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (!run.state.met_pair(a, b)) unmet.push_back({a, b});
        }
    }
    if (unmet.empty()) return true;

    std::vector<int> at(n);
    for (Vertex v = 0; v < n; ++v) at[v] = run.state.agent_at(v);

    std::vector<Edge> chosen;
    std::vector<char> used(n, 0);
    long budget = 4'000'000;

    auto test = [&]() {
        std::vector<Vertex> of(n);
        for (int agent = 0; agent < n; ++agent) of[agent] = run.state.vertex_of(agent);
        for (auto [x, y] : chosen) {
            std::swap(of[at[x]], of[at[y]]);
        }
        for (auto [a, b] : unmet) {
            if (!g.has_edge(of[a], of[b])) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t idx) -> bool {
        if (--budget < 0) return false;
        if (idx == spots.size()) return test();
        const Vertex s = spots[idx];
        if (used[s]) return self(self, idx + 1);
        if (self(self, idx + 1)) return true;  // s stays unmatched
        used[s] = 1;
        for (Vertex w : g.neighbors(s)) {
            if (used[w]) continue;
            used[w] = 1;
            chosen.push_back({std::min(s, w), std::max(s, w)});
            if (self(self, idx + 1)) return true;
            chosen.pop_back();
            used[w] = 0;
        }
        used[s] = 0;
        return false;
    };

    if (!search(search, 0)) return false;
    run.push(chosen);
    return run.done();
}

}  // namespace

Ac1Result deterministic_strategy(const Graph& g, int c) {
    c = std::clamp(c, 1, 3);
    const int n = g.vertex_count();
    Ac1Result res;
    if (n <= 1) {
        res.status = Ac1Result::Status::ok;
        res.strategy.n = n;
        return res;
    }

    const StructureAudit audit = structure_audit(g);
    if (!audit.passed()) {
        res.status = Ac1Result::Status::certificate;
        res.note = "structure audit failed: " + audit.failure_text();
        return res;
    }

    Runner run(g);
    auto meet_all_round = [&](int agent) -> bool {
        if (run.met_everyone(agent)) return true;
        const Vertex v = run.state.vertex_of(agent);
        auto m = meet_all_matching(g, v);
        if (!m) {
            res.status = Ac1Result::Status::certificate;
            res.note = "agent " + std::to_string(agent) + " at vertex " + std::to_string(v) +
                       " cannot meet everyone in one round";
            return false;
        }
        if (!m->empty()) run.push(*m);
        return true;
    };

    const int lead = std::max(0, n - c - 1);
    for (int agent = 0; agent < lead && !run.done(); ++agent) {
        if (!meet_all_round(agent)) return res;
    }
    if (!run.done()) {
        std::vector<Vertex> spots;
        for (int agent = lead; agent < n; ++agent) spots.push_back(run.state.vertex_of(agent));
        if (!finishing_round(g, run, spots)) {
            for (int agent = lead; agent < n - 1 && !run.done(); ++agent) {
                if (!meet_all_round(agent)) return res;
            }
        }
    }
    if (!run.done()) {
        res.status = Ac1Result::Status::inconclusive;
        res.note = "round budget exhausted";
        return res;
    }
    res.status = Ac1Result::Status::ok;
    res.strategy = std::move(run.strat);
    return res;
}

Matching random_matching(const Graph& g, const std::vector<Vertex>& u_set, Rng& rng) {
    const int n = g.vertex_count();
    std::vector<Vertex> order(u_set);
    std::sort(order.begin(), order.end());
    std::vector<Vertex> proposal(n, -1);
    for (Vertex u : order) {
        if (u < 0 || u >= n) throw std::invalid_argument("random_matching: vertex out of range");
        const auto& nbrs = g.neighbors(u);
        if (rng.next_bool() || nbrs.empty()) {
            proposal[u] = u;
        } else {
            proposal[u] = nbrs[rng.next_int(static_cast<int>(nbrs.size()))];
        }
    }
    std::vector<Vertex> sigma(order);
    rng.shuffle(sigma);
    std::vector<char> blocked(n, 0);
    Matching m;
    for (Vertex u : sigma) {
        const Vertex t = proposal[u];
        if (blocked[u] || blocked[t]) continue;
        blocked[u] = blocked[t] = 1;
        if (t != u) m.push_back({std::min(u, t), std::max(u, t)});
    }
    return normalize_matching(std::move(m));
}

Matching random_matching(const Graph& g, const std::vector<Vertex>& u_set, std::uint64_t seed) {
    Rng rng(seed);
    return random_matching(g, u_set, rng);
}

Ac1Result randomized_strategy(const Graph& g, const RandomizedOptions& opts) {
    const int n = g.vertex_count();
    Ac1Result res;
    if (n <= 1) {
        res.status = Ac1Result::Status::ok;
        res.strategy.n = n;
        return res;
    }

    const StructureAudit audit = structure_audit(g);
    if (!audit.passed()) {
        res.status = Ac1Result::Status::certificate;
        res.note = "structure audit failed: " + audit.failure_text();
        return res;
    }

    const std::vector<Vertex> u_set = high_degree_set(g);
    if (2 * static_cast<int>(u_set.size()) < n) {
        res.status = Ac1Result::Status::inconclusive;
        res.note = "high-degree set covers less than half the graph; try the deterministic strategy";
        return res;
    }
    std::vector<char> in_u(n, 0);
    for (Vertex u : u_set) in_u[u] = 1;

    const int half = static_cast<int>(u_set.size()) / 2;
    if (half == 0) {
        res.status = Ac1Result::Status::inconclusive;
        res.note = "high-degree set too small to split";
        return res;
    }
    const int group_count = (n + half - 1) / half;
    auto group = [&](int i) {
        std::vector<int> agents;
        for (int a = i * half; a < std::min(n, (i + 1) * half); ++a) agents.push_back(a);
        return agents;
    };
    const int cap = opts.cap_per_pair > 0 ? opts.cap_per_pair : 200 * ceil_log2(n);

    for (int attempt = 0; attempt < std::max(1, opts.restarts); ++attempt) {
        Rng rng(opts.seed + static_cast<std::uint64_t>(attempt));
        Runner run(g);
        bool failed = false;
        bool certified = false;

        auto phase = [&](const std::vector<int>& members) {
            std::vector<std::pair<int, int>> waiting;
            for (std::size_t i = 0; i < members.size(); ++i) {
                for (std::size_t j = i + 1; j < members.size(); ++j) {
                    if (!run.state.met_pair(members[i], members[j])) {
                        waiting.push_back({members[i], members[j]});
                    }
                }
            }
            if (waiting.empty()) return;

            std::vector<char> member_here(n, 0);
            for (int a : members) member_here[run.state.vertex_of(a)] = 1;
            std::vector<Vertex> w_side, open_u;
            for (int a : members) {
                const Vertex v = run.state.vertex_of(a);
                if (!in_u[v]) w_side.push_back(v);
            }
            for (Vertex u : u_set) {
                if (!member_here[u]) open_u.push_back(u);
            }
            const Matching transfer = bipartite_max_matching(g, w_side, open_u);
            if (!transfer.empty()) run.push(transfer);

            for (int a : members) {
                const Vertex v = run.state.vertex_of(a);
                if (in_u[v]) continue;
                auto m = meet_all_matching(g, v);
                if (!m) {
                    res.status = Ac1Result::Status::certificate;
                    res.note = "agent " + std::to_string(a) + " at vertex " + std::to_string(v) +
                               " cannot meet everyone in one round";
                    certified = true;
                    return;
                }
                if (m->empty()) continue;
                run.push(*m);
                run.push(*m);
            }

            auto drop_met = [&]() {
                std::erase_if(waiting, [&](const std::pair<int, int>& p) {
                    return run.state.met_pair(p.first, p.second);
                });
            };
            drop_met();
            int iters = 0;
            while (!waiting.empty() && iters < cap) {
                const Matching mix = random_matching(g, u_set, rng);
                if (!mix.empty()) {
                    run.push(mix);
                    run.push(mix);
                }
                drop_met();
                ++iters;
            }
            if (!waiting.empty()) {
                failed = true;
                return;
            }
            if (!transfer.empty()) run.push(transfer);
        };

        for (int i = 0; i < group_count && !failed && !certified; ++i) {
            for (int j = i + 1; j < group_count && !failed && !certified; ++j) {
                std::vector<int> members = group(i);
                const std::vector<int> right = group(j);
                members.insert(members.end(), right.begin(), right.end());
                phase(members);
            }
        }
        if (certified) return res;
        if (!failed && run.done()) {
            res.status = Ac1Result::Status::ok;
            res.strategy = std::move(run.strat);
            res.note.clear();
            return res;
        }
    }
    res.status = Ac1Result::Status::inconclusive;
    res.note = "mixing cap exceeded on every restart";
    return res;
}

}  // namespace acqtime
