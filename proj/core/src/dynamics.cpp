#include "acqtime/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace acqtime {

Matching normalize_matching(Matching m) {
    for (auto& [u, v] : m)
        if (u > v) std::swap(u, v);
    std::sort(m.begin(), m.end());
    return m;
}

std::optional<std::string> matching_violation(const Graph& g, const Matching& m) {
    std::vector<bool> used(g.vertex_count(), false);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            return "pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range";
        if (u == v) return "pair matches vertex " + std::to_string(u) + " with itself";
        if (!g.has_edge(u, v))
            return "pair (" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge";
        if (used[u]) return "vertex " + std::to_string(u) + " matched twice";
        if (used[v]) return "vertex " + std::to_string(v) + " matched twice";
        used[u] = used[v] = true;
    }
    return std::nullopt;
}

Strategy reverse(Strategy s) {
    std::reverse(s.rounds.begin(), s.rounds.end());
    return s;
}

Strategy concat(Strategy a, const Strategy& b) {
    if (a.n != b.n) throw std::invalid_argument("concat: ambient sizes differ");
    a.rounds.insert(a.rounds.end(), b.rounds.begin(), b.rounds.end());
    return a;
}

Strategy parallel_compose(const Strategy& a, const Strategy& b) {
    if (a.n != b.n) throw std::invalid_argument("parallel_compose: ambient sizes differ");
    Strategy out;
    out.n = a.n;
    std::size_t len = std::max(a.rounds.size(), b.rounds.size());
    out.rounds.resize(len);
    std::vector<bool> used(a.n, false);
    for (std::size_t t = 0; t < len; ++t) {
        Matching merged;
        if (t < a.rounds.size()) merged = a.rounds[t];
        if (t < b.rounds.size())
            merged.insert(merged.end(), b.rounds[t].begin(), b.rounds[t].end());
        std::fill(used.begin(), used.end(), false);
        for (auto [u, v] : merged) {
            if (used[u] || used[v])
                throw std::invalid_argument("parallel_compose: overlapping supports in round " +
                                            std::to_string(t + 1));
            used[u] = used[v] = true;
        }
        out.rounds[t] = normalize_matching(std::move(merged));
    }
    return out;
}

PairBits::PairBits(int n) : n_(n) {
    bits_.assign((total_pairs() + 63) / 64, 0);
}

std::size_t PairBits::index(int i, int j) const {
    // row-major over pairs i < j
    auto row_start = static_cast<std::size_t>(i) * n_ - static_cast<std::size_t>(i) * (i + 1) / 2;
    return row_start + static_cast<std::size_t>(j - i - 1);
}

bool PairBits::test(int i, int j) const {
    if (i == j) return true;
    if (i > j) std::swap(i, j);
    std::size_t idx = index(i, j);
    return (bits_[idx >> 6] >> (idx & 63)) & 1;
}

bool PairBits::set(int i, int j) {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    std::size_t idx = index(i, j);
    std::uint64_t mask = 1ULL << (idx & 63);
    std::uint64_t& word = bits_[idx >> 6];
    if (word & mask) return false;
    word |= mask;
    ++count_;
    return true;
}

AcquaintanceState::AcquaintanceState(const Graph& g) : g_(&g), met_(g.vertex_count()) {
    int n = g.vertex_count();
    vertex_of_.resize(n);
    agent_at_.resize(n);
    for (int i = 0; i < n; ++i) vertex_of_[i] = agent_at_[i] = i;
    record_edges();
}

void AcquaintanceState::record_edges() {
    for (auto [u, v] : g_->edges()) met_.set(agent_at_[u], agent_at_[v]);
}

void AcquaintanceState::apply_round(const Matching& m) {
    if (auto err = matching_violation(*g_, m))
        throw std::invalid_argument("round " + std::to_string(rounds_ + 1) + ": " + *err);
    for (auto [u, v] : m) {
        int a = agent_at_[u], b = agent_at_[v];
        agent_at_[u] = b;
        agent_at_[v] = a;
        vertex_of_[a] = v;
        vertex_of_[b] = u;
    }
    ++rounds_;
    // pairs across edges not touching the matching were already adjacent
    // before the round, so only swapped endpoints can produce new meetings
    for (auto [u, v] : m) {
        for (Vertex w : g_->neighbors(u)) met_.set(agent_at_[u], agent_at_[w]);
        for (Vertex w : g_->neighbors(v)) met_.set(agent_at_[v], agent_at_[w]);
    }
}

SimulationReport simulate(const Graph& g, const Strategy& s) {
    if (s.n != g.vertex_count())
        throw std::invalid_argument("simulate: strategy ambient size does not match graph");
    AcquaintanceState state(g);
    SimulationReport report;
    report.acquainted_after.push_back(state.met().count());
    for (const Matching& m : s.rounds) {
        state.apply_round(m);
        report.acquainted_after.push_back(state.met().count());
    }
    report.rounds = state.rounds_applied();
    report.all_met = state.all_met();
    if (!report.all_met) {
        for (int i = 0; i < g.vertex_count(); ++i)
            for (int j = i + 1; j < g.vertex_count(); ++j)
                if (!state.met_pair(i, j)) report.unmet_pairs.push_back({i, j});
    }
    report.final_placement = state.placement();
    return report;
}

bool verify_acquaintance(const Graph& g, const Strategy& s) {
    return simulate(g, s).all_met;
}

}  // namespace acqtime
