#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acqtime/graph.hpp"

namespace acqtime {

// One round: vertex-disjoint set of edges; matched agents swap places.
// Normalized on construction: each pair u < v, pairs sorted. May be empty.
using Matching = std::vector<Edge>;

Matching normalize_matching(Matching m);

// nullopt if valid, otherwise a description of the first violation
std::optional<std::string> matching_violation(const Graph& g, const Matching& m);

struct Strategy {
    int n = 0;  // ambient vertex count
    std::vector<Matching> rounds;

    int length() const { return static_cast<int>(rounds.size()); }
};

Strategy reverse(Strategy s);
// Appends b's rounds after a's; ambient sizes must agree.
Strategy concat(Strategy a, const Strategy& b);
// Rounds merged pairwise after zero-padding the shorter strategy; the vertex
// supports must be disjoint in every round.
Strategy parallel_compose(const Strategy& a, const Strategy& b);

// Packed bitset over unordered agent pairs (i < j).
class PairBits {
public:
    PairBits() = default;
    explicit PairBits(int n);

    int n() const { return n_; }
    bool test(int i, int j) const;
    // returns true if the bit was newly set
    bool set(int i, int j);
    std::int64_t count() const { return count_; }
    std::int64_t total_pairs() const { return static_cast<std::int64_t>(n_) * (n_ - 1) / 2; }
    bool all() const { return count_ == total_pairs(); }

private:
    std::size_t index(int i, int j) const;
    int n_ = 0;
    std::int64_t count_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Agents start on their own vertices; acquaintance is recorded for every edge
// initially and again after each round.
class AcquaintanceState {
public:
    explicit AcquaintanceState(const Graph& g);

    const Graph& graph() const { return *g_; }
    int rounds_applied() const { return rounds_; }
    Vertex vertex_of(int agent) const { return vertex_of_[agent]; }
    int agent_at(Vertex v) const { return agent_at_[v]; }
    const std::vector<Vertex>& placement() const { return vertex_of_; }
    const PairBits& met() const { return met_; }
    bool met_pair(int a, int b) const { return met_.test(a, b); }
    bool all_met() const { return met_.all(); }

    // throws on an invalid matching
    void apply_round(const Matching& m);

private:
    void record_edges();

    const Graph* g_;
    std::vector<Vertex> vertex_of_;  // agent -> vertex
    std::vector<int> agent_at_;      // vertex -> agent
    PairBits met_;
    int rounds_ = 0;
};

struct SimulationReport {
    int rounds = 0;
    bool all_met = false;
    std::vector<std::int64_t> acquainted_after;  // index 0 = before any round
    std::vector<std::pair<int, int>> unmet_pairs; // agent pairs, i < j
    std::vector<Vertex> final_placement;          // agent -> vertex
};

SimulationReport simulate(const Graph& g, const Strategy& s);

// true iff after all rounds every agent pair has met
bool verify_acquaintance(const Graph& g, const Strategy& s);

}  // namespace acqtime
