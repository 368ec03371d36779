#pragma once

#include <vector>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"

namespace acqtime {

// Every nonempty matching of g exactly once. Backtracking over the sorted
// edge list, so the produced order is lexicographic on edge sequences.
std::vector<Matching> enumerate_matchings(const Graph& g);

struct ExactResult {
    bool exceeded = false;  // no witness within max_rounds
    int value = -1;
    Strategy witness;  // length == value; lexicographically least at that depth
};

// Exact acquaintance time by iterative deepening over matching sequences,
// with a per-depth transposition table on (placement, met set). Throws when
// the graph is larger than vertex_cap or disconnected.
ExactResult exact_ac(const Graph& g, int max_rounds = 16, int vertex_cap = 10);

}  // namespace acqtime
