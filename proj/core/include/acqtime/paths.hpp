#pragma once

#include <cstdint>
#include <vector>

#include "acqtime/graph.hpp"

namespace acqtime {

// True if `path` lists distinct vertices of g with an edge between neighbours.
bool is_simple_path(const Graph& g, const std::vector<Vertex>& path);

// Heuristic long simple path: BFS-tree baseline plus randomized DFS with
// rotations, bounded by `effort` elementary steps. Deterministic per seed.
// The result is never shorter than the best BFS-tree root-to-leaf path found,
// so on trees it is maximal over the sampled roots.
std::vector<Vertex> long_path(const Graph& g, int effort = 20000, std::uint64_t seed = 1);

}  // namespace acqtime
