#pragma once

#include <vector>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"

namespace acqtime {

// Maximum matching in the bipartite subgraph spanned by side_a and side_b
// (edges of g with one endpoint in each). The two sides must be disjoint.
// Augmenting-path search scans vertices in ascending id order, so the result
// is deterministic.
Matching bipartite_max_matching(const Graph& g, const std::vector<Vertex>& side_a,
                                const std::vector<Vertex>& side_b);

// Maximum matching in g (general graphs, blossom contraction).
Matching max_matching(const Graph& g);

// True when g has a matching of floor(n/2) edges, i.e. one leaving at most
// one vertex uncovered.
bool has_near_perfect_matching(const Graph& g);

}  // namespace acqtime
