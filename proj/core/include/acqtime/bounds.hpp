#pragma once

#include <optional>
#include <vector>

#include "acqtime/graph.hpp"

namespace acqtime {

struct BoundsReport {
    int diameter_bound = 0;
    int edge_bound = 0;
    std::optional<int> bottleneck_bound;
    std::vector<Vertex> bottleneck_separator;
    int best_lower = 0;
};

// Potential-argument lower bound for a separator S: with ℓ the largest
// component of g - S, the number of (ordered) acquaintances can grow by at
// most |S|·ℓ + Σ_{s∈S} deg(s) per round.
int bottleneck_bound(const Graph& g, const std::vector<Vertex>& separator);

// Diameter and edge-count bounds, plus the best bottleneck bound found by a
// small heuristic (every single vertex, then top-degree prefixes) or by the
// caller-supplied separator.
BoundsReport lower_bounds(const Graph& g,
                          const std::optional<std::vector<Vertex>>& separator = std::nullopt);

}  // namespace acqtime
