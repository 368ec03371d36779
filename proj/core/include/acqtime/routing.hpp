#pragma once

#include <vector>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"

namespace acqtime {

// Route the agents occupying `sources` so that they end on `targets` (as a
// set; no particular assignment). Other agents may be displaced.
struct RoutingTask {
    Tree tree;
    std::vector<Vertex> sources;
    std::vector<Vertex> targets;
};

// Longest source-target distance; the produced strategy has length at most
// max_dist + 2(k-1) where k is the number of routed agents.
int routing_span(const RoutingTask& task);

Strategy route_on_tree(const RoutingTask& task);

}  // namespace acqtime
