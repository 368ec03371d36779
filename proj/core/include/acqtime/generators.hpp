#pragma once

#include <string>
#include <vector>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"

namespace acqtime {

// every generator returns a strategy whose simulation acquaints all pairs;
// callers can re-check with verify_acquaintance

// each agent in turn walks a depth-first tour of a spanning tree
Strategy dfs_baseline(const Graph& g);

// path on n vertices: cross the halves, then recurse on both sides in parallel
Strategy path_strategy(int n);

// replay the path schedule along a hamiltonian path of g
Strategy hamiltonian_strategy(const Graph& g, const std::vector<Vertex>& ham_path);

// partition agents into classes sized half the path, co-route class pairs
// onto the path and run the path schedule there
Strategy long_path_strategy(const Graph& g, const std::vector<Vertex>& path);

// batch processing on a spanning tree rooted at a maximum-degree vertex
Strategy max_degree_strategy(const Graph& g);

// picks the path or degree route based on what the graph offers
Strategy ac_upper_general(const Graph& g, int path_effort = 20000,
                          std::uint64_t path_seed = 1);

// complete binary tree of the given depth
Strategy binary_tree_strategy(int depth);

// K_{2^r,2^r} in exactly r rounds of address-bit moves
Strategy complete_bipartite_strategy(int r);

// ring of cliques: block-level path schedule plus boundary mixers
Strategy clique_ring_strategy(int cliques, int clique_size);

enum class OctopusMode { pairs, center };

// cliques joined through a center: pairwise hamiltonian phases, or
// rotations past the connectors while one agent waits at the center
Strategy octopus_strategy(int cliques, int clique_size, OctopusMode mode);

struct BestResult {
    Strategy strategy;
    std::string method;
};

// tries the specialized generators that apply and keeps the shortest
// verified strategy
BestResult best_strategy(const Graph& g, int path_effort = 20000,
                         std::uint64_t path_seed = 1);

}  // namespace acqtime
