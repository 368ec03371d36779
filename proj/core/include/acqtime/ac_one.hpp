#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"
#include "acqtime/rng.hpp"

namespace acqtime {

// A candidate certificate that one round suffices: disjoint swap pairs plus
// the set of vertices that stay put.
struct AcOnePartition {
    std::vector<Edge> pairs;
    std::vector<Vertex> rest;
};

struct PartitionVerdict {
    bool ok = false;
    std::string violation;  // first failed condition when !ok
};

// Checks the five structural conditions that make p.pairs a one-round
// strategy; throws std::invalid_argument when p is not a partition of V.
PartitionVerdict verify_partition(const Graph& g, const AcOnePartition& p);

// Necessary conditions for a one-round strategy. Each check failing is a
// sound proof that at least two rounds are needed.
struct StructureAudit {
    bool edge_count_ok = false;     // 4|E| >= n^2 - 1
    bool degree_spread_ok = false;  // at least floor(n/2) vertices of degree >= ceil(n/2)
    bool matching_ok = false;       // a matching covering all but at most one vertex
    bool neighborhood_ok = false;   // high-degree pairs share neighbors or neighborhood edges
    std::optional<bool> pair_degree_ok;    // deg(a)+deg(b) >= n per swap pair
    std::optional<bool> clique_degree_ok;  // deg(c) >= |pairs|+|rest|-1 per resting vertex

    bool passed() const;
    std::string failure_text() const;  // comma list of failed checks, empty when passed
};

StructureAudit structure_audit(const Graph& g);
StructureAudit structure_audit(const Graph& g, const AcOnePartition& p);

// Vertices with 2*deg(v) >= n, ascending.
std::vector<Vertex> high_degree_set(const Graph& g);

// Maximum bipartite matching between u_side and w_side. ok when it covers
// all of w_side except at most one vertex; anything smaller disproves a
// one-round strategy.
struct TransferResult {
    bool ok = false;
    Matching matching;
};

TransferResult transfer_matching(const Graph& g, const std::vector<Vertex>& u_side,
                                 const std::vector<Vertex>& w_side);

// One matching whose application lets the agent at v meet every other agent:
// either non-neighbors of v swap onto N(v), or v swaps with a neighbor u and
// the rest swap onto N(v) & N(u). nullopt is a sound proof that two rounds
// are needed.
std::optional<Matching> meet_all_matching(const Graph& g, Vertex v);

struct Ac1Result {
    enum class Status { ok, certificate, inconclusive };
    Status status = Status::inconclusive;
    Strategy strategy;  // meaningful when status == ok
    std::string note;   // reason for certificate / inconclusive
};

// Per-agent meet-all rounds for the first n-c-1 agents, then an exhaustive
// search over matchings touching the last c+1 agents' vertices. At most n-c
// rounds on success; certificate when some agent cannot meet everyone in one
// round. c is clamped to [1, 3].
Ac1Result deterministic_strategy(const Graph& g, int c = 1);

// One round of the randomized mixing process on the high-degree set u_set:
// each vertex proposes itself or a uniform neighbor, proposals are accepted
// greedily in random order.
Matching random_matching(const Graph& g, const std::vector<Vertex>& u_set, Rng& rng);
Matching random_matching(const Graph& g, const std::vector<Vertex>& u_set, std::uint64_t seed);

struct RandomizedOptions {
    std::uint64_t seed = 1;
    int restarts = 5;
    int cap_per_pair = 0;  // 0 picks 200 * ceil(log2 n) double rounds
};

// Groups agents into blocks of half the high-degree set, transfers each block
// pair onto the high-degree vertices, and mixes with random matchings until
// the pair's agents have all met. Every mixing matching is applied twice so
// placements are restored between phases.
Ac1Result randomized_strategy(const Graph& g, const RandomizedOptions& opts = {});

}  // namespace acqtime
