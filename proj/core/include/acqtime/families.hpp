#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "acqtime/graph.hpp"

namespace acqtime {

// Graph families with fixed vertex numbering, so strategies generated for a
// family line up with graphs produced here.
//
//   Path(n)               0..n-1 in path order
//   Cycle(n)              0..n-1 around the cycle, n >= 3
//   Complete(n)           all pairs
//   CompleteBipartite(a,b) side A = 0..a-1, side B = a..a+b-1
//   Hypercube(d)          vertex = bit string, edges differ in one bit
//   BinaryTree(depth)     complete binary tree, heap order: children of i are
//                         2i+1 and 2i+2; n = 2^(depth+1) - 1
//   Barbell(s)            cliques {0..s-1} and {s..2s-1}, bridge (0, s)
//   CliqueRing(r, l)      r cliques of size l on a cycle; vertex (i,j) = i*l+j;
//                         consecutive cliques joined by the matching j <-> j;
//                         r == 2 gives a single matching between the cliques
//   Octopus(r, l)         r cliques of size l plus a center; clique i occupies
//                         i*l..i*l+l-1 with connector i*l; center = r*l,
//                         adjacent to every connector
//   Gnp(n, p, seed)       Erdos-Renyi, resampled with seed+1, seed+2, ... until
//                         connected (bounded number of retries)

struct PathSpec { int n; };
struct CycleSpec { int n; };
struct CompleteSpec { int n; };
struct CompleteBipartiteSpec { int a; int b; };
struct HypercubeSpec { int dim; };
struct BinaryTreeSpec { int depth; };
struct BarbellSpec { int clique_size; };
struct CliqueRingSpec { int cliques; int clique_size; };
struct OctopusSpec { int cliques; int clique_size; };
struct GnpSpec {
    int n;
    double p;
    std::uint64_t seed;
    int max_retries = 100;
};

using FamilySpec = std::variant<PathSpec, CycleSpec, CompleteSpec, CompleteBipartiteSpec,
                                HypercubeSpec, BinaryTreeSpec, BarbellSpec, CliqueRingSpec,
                                OctopusSpec, GnpSpec>;

Graph generate(const FamilySpec& spec);

std::string family_name(const FamilySpec& spec);

// Exact structural match against the canonical numbering above (not an
// isomorphism test). Gnp is never reported.
std::optional<FamilySpec> detect_family(const Graph& g);

}  // namespace acqtime
