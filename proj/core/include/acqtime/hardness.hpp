#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"
#include "acqtime/io.hpp"

namespace acqtime {

struct ColoredGraph {
    Graph graph;
    Coloring coloring;
};

// Colored graph files are a graph section followed by a coloring section
// (the two standalone formats back to back).
ColoredGraph read_colored_graph(std::istream& in);
ColoredGraph read_colored_graph_file(const std::string& path);
void write_colored_graph(std::ostream& out, const ColoredGraph& cg);
void write_colored_graph_file(const std::string& path, const ColoredGraph& cg);

// Throws std::invalid_argument unless the coloring is proper, uses every
// color id in range, and splits the vertices into equal-sized classes.
void validate_colored_graph(const ColoredGraph& cg);

struct ReductionOutput {
    Graph graph;
    Strategy witness;  // exactly t rounds
};

// Builds the instance whose acquaintance needs exactly t rounds iff the
// input is properly colorable into equal classes: the complement of the
// input plus t stacks of independent blocks, one block per color class,
// fully joined across the two parts and across distinct blocks. The witness
// swaps block i,j with color class j in round i.
ReductionOutput reduce_to_acquaintance(const ColoredGraph& cg, int t);

enum class DoublingRule { deterministic, seeded };

struct DoublingOutput {
    Graph graph;     // 2m vertices: copy, complement, rungs, one diagonal per pair
    Matching witness;  // the rung matching, a one-round strategy
};

// Joins a copy of h with its complement: rung edges (i, m+i), and for every
// i < j exactly one of (i, m+j) or (j, m+i). The deterministic rule always
// picks (i, m+j); the seeded rule flips a coin per pair.
DoublingOutput ramsey_double(const Graph& h, DoublingRule rule, std::uint64_t seed = 0);

// Random instance with a planted equitable proper coloring: classes are the
// consecutive blocks of n/colors vertices, and each cross-class pair becomes
// an edge with probability p.
ColoredGraph plant_equicolorable(int n, int colors, double p, std::uint64_t seed);

}  // namespace acqtime
