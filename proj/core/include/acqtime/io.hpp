#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"

namespace acqtime {

inline constexpr int kFormatVersion = 1;

// Graph text format: first non-comment line "n m", then m lines "u v" with
// 0 <= u < v < n. Lines starting with '#' are ignored. Writers emit the edge
// list sorted lexicographically.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

// Strategy files are JSON documents:
//   {"format_version": 1, "n": 4, "rounds": [[[0,1]], [[2,3]]], "metadata": {...}}
// metadata holds the generator name and parameters as strings.
struct StrategyFile {
    Strategy strategy;
    std::map<std::string, std::string> metadata;
};

StrategyFile read_strategy(std::istream& in);
StrategyFile read_strategy_file(const std::string& path);
void write_strategy(std::ostream& out, const Strategy& s,
                    const std::map<std::string, std::string>& metadata = {});
void write_strategy_file(const std::string& path, const Strategy& s,
                         const std::map<std::string, std::string>& metadata = {});

// Coloring file: first non-comment line "n K", then n lines with one color id
// (0..K-1) per vertex.
struct Coloring {
    int k = 0;
    std::vector<int> color;  // per vertex
};

Coloring read_coloring(std::istream& in);
Coloring read_coloring_file(const std::string& path);
void write_coloring(std::ostream& out, const Coloring& c);
void write_coloring_file(const std::string& path, const Coloring& c);

}  // namespace acqtime
