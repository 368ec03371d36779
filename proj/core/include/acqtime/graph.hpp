#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace acqtime {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // normalized u < v

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// edge list sorted lexicographically, adjacency lists sorted ascending.
class Graph {
public:
    Graph() = default;

    // Rejects out-of-range endpoints, self-loops and duplicate edges.
    static Graph from_edges(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    bool is_connected() const;
    // Two vertices in different components, if any.
    std::optional<Edge> disconnected_witness() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

// BFS distances from source; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Throws on disconnected input, naming two unreachable vertices.
int diameter(const Graph& g);

// Rooted spanning tree: BFS from `root`, children visited in ascending order.
struct Tree {
    Graph graph;                // tree edges only, on the same vertex ids
    Vertex root = 0;
    std::vector<Vertex> parent; // parent[root] == -1
};

Tree spanning_tree(const Graph& g, Vertex root = 0);

// Path between two vertices of a tree (inclusive of both endpoints).
std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to);

}  // namespace acqtime
