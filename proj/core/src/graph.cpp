#include "acqtime/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace acqtime {

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("graph: duplicate edge");

    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.adj_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

bool Graph::is_connected() const {
    return !disconnected_witness().has_value();
}

std::optional<Edge> Graph::disconnected_witness() const {
    if (n_ <= 1) return std::nullopt;
    std::vector<int> dist = bfs_distances(*this, 0);
    for (Vertex v = 0; v < n_; ++v)
        if (dist[v] < 0) return Edge{0, v};
    return std::nullopt;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (source < 0 || source >= g.vertex_count())
        throw std::invalid_argument("bfs: source out of range");
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int diameter(const Graph& g) {
    if (auto w = g.disconnected_witness()) {
        throw std::runtime_error("diameter: graph disconnected, vertices " +
                                 std::to_string(w->first) + " and " + std::to_string(w->second) +
                                 " are not connected");
    }
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> dist = bfs_distances(g, v);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

Tree spanning_tree(const Graph& g, Vertex root) {
    if (auto w = g.disconnected_witness()) {
        throw std::runtime_error("spanning_tree: graph disconnected, vertices " +
                                 std::to_string(w->first) + " and " + std::to_string(w->second) +
                                 " are not connected");
    }
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("spanning_tree: root out of range");

    Tree t;
    t.root = root;
    t.parent.assign(g.vertex_count(), -1);
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Edge> tree_edges;
    std::queue<Vertex> q;
    seen[root] = true;
    q.push(root);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : g.neighbors(u)) {  // ascending: adjacency is sorted
            if (!seen[w]) {
                seen[w] = true;
                t.parent[w] = u;
                tree_edges.push_back({std::min(u, w), std::max(u, w)});
                q.push(w);
            }
        }
    }
    t.graph = Graph::from_edges(g.vertex_count(), std::move(tree_edges));
    return t;
}

std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to) {
    std::vector<int> dist = bfs_distances(t.graph, from);
    if (to < 0 || to >= t.graph.vertex_count() || dist[to] < 0)
        throw std::invalid_argument("tree_path: endpoints not connected in tree");
    std::vector<Vertex> path{to};
    Vertex cur = to;
    while (cur != from) {
        for (Vertex w : t.graph.neighbors(cur)) {
            if (dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace acqtime
