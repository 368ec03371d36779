#include "acqtime/hardness.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "acqtime/rng.hpp"

namespace acqtime {

ColoredGraph read_colored_graph(std::istream& in) {
    ColoredGraph cg;
    cg.graph = read_graph(in);
    cg.coloring = read_coloring(in);
    if (static_cast<int>(cg.coloring.color.size()) != cg.graph.vertex_count()) {
        throw std::runtime_error("colored graph file: coloring size does not match the graph");
    }
    return cg;
}

ColoredGraph read_colored_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_colored_graph(in);
}

void write_colored_graph(std::ostream& out, const ColoredGraph& cg) {
    write_graph(out, cg.graph);
    write_coloring(out, cg.coloring);
}

void write_colored_graph_file(const std::string& path, const ColoredGraph& cg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    write_colored_graph(out, cg);
}

void validate_colored_graph(const ColoredGraph& cg) {
    const int n = cg.graph.vertex_count();
    const int k = cg.coloring.k;
    if (k <= 0) throw std::invalid_argument("coloring: no colors");
    if (static_cast<int>(cg.coloring.color.size()) != n) {
        throw std::invalid_argument("coloring: size does not match the graph");
    }
    if (n % k != 0) throw std::invalid_argument("coloring: classes cannot be equal sized");
    std::vector<int> size(k, 0);
    for (Vertex v = 0; v < n; ++v) {
        const int c = cg.coloring.color[v];
        if (c < 0 || c >= k) throw std::invalid_argument("coloring: color id out of range");
        ++size[c];
    }
    for (int c = 0; c < k; ++c) {
        if (size[c] != n / k) {
            throw std::invalid_argument("coloring: class " + std::to_string(c) + " has size " +
                                        std::to_string(size[c]) + ", expected " +
                                        std::to_string(n / k));
        }
    }
    for (auto [u, v] : cg.graph.edges()) {
        if (cg.coloring.color[u] == cg.coloring.color[v]) {
            throw std::invalid_argument("coloring: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is monochromatic");
        }
    }
}

ReductionOutput reduce_to_acquaintance(const ColoredGraph& cg, int t) {
    if (t < 1) throw std::invalid_argument("reduce_to_acquaintance: t must be positive");
    validate_colored_graph(cg);
    const int n = cg.graph.vertex_count();
    if (n == 0) throw std::invalid_argument("reduce_to_acquaintance: empty graph");
    const int k = cg.coloring.k;
    const int class_size = n / k;

    std::vector<std::vector<Vertex>> classes(k);
    for (Vertex v = 0; v < n; ++v) classes[cg.coloring.color[v]].push_back(v);

    const int total = (t + 1) * n;
    std::vector<Edge> edges;
    // left part: complement of the input
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!cg.graph.has_edge(u, v)) edges.push_back({u, v});
        }
    }
    // blocks: block (r, c) holds class_size vertices; rounds are 0-based here
    auto block_start = [&](int r, int c) { return n + r * n + c * class_size; };
    // every block vertex joins the whole left part
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex w = n; w < total; ++w) edges.push_back({u, w});
    }
    // distinct blocks are fully joined
    for (int r = 0; r < t; ++r) {
        for (int c = 0; c < k; ++c) {
            const int s = block_start(r, c);
            for (int i = 0; i < class_size; ++i) {
                for (Vertex w = s + class_size; w < total; ++w) {
                    edges.push_back({s + i, w});
                }
            }
        }
    }

    ReductionOutput out;
    out.graph = Graph::from_edges(total, edges);
    out.witness.n = total;
    for (int r = 0; r < t; ++r) {
        Matching round;
        for (int c = 0; c < k; ++c) {
            const int s = block_start(r, c);
            for (int i = 0; i < class_size; ++i) {
                round.push_back({classes[c][i], s + i});
            }
        }
        out.witness.rounds.push_back(normalize_matching(std::move(round)));
    }
    return out;
}

DoublingOutput ramsey_double(const Graph& h, DoublingRule rule, std::uint64_t seed) {
    const int m = h.vertex_count();
    if (m == 0) throw std::invalid_argument("ramsey_double: empty graph");
    std::vector<Edge> edges;
    for (auto [u, v] : h.edges()) edges.push_back({u, v});
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = u + 1; v < m; ++v) {
            if (!h.has_edge(u, v)) edges.push_back({m + u, m + v});
        }
    }
    Rng rng(seed);
    DoublingOutput out;
    for (Vertex u = 0; u < m; ++u) {
        edges.push_back({u, m + u});
        out.witness.push_back({u, m + u});
    }
    for (Vertex u = 0; u < m; ++u) {
        for (Vertex v = u + 1; v < m; ++v) {
            const bool forward = rule == DoublingRule::deterministic || rng.next_bool();
            if (forward) {
                edges.push_back({u, m + v});
            } else {
                edges.push_back({v, m + u});
            }
        }
    }
    out.graph = Graph::from_edges(2 * m, edges);
    out.witness = normalize_matching(std::move(out.witness));
    return out;
}

ColoredGraph plant_equicolorable(int n, int colors, double p, std::uint64_t seed) {
    if (n <= 0 || colors <= 0 || n % colors != 0) {
        throw std::invalid_argument("plant_equicolorable: need colors dividing n");
    }
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("plant_equicolorable: p outside [0,1]");
    const int class_size = n / colors;
    ColoredGraph out;
    out.coloring.k = colors;
    out.coloring.color.resize(n);
    for (Vertex v = 0; v < n; ++v) out.coloring.color[v] = v / class_size;
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (out.coloring.color[u] == out.coloring.color[v]) continue;
            if (rng.next_double() < p) edges.push_back({u, v});
        }
    }
    out.graph = Graph::from_edges(n, edges);
    return out;
}

}  // namespace acqtime
