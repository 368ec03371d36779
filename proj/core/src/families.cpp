#include "acqtime/families.hpp"

#include <stdexcept>
#include <string>

#include "acqtime/rng.hpp"

namespace acqtime {

namespace {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("Path: n must be >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("Cycle: n must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("Complete: n must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph make_complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("CompleteBipartite: sides must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return Graph::from_edges(a + b, std::move(edges));
}

Graph make_hypercube(int dim) {
    if (dim < 0) throw std::invalid_argument("Hypercube: dimension must be >= 0");
    if (dim > 20) throw std::invalid_argument("Hypercube: dimension too large");
    int n = 1 << dim;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int bit = 0; bit < dim; ++bit) {
            int v = u ^ (1 << bit);
            if (u < v) edges.push_back({u, v});
        }
    return Graph::from_edges(n, std::move(edges));
}

Graph make_binary_tree(int depth) {
    if (depth < 0) throw std::invalid_argument("BinaryTree: depth must be >= 0");
    if (depth > 24) throw std::invalid_argument("BinaryTree: depth too large");
    int n = (1 << (depth + 1)) - 1;
    std::vector<Edge> edges;
    for (int i = 0; 2 * i + 1 < n; ++i) {
        edges.push_back({i, 2 * i + 1});
        if (2 * i + 2 < n) edges.push_back({i, 2 * i + 2});
    }
    return Graph::from_edges(n, std::move(edges));
}

Graph make_barbell(int s) {
    if (s < 1) throw std::invalid_argument("Barbell: clique size must be >= 1");
    std::vector<Edge> edges;
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v) {
            edges.push_back({u, v});
            edges.push_back({s + u, s + v});
        }
    edges.push_back({0, s});
    return Graph::from_edges(2 * s, std::move(edges));
}

Graph make_clique_ring(int r, int l) {
    if (r < 2) throw std::invalid_argument("CliqueRing: need at least 2 cliques");
    if (l < 1) throw std::invalid_argument("CliqueRing: clique size must be >= 1");
    if (r == 2 && l < 2) throw std::invalid_argument("CliqueRing: r=2 needs clique size >= 2");
    std::vector<Edge> edges;
    auto id = [l](int i, int j) { return i * l + j; };
    for (int i = 0; i < r; ++i)
        for (int u = 0; u < l; ++u)
            for (int v = u + 1; v < l; ++v) edges.push_back({id(i, u), id(i, v)});
    int spokes = (r == 2) ? 1 : r;  // avoid doubling the matching when r == 2
    for (int i = 0; i < spokes; ++i) {
        int next = (i + 1) % r;
        for (int j = 0; j < l; ++j) edges.push_back({id(i, j), id(next, j)});
    }
    return Graph::from_edges(r * l, std::move(edges));
}

Graph make_octopus(int r, int l) {
    if (r < 1) throw std::invalid_argument("Octopus: need at least 1 clique");
    if (l < 1) throw std::invalid_argument("Octopus: clique size must be >= 1");
    int center = r * l;
    std::vector<Edge> edges;
    for (int i = 0; i < r; ++i) {
        for (int u = 0; u < l; ++u)
            for (int v = u + 1; v < l; ++v) edges.push_back({i * l + u, i * l + v});
        edges.push_back({i * l, center});
    }
    return Graph::from_edges(center + 1, std::move(edges));
}

Graph make_gnp(const GnpSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("Gnp: n must be >= 1");
    if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("Gnp: p must be in [0,1]");
    for (int attempt = 0; attempt <= spec.max_retries; ++attempt) {
        Rng rng(spec.seed + static_cast<std::uint64_t>(attempt));
        std::vector<Edge> edges;
        for (int u = 0; u < spec.n; ++u)
            for (int v = u + 1; v < spec.n; ++v)
                if (rng.next_double() < spec.p) edges.push_back({u, v});
        Graph g = Graph::from_edges(spec.n, std::move(edges));
        if (g.is_connected()) return g;
    }
    throw std::runtime_error("Gnp: no connected sample within " +
                             std::to_string(spec.max_retries) + " retries");
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> Graph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return make_path(s.n);
            else if constexpr (std::is_same_v<T, CycleSpec>) return make_cycle(s.n);
            else if constexpr (std::is_same_v<T, CompleteSpec>) return make_complete(s.n);
            else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>) return make_complete_bipartite(s.a, s.b);
            else if constexpr (std::is_same_v<T, HypercubeSpec>) return make_hypercube(s.dim);
            else if constexpr (std::is_same_v<T, BinaryTreeSpec>) return make_binary_tree(s.depth);
            else if constexpr (std::is_same_v<T, BarbellSpec>) return make_barbell(s.clique_size);
            else if constexpr (std::is_same_v<T, CliqueRingSpec>) return make_clique_ring(s.cliques, s.clique_size);
            else if constexpr (std::is_same_v<T, OctopusSpec>) return make_octopus(s.cliques, s.clique_size);
            else return make_gnp(s);
        },
        spec);
}

std::string family_name(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, PathSpec>) return "path(" + std::to_string(s.n) + ")";
            else if constexpr (std::is_same_v<T, CycleSpec>) return "cycle(" + std::to_string(s.n) + ")";
            else if constexpr (std::is_same_v<T, CompleteSpec>) return "complete(" + std::to_string(s.n) + ")";
            else if constexpr (std::is_same_v<T, CompleteBipartiteSpec>)
                return "complete_bipartite(" + std::to_string(s.a) + "," + std::to_string(s.b) + ")";
            else if constexpr (std::is_same_v<T, HypercubeSpec>) return "hypercube(" + std::to_string(s.dim) + ")";
            else if constexpr (std::is_same_v<T, BinaryTreeSpec>) return "binary_tree(" + std::to_string(s.depth) + ")";
            else if constexpr (std::is_same_v<T, BarbellSpec>) return "barbell(" + std::to_string(s.clique_size) + ")";
            else if constexpr (std::is_same_v<T, CliqueRingSpec>)
                return "clique_ring(" + std::to_string(s.cliques) + "," + std::to_string(s.clique_size) + ")";
            else if constexpr (std::is_same_v<T, OctopusSpec>)
                return "octopus(" + std::to_string(s.cliques) + "," + std::to_string(s.clique_size) + ")";
            else return "gnp(" + std::to_string(s.n) + ")";
        },
        spec);
}

namespace {

bool same_edges(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

bool try_match(const Graph& g, const FamilySpec& spec) {
    try {
        return same_edges(g, generate(spec));
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace

std::optional<FamilySpec> detect_family(const Graph& g) {
    int n = g.vertex_count();
    long long m = static_cast<long long>(g.edge_count());
    if (n >= 1 && try_match(g, CompleteSpec{n})) return CompleteSpec{n};
    if (try_match(g, PathSpec{n})) return PathSpec{n};
    if (n >= 3 && try_match(g, CycleSpec{n})) return CycleSpec{n};
    for (int a = 1; a < n; ++a)
        if (static_cast<long long>(a) * (n - a) == m && try_match(g, CompleteBipartiteSpec{a, n - a}))
            return CompleteBipartiteSpec{a, n - a};
    for (int d = 0; (1 << d) <= n; ++d)
        if ((1 << d) == n && try_match(g, HypercubeSpec{d})) return HypercubeSpec{d};
    for (int d = 0; (1 << (d + 1)) - 1 <= n; ++d)
        if ((1 << (d + 1)) - 1 == n && try_match(g, BinaryTreeSpec{d})) return BinaryTreeSpec{d};
    if (n % 2 == 0 && n >= 2 && try_match(g, BarbellSpec{n / 2})) return BarbellSpec{n / 2};
    for (int l = 1; l <= n; ++l) {
        if (n % l != 0) continue;
        int r = n / l;
        if (r >= 2 && try_match(g, CliqueRingSpec{r, l})) return CliqueRingSpec{r, l};
    }
    for (int l = 1; l < n; ++l) {
        if ((n - 1) % l != 0) continue;
        int r = (n - 1) / l;
        if (r >= 1 && try_match(g, OctopusSpec{r, l})) return OctopusSpec{r, l};
    }
    return std::nullopt;
}

}  // namespace acqtime
