#include "acqtime/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "acqtime/rng.hpp"

namespace acqtime {

bool is_simple_path(const Graph& g, const std::vector<Vertex>& path) {
    if (path.empty()) return false;
    std::vector<bool> seen(g.vertex_count(), false);
    for (Vertex v : path) {
        if (v < 0 || v >= g.vertex_count() || seen[v]) return false;
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

namespace {

std::vector<Vertex> deepest_bfs_path(const Graph& g, Vertex root) {
    std::vector<int> dist = bfs_distances(g, root);
    Vertex far = root;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (dist[v] > dist[far]) far = v;
    std::vector<Vertex> path{far};
    Vertex cur = far;
    while (cur != root) {
        for (Vertex w : g.neighbors(cur)) {
            if (dist[w] >= 0 && dist[w] == dist[cur] - 1) {
                cur = w;
                break;
            }
        }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace

std::vector<Vertex> long_path(const Graph& g, int effort, std::uint64_t seed) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("long_path: empty graph");
    if (n == 1) return {0};

    Rng rng(seed);

    std::vector<Vertex> roots;
    if (n <= 512) {
        for (Vertex v = 0; v < n; ++v) roots.push_back(v);
    } else {
        roots.push_back(0);
        for (int i = 0; i < 64; ++i) roots.push_back(rng.next_int(n));
    }
    std::vector<Vertex> best;
    for (Vertex r : roots) {
        auto p = deepest_bfs_path(g, r);
        if (p.size() > best.size()) best = p;
        // second sweep from the far end tends to stretch tree paths
        auto q = deepest_bfs_path(g, p.back());
        if (q.size() > best.size()) best = q;
    }
    if (static_cast<int>(best.size()) == n) return best;

    std::vector<int> pos(n);  // position on current path, -1 if absent
    std::vector<Vertex> path;
    path.reserve(n);
    long long budget = effort;

    auto run_from = [&](Vertex start) {
        std::fill(pos.begin(), pos.end(), -1);
        path.clear();
        path.push_back(start);
        pos[start] = 0;
        int stale = 0;
        while (budget > 0 && stale < 2 * n + 20) {
            --budget;
            Vertex tail = path.back();
            std::vector<Vertex> fresh;
            for (Vertex w : g.neighbors(tail))
                if (pos[w] < 0) fresh.push_back(w);
            if (!fresh.empty()) {
                Vertex w = fresh[rng.next_int(static_cast<int>(fresh.size()))];
                pos[w] = static_cast<int>(path.size());
                path.push_back(w);
                stale = 0;
                continue;
            }
            if (path.size() > best.size()) best = path;
            if (static_cast<int>(path.size()) == n) return;
            // rotation: pick a neighbour p_i of the endpoint, reverse the suffix
            std::vector<int> pivots;
            for (Vertex w : g.neighbors(tail))
                if (pos[w] >= 0 && pos[w] + 1 < static_cast<int>(path.size()) - 1)
                    pivots.push_back(pos[w]);
            if (pivots.empty()) return;
            int i = pivots[rng.next_int(static_cast<int>(pivots.size()))];
            std::reverse(path.begin() + i + 1, path.end());
            for (std::size_t k = i + 1; k < path.size(); ++k) pos[path[k]] = static_cast<int>(k);
            ++stale;
        }
        if (path.size() > best.size()) best = path;
    };

    while (budget > 0 && static_cast<int>(best.size()) < n) {
        run_from(rng.next_int(n));
    }
    return best;
}

}  // namespace acqtime
