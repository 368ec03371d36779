#include "acqtime/matchings.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace acqtime {

namespace {

struct Kuhn {
    const Graph& g;
    const std::vector<char>& in_b;
    std::vector<int> match_of_b;  // vertex on side b -> matched a, or -1
    std::vector<char> visited;

    Kuhn(const Graph& graph, const std::vector<char>& b_mask)
        : g(graph), in_b(b_mask), match_of_b(graph.vertex_count(), -1),
          visited(graph.vertex_count(), 0) {}

    bool try_augment(Vertex a) {
        for (Vertex b : g.neighbors(a)) {
            if (!in_b[b] || visited[b]) continue;
            visited[b] = 1;
            if (match_of_b[b] < 0 || try_augment(match_of_b[b])) {
                match_of_b[b] = a;
                return true;
            }
        }
        return false;
    }
};

// classic blossom algorithm: BFS from each free vertex, contracting odd
// cycles onto their base until an augmenting path appears
class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.vertex_count()), match_(n_, -1), parent_(n_, -1), base_(n_, 0) {}

    int solve() {
        int size = 0;
        for (Vertex v = 0; v < n_; ++v) {
            if (match_[v] >= 0) continue;
            int u = find_augmenting_path(v);
            if (u < 0) continue;
            ++size;
            while (u >= 0) {
                int pv = parent_[u];
                int ppv = match_[pv];
                match_[u] = pv;
                match_[pv] = u;
                u = ppv;
            }
        }
        return size;
    }

    const std::vector<int>& mate() const { return match_; }

private:
    const Graph& g_;
    int n_;
    std::vector<int> match_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<char> used_;
    std::vector<char> blossom_;

    int lowest_common_base(int a, int b) {
        std::vector<char> seen(n_, 0);
        for (;;) {
            a = base_[a];
            seen[a] = 1;
            if (match_[a] < 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_augmenting_path(int root) {
        used_.assign(n_, 0);
        parent_.assign(n_, -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = 1;
        std::vector<int> queue = {root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (Vertex to : g_.neighbors(v)) {
                if (base_[v] == base_[to] || match_[v] == static_cast<int>(to)) continue;
                if (static_cast<int>(to) == root ||
                    (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
                    int cur_base = lowest_common_base(v, to);
                    blossom_.assign(n_, 0);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!blossom_[base_[i]]) continue;
                        base_[i] = cur_base;
                        if (!used_[i]) {
                            used_[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent_[to] < 0) {
                    parent_[to] = v;
                    if (match_[to] < 0) return to;
                    used_[match_[to]] = 1;
                    queue.push_back(match_[to]);
                }
            }
        }
        return -1;
    }
};

}  // namespace

Matching bipartite_max_matching(const Graph& g, const std::vector<Vertex>& side_a,
                                const std::vector<Vertex>& side_b) {
    const int n = g.vertex_count();
    std::vector<char> in_a(n, 0), in_b(n, 0);
    for (Vertex v : side_a) {
        if (v < 0 || v >= n) throw std::invalid_argument("bipartite_max_matching: vertex out of range");
        in_a[v] = 1;
    }
    for (Vertex v : side_b) {
        if (v < 0 || v >= n) throw std::invalid_argument("bipartite_max_matching: vertex out of range");
        if (in_a[v]) throw std::invalid_argument("bipartite_max_matching: sides overlap");
        in_b[v] = 1;
    }

    std::vector<Vertex> order(side_a);
    std::sort(order.begin(), order.end());
    Kuhn kuhn(g, in_b);
    for (Vertex a : order) {
        kuhn.visited.assign(n, 0);
        kuhn.try_augment(a);
    }

    Matching m;
    for (Vertex b = 0; b < n; ++b) {
        if (in_b[b] && kuhn.match_of_b[b] >= 0) m.push_back({kuhn.match_of_b[b], b});
    }
    return normalize_matching(m);
}

Matching max_matching(const Graph& g) {
    Blossom solver(g);
    solver.solve();
    Matching m;
    const auto& mate = solver.mate();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (mate[v] > static_cast<int>(v)) m.push_back({v, mate[v]});
    }
    return normalize_matching(m);
}

bool has_near_perfect_matching(const Graph& g) {
    return static_cast<int>(max_matching(g).size()) == g.vertex_count() / 2;
}

}  // namespace acqtime
