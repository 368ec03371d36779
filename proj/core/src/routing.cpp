#include "acqtime/routing.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace acqtime {

namespace {

std::vector<int> multi_source_dist(const Graph& tree, const std::vector<Vertex>& sources) {
    std::vector<int> dist(tree.vertex_count(), -1);
    std::queue<Vertex> q;
    for (Vertex s : sources) {
        dist[s] = 0;
        q.push(s);
    }
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : tree.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

// minimal subtree containing all of `verts`: union of tree paths to verts[0]
std::vector<bool> span_of(const Tree& t, const std::vector<Vertex>& verts) {
    std::vector<bool> in_span(t.graph.vertex_count(), false);
    if (verts.empty()) return in_span;
    std::vector<int> dist = bfs_distances(t.graph, verts[0]);
    in_span[verts[0]] = true;
    for (Vertex v : verts) {
        Vertex cur = v;
        while (!in_span[cur]) {
            in_span[cur] = true;
            for (Vertex w : t.graph.neighbors(cur))
                if (dist[w] == dist[cur] - 1) {
                    cur = w;
                    break;
                }
        }
    }
    return in_span;
}

class Router {
public:
    explicit Router(const Tree& tree) : tree_(tree) {}

    std::vector<Matching> route(std::vector<Vertex> S, std::vector<Vertex> T) {
        std::sort(S.begin(), S.end());
        std::sort(T.begin(), T.end());
        if (S == T) return {};
        if (S.size() == 1) return walk(S[0], T[0]);

        std::vector<bool> span_T = span_of(tree_, T);
        std::vector<int> dist_T = multi_source_dist(tree_.graph, T);

        Vertex star = -1;
        for (Vertex s : S)
            if (!span_T[s] && (star < 0 || dist_T[s] > dist_T[star])) star = s;
        if (star < 0) {
            std::vector<bool> span_S = span_of(tree_, S);
            bool t_outside = std::any_of(T.begin(), T.end(), [&](Vertex t) { return !span_S[t]; });
            if (t_outside) {
                // proof footnote: solve the reversed task, then play it backwards
                std::vector<Matching> rev = route(T, S);
                std::reverse(rev.begin(), rev.end());
                return rev;
            }
            // spans coincide: their leaves lie in both S and T and can stay put
            Vertex leaf = find_common_leaf(S, T, span_T);
            std::erase(S, leaf);
            std::erase(T, leaf);
            return route(std::move(S), std::move(T));
        }

        std::vector<int> dist_star = bfs_distances(tree_.graph, star);
        Vertex tgt = -1;
        for (Vertex t : T)
            if (tgt < 0 || dist_star[t] < dist_star[tgt]) tgt = t;

        std::vector<Vertex> sub_S = S, sub_T = T;
        std::erase(sub_S, star);
        std::erase(sub_T, tgt);
        std::vector<Matching> rounds = route(std::move(sub_S), std::move(sub_T));

        // walk s* -> t*, offset so vertex p_{i+1} is already clear of routed
        // agents when the walker arrives
        std::vector<Vertex> path = tree_path(tree_, star, tgt);
        int r = static_cast<int>(path.size()) - 2;  // interior vertices
        int base = std::max(static_cast<int>(rounds.size()), r - 1);
        rounds.resize(base + 2);
        for (int i = 0; i + 1 < static_cast<int>(path.size()); ++i)
            insert_move(rounds[base - r + i + 1], path[i], path[i + 1]);
        return rounds;
    }

private:
    std::vector<Matching> walk(Vertex from, Vertex to) {
        std::vector<Vertex> path = tree_path(tree_, from, to);
        std::vector<Matching> rounds;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            rounds.push_back({{std::min(path[i], path[i + 1]), std::max(path[i], path[i + 1])}});
        return rounds;
    }

    Vertex find_common_leaf(const std::vector<Vertex>& S, const std::vector<Vertex>& T,
                            const std::vector<bool>& span) {
        for (Vertex v : T) {
            int span_degree = 0;
            for (Vertex w : tree_.graph.neighbors(v))
                if (span[w]) ++span_degree;
            if (span_degree <= 1 && std::binary_search(S.begin(), S.end(), v)) return v;
        }
        throw std::logic_error("route_on_tree: no common leaf in coinciding spans");
    }

    static void insert_move(Matching& round, Vertex a, Vertex b) {
        for (auto [u, v] : round)
            if (u == a || v == a || u == b || v == b)
                throw std::logic_error("route_on_tree: walk collides with scheduled round");
        round.push_back({std::min(a, b), std::max(a, b)});
    }

    const Tree& tree_;
};

}  // namespace

int routing_span(const RoutingTask& task) {
    int best = 0;
    for (Vertex s : task.sources) {
        std::vector<int> dist = bfs_distances(task.tree.graph, s);
        for (Vertex t : task.targets) best = std::max(best, dist[t]);
    }
    return best;
}

Strategy route_on_tree(const RoutingTask& task) {
    const Graph& tg = task.tree.graph;
    if (task.sources.size() != task.targets.size())
        throw std::invalid_argument("route_on_tree: |S| != |T|");
    auto check = [&](const std::vector<Vertex>& vs, const char* what) {
        std::set<Vertex> seen;
        for (Vertex v : vs) {
            if (v < 0 || v >= tg.vertex_count())
                throw std::invalid_argument(std::string("route_on_tree: ") + what + " out of range");
            if (!seen.insert(v).second)
                throw std::invalid_argument(std::string("route_on_tree: repeated ") + what);
        }
    };
    check(task.sources, "source");
    check(task.targets, "target");

    Router router(task.tree);
    std::vector<Matching> rounds = router.route(task.sources, task.targets);
    Strategy s;
    s.n = tg.vertex_count();
    for (Matching& m : rounds)
        if (!m.empty()) s.rounds.push_back(normalize_matching(std::move(m)));
    return s;
}

}  // namespace acqtime
