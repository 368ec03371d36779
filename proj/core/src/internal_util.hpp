#pragma once

#include <vector>

#include "acqtime/dynamics.hpp"
#include "acqtime/graph.hpp"

namespace acqtime::detail {

// map a strategy built on local vertex ids into the ambient graph
inline Strategy relabel_strategy(const Strategy& s, const std::vector<Vertex>& to_global,
                                 int ambient) {
    Strategy out;
    out.n = ambient;
    out.rounds.reserve(s.rounds.size());
    for (const Matching& m : s.rounds) {
        Matching g;
        g.reserve(m.size());
        for (auto [u, v] : m) g.push_back({to_global[u], to_global[v]});
        out.rounds.push_back(normalize_matching(std::move(g)));
    }
    return out;
}

// placement-only tracker for generators that schedule against simulated moves
struct Placement {
    std::vector<Vertex> of;  // agent -> vertex
    std::vector<int> at;     // vertex -> agent

    explicit Placement(int n) : of(n), at(n) {
        for (int i = 0; i < n; ++i) of[i] = at[i] = i;
    }

    void apply(const Matching& m) {
        for (auto [u, v] : m) {
            int a = at[u], b = at[v];
            at[u] = b;
            at[v] = a;
            of[a] = v;
            of[b] = u;
        }
    }

    void apply_all(const Strategy& s) {
        for (const Matching& m : s.rounds) apply(m);
    }
};

// depth-first closed walk from `start` over the vertices of `tree_like`
// marked in `allowed`; returns the move sequence (2 moves per edge)
inline std::vector<Edge> euler_moves(const Graph& tree_like, const std::vector<bool>& allowed,
                                     Vertex start) {
    std::vector<Edge> moves;
    std::vector<bool> visited(tree_like.vertex_count(), false);
    struct Frame { Vertex v; std::size_t next; };
    std::vector<Frame> stack{{start, 0}};
    visited[start] = true;
    while (!stack.empty()) {
        Vertex v = stack.back().v;
        const auto& nbrs = tree_like.neighbors(v);
        bool descended = false;
        while (stack.back().next < nbrs.size()) {
            Vertex w = nbrs[stack.back().next++];
            if (!allowed[w] || visited[w]) continue;
            visited[w] = true;
            moves.push_back({v, w});
            stack.push_back({w, 0});
            descended = true;
            break;
        }
        if (!descended) {
            stack.pop_back();
            if (!stack.empty()) moves.push_back({v, stack.back().v});
        }
    }
    return moves;
}

}  // namespace acqtime::detail
