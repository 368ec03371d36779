#include <algorithm>
#include <stdexcept>
#include <vector>

#include "acqtime/families.hpp"
#include "acqtime/generators.hpp"
#include "acqtime/routing.hpp"
#include "internal_util.hpp"

namespace acqtime {
namespace {

using detail::Placement;
using detail::euler_moves;
using detail::relabel_strategy;

// The heap numbering makes subtree bookkeeping cheap: children of v are
// 2v+1 and 2v+2, and a subtree is closed upwards under (w-1)/2 until its
// root. All fragments are built against the placement they will see, so
// they can be freely composed in parallel on disjoint subtrees.
class BinTreePlan {
public:
    BinTreePlan(const Graph& g, int n) : g_(g), n_(n), p_(n) {}

    Strategy run() {
        Strategy s = main_rec(0);
        s.n = n_;
        return s;
    }

private:
    std::vector<Vertex> subtree_vertices(Vertex v) const {
        std::vector<Vertex> out, stack{v};
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            out.push_back(x);
            if (2 * x + 1 < n_) stack.push_back(2 * x + 1);
            if (2 * x + 2 < n_) stack.push_back(2 * x + 2);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<int> agents_in(const std::vector<Vertex>& verts) const {
        std::vector<int> out;
        out.reserve(verts.size());
        for (Vertex v : verts) out.push_back(p_.at[v]);
        return out;
    }

    std::vector<Vertex> positions_of(const std::vector<int>& agents) const {
        std::vector<Vertex> out;
        out.reserve(agents.size());
        for (int a : agents) out.push_back(p_.of[a]);
        return out;
    }

    // closed depth-first tour of subtree(region) by the occupant of start
    Strategy tour(Vertex start, Vertex region) {
        std::vector<bool> allowed(n_, false);
        for (Vertex v : subtree_vertices(region)) allowed[v] = true;
        Strategy s;
        s.n = n_;
        for (auto [x, y] : euler_moves(g_, allowed, start))
            s.rounds.push_back({{std::min(x, y), std::max(x, y)}});
        p_.apply_all(s);
        return s;
    }

    Strategy route_in_subtree(Vertex region, std::vector<Vertex> sources,
                              std::vector<Vertex> targets) {
        std::vector<Vertex> verts = subtree_vertices(region);
        std::vector<int> local(n_, -1);
        for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
        std::vector<Edge> es;
        for (Vertex w : verts) {
            if (w == region) continue;
            Vertex par = (w - 1) / 2;
            es.push_back({std::min(local[w], local[par]), std::max(local[w], local[par])});
        }
        RoutingTask task;
        task.tree = spanning_tree(Graph::from_edges(static_cast<int>(verts.size()), es),
                                  local[region]);
        for (Vertex s : sources) task.sources.push_back(local[s]);
        for (Vertex t : targets) task.targets.push_back(local[t]);
        Strategy s = relabel_strategy(route_on_tree(task), verts, n_);
        p_.apply_all(s);
        return s;
    }

    static void append(Strategy& into, const Strategy& more) {
        into.rounds.insert(into.rounds.end(), more.rounds.begin(), more.rounds.end());
    }

    // all current occupants of subtree(v) meet each other
    Strategy main_rec(Vertex v) {
        std::vector<Vertex> verts = subtree_vertices(v);
        Strategy out;
        out.n = n_;
        if (verts.size() <= 1) return out;
        append(out, tour(v, v));
        if (verts.size() == 3) return out;
        Vertex v0 = 2 * v + 1, v1 = 2 * v + 2;
        std::vector<int> wing_a = agents_in(subtree_vertices(v0));
        std::vector<int> wing_b = agents_in(subtree_vertices(v1));
        append(out, cross_rec(v));
        append(out, route_in_subtree(v, positions_of(wing_a), subtree_vertices(v0)));
        append(out, route_in_subtree(v, positions_of(wing_b), subtree_vertices(v1)));
        Strategy left = main_rec(v0);
        Strategy right = main_rec(v1);
        append(out, parallel_compose(left, right));
        return out;
    }

    // all current occupants of the left child's subtree meet all current
    // occupants of the right child's subtree
    Strategy cross_rec(Vertex v) {
        std::vector<Vertex> verts = subtree_vertices(v);
        Vertex v0 = 2 * v + 1, v1 = 2 * v + 2;
        Strategy out;
        out.n = n_;
        if (verts.size() < 3) throw std::logic_error("cross phase on a leaf");
        if (verts.size() == 3) {
            Matching m{{v, v0}};
            out.rounds = {m, m};
            p_.apply_all(out);
            return out;
        }
        append(out, tour(v0, v));
        append(out, tour(v1, v));
        std::vector<Vertex> t00 = subtree_vertices(2 * v0 + 1), t01 = subtree_vertices(2 * v0 + 2);
        std::vector<Vertex> t10 = subtree_vertices(2 * v1 + 1), t11 = subtree_vertices(2 * v1 + 2);
        std::vector<int> p00 = agents_in(t00), p01 = agents_in(t01);
        std::vector<int> p10 = agents_in(t10), p11 = agents_in(t11);

        // swap the outer quadrants across the middle, meet, re-deal so the
        // other two quadrant pairs share a side, meet again
        append(out, route_in_subtree(v, t00, t10));
        append(out, route_in_subtree(v, positions_of(p10), t00));
        {
            Strategy a = cross_rec(v0);
            Strategy b = cross_rec(v1);
            append(out, parallel_compose(a, b));
        }
        append(out, route_in_subtree(v, positions_of(p01), t10));
        append(out, route_in_subtree(v, positions_of(p00), t00));
        append(out, route_in_subtree(v, positions_of(p10), t01));
        append(out, route_in_subtree(v, positions_of(p11), t11));
        {
            Strategy a = cross_rec(v0);
            Strategy b = cross_rec(v1);
            append(out, parallel_compose(a, b));
        }
        return out;
    }

    const Graph& g_;
    int n_;
    Placement p_;
};

}  // namespace

Strategy binary_tree_strategy(int depth) {
    if (depth < 0) throw std::invalid_argument("binary_tree_strategy: negative depth");
    Graph g = generate(BinaryTreeSpec{depth});
    BinTreePlan plan(g, g.vertex_count());
    return plan.run();
}

}  // namespace acqtime
