#include "acqtime/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "acqtime/families.hpp"
#include "acqtime/paths.hpp"
#include "acqtime/routing.hpp"
#include "internal_util.hpp"

namespace acqtime {
namespace {

using detail::Placement;
using detail::euler_moves;
using detail::relabel_strategy;

// accumulates rounds while tracking the acquaintance state they induce
class Builder {
public:
    explicit Builder(const Graph& g) : st_(g) { out_.n = g.vertex_count(); }

    bool done() const { return st_.all_met(); }
    const AcquaintanceState& state() const { return st_; }

    void push(Matching m) {
        m = normalize_matching(std::move(m));
        st_.apply_round(m);
        out_.rounds.push_back(std::move(m));
    }

    void push_all(const Strategy& s) {
        for (const Matching& m : s.rounds) push(m);
    }

    Strategy take() { return std::move(out_); }

private:
    AcquaintanceState st_;
    Strategy out_;
};

bool agent_met_everyone(const AcquaintanceState& st, int a) {
    for (int o = 0; o < st.graph().vertex_count(); ++o)
        if (!st.met_pair(a, o)) return false;
    return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& verts,
                       std::vector<int>& local) {
    local.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges())
        if (local[u] >= 0 && local[v] >= 0)
            es.push_back({std::min(local[u], local[v]), std::max(local[u], local[v])});
    return Graph::from_edges(static_cast<int>(verts.size()), es);
}

// spanning tree that keeps the given path intact, rooted at its first vertex
Tree tree_through_path(const Graph& g, const std::vector<Vertex>& path) {
    int n = g.vertex_count();
    std::vector<Vertex> parent(n, -2);
    std::vector<Vertex> queue;
    parent[path[0]] = -1;
    for (std::size_t i = 1; i < path.size(); ++i) parent[path[i]] = path[i - 1];
    for (Vertex v : path) queue.push_back(v);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex u = queue[head];
        for (Vertex w : g.neighbors(u)) {
            if (parent[w] != -2) continue;
            parent[w] = u;
            queue.push_back(w);
        }
    }
    std::vector<Edge> es;
    for (Vertex v = 0; v < n; ++v)
        if (parent[v] >= 0) es.push_back({std::min(v, parent[v]), std::max(v, parent[v])});
    Tree t;
    t.graph = Graph::from_edges(n, es);
    t.root = path[0];
    t.parent = std::move(parent);
    return t;
}

std::vector<Matching> path_rounds(int lo, int hi) {
    int m = hi - lo;
    if (m <= 2) return {};
    int h = m / 2;
    RoutingTask task;
    task.tree = spanning_tree(generate(PathSpec{m}), 0);
    for (int i = 0; i < h; ++i) task.sources.push_back(i);
    for (int i = m - h; i < m; ++i) task.targets.push_back(i);
    std::vector<Matching> out;
    for (const Matching& r : route_on_tree(task).rounds) {
        Matching shifted;
        shifted.reserve(r.size());
        for (auto [u, v] : r) shifted.push_back({u + lo, v + lo});
        out.push_back(std::move(shifted));
    }
    auto left = path_rounds(lo, lo + (m - h));
    auto right = path_rounds(lo + (m - h), hi);
    std::size_t len = std::max(left.size(), right.size());
    for (std::size_t t = 0; t < len; ++t) {
        Matching merged;
        if (t < left.size()) merged = std::move(left[t]);
        if (t < right.size())
            merged.insert(merged.end(), right[t].begin(), right[t].end());
        out.push_back(normalize_matching(std::move(merged)));
    }
    return out;
}

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// All occupants of a subtree visit the tree root one after another. Planned
// as a routing problem on the subtree plus one virtual parking slot per
// occupant hanging off the root; dropping the hops into virtual slots leaves
// the visitors queueing at the root itself, and only the move order matters
// for the walkers, so the realized rounds keep the routed behaviour.
Strategy parade_strategy(const Tree& tree, const std::vector<Vertex>& verts, Vertex child,
                         Vertex root, int n) {
    int m = static_cast<int>(verts.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < m; ++i) local[verts[i]] = i;
    std::vector<Edge> es;
    for (Vertex v : verts) {
        Vertex p = tree.parent[v];
        if (p >= 0 && local[p] >= 0)
            es.push_back({std::min(local[v], local[p]), std::max(local[v], local[p])});
    }
    es.push_back({local[child], m});
    for (int j = 0; j < m; ++j) es.push_back({m, m + 1 + j});
    Graph d = Graph::from_edges(2 * m + 1, es);
    RoutingTask task;
    task.tree = spanning_tree(d, m);
    for (int i = 0; i < m; ++i) task.sources.push_back(i);
    for (int j = 0; j < m; ++j) task.targets.push_back(m + 1 + j);
    Strategy out;
    out.n = n;
    for (const Matching& round : route_on_tree(task).rounds) {
        Matching real;
        for (auto [u, v] : round) {
            if (u > m || v > m) continue;
            real.push_back({u == m ? root : verts[u], v == m ? root : verts[v]});
        }
        if (!real.empty()) out.rounds.push_back(normalize_matching(std::move(real)));
    }
    return out;
}

}  // namespace

Strategy dfs_baseline(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("dfs_baseline: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("dfs_baseline: graph must be connected");
    Builder b(g);
    Tree tree = spanning_tree(g, 0);
    std::vector<bool> everywhere(n, true);
    for (int a = 0; a < n && !b.done(); ++a) {
        if (agent_met_everyone(b.state(), a)) continue;
        for (auto [x, y] : euler_moves(tree.graph, everywhere, b.state().vertex_of(a))) {
            b.push({{x, y}});
            if (b.done()) break;
        }
    }
    return b.take();
}

Strategy path_strategy(int n) {
    if (n < 1) throw std::invalid_argument("path_strategy: n must be positive");
    Strategy s;
    s.n = n;
    s.rounds = path_rounds(0, n);
    return s;
}

Strategy hamiltonian_strategy(const Graph& g, const std::vector<Vertex>& ham_path) {
    int n = g.vertex_count();
    if (static_cast<int>(ham_path.size()) != n || n == 0 || !is_simple_path(g, ham_path))
        throw std::invalid_argument("hamiltonian_strategy: not a hamiltonian path of the graph");
    return relabel_strategy(path_strategy(n), ham_path, n);
}

Strategy long_path_strategy(const Graph& g, const std::vector<Vertex>& path) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("long_path_strategy: empty graph");
    if (!g.is_connected())
        throw std::invalid_argument("long_path_strategy: graph must be connected");
    if (path.empty() || !is_simple_path(g, path))
        throw std::invalid_argument("long_path_strategy: invalid path");
    Builder b(g);
    if (b.done()) return b.take();
    int cs = static_cast<int>(path.size()) / 2;
    if (cs == 0) throw std::invalid_argument("long_path_strategy: path too short");
    Tree tree = tree_through_path(g, path);

    auto run_phase = [&](const std::vector<Vertex>& members) {
        int sz = static_cast<int>(members.size());
        RoutingTask task;
        task.tree = tree;
        task.sources = members;
        task.targets.assign(path.begin(), path.begin() + sz);
        Strategy phase = route_on_tree(task);
        std::vector<Vertex> prefix(path.begin(), path.begin() + sz);
        phase = concat(std::move(phase), relabel_strategy(path_strategy(sz), prefix, n));
        b.push_all(phase);
        b.push_all(reverse(phase));
    };

    int classes = (n + cs - 1) / cs;
    if (classes <= 1) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        run_phase(all);
    } else {
        for (int i = 0; i < classes && !b.done(); ++i)
            for (int j = i + 1; j < classes && !b.done(); ++j) {
                std::vector<Vertex> members;
                for (int v = i * cs; v < std::min(n, (i + 1) * cs); ++v) members.push_back(v);
                for (int v = j * cs; v < std::min(n, (j + 1) * cs); ++v) members.push_back(v);
                run_phase(members);
            }
    }
    return b.take();
}

Strategy max_degree_strategy(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("max_degree_strategy: empty graph");
    if (!g.is_connected())
        throw std::invalid_argument("max_degree_strategy: graph must be connected");
    Builder b(g);
    if (b.done()) return b.take();

    Vertex root = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(root)) root = v;
    Tree tree = spanning_tree(g, root);

    std::vector<bool> parked(n, false);
    while (!b.done()) {
        std::vector<std::vector<Vertex>> kids(n);
        for (Vertex v = 0; v < n; ++v)
            if (!parked[v] && tree.parent[v] >= 0) kids[tree.parent[v]].push_back(v);
        const std::vector<Vertex> batch_pos = kids[root];
        if (batch_pos.empty()) throw std::logic_error("max_degree_strategy: phase stalled");

        std::vector<std::vector<Vertex>> sub;
        for (Vertex c : batch_pos) {
            std::vector<Vertex> verts, stack{c};
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                verts.push_back(v);
                for (Vertex w : kids[v]) stack.push_back(w);
            }
            std::sort(verts.begin(), verts.end());
            sub.push_back(std::move(verts));
        }

        // step 1: each batch agent tours its own subtree and returns
        for (std::size_t i = 0; i < sub.size(); ++i) {
            std::vector<bool> allowed(n, false);
            for (Vertex v : sub[i]) allowed[v] = true;
            for (auto [x, y] : euler_moves(tree.graph, allowed, batch_pos[i]))
                b.push({{x, y}});
        }

        // step 2: every subtree parades through the root, then the parade is
        // undone so the next one starts from known positions
        for (std::size_t i = 0; i < sub.size(); ++i) {
            Strategy parade = parade_strategy(tree, sub[i], batch_pos[i], root, n);
            b.push_all(parade);
            b.push_all(reverse(parade));
            if (b.done()) break;
        }
        if (b.done()) break;

        // step 3: park the batch on leaves away from the root's children;
        // children whose subtree is a single vertex can park in place
        std::vector<Vertex> spare;
        for (Vertex v = 0; v < n; ++v) {
            if (parked[v] || v == root) continue;
            if (kids[v].empty() && tree.parent[v] != root) spare.push_back(v);
        }
        std::size_t routed = std::min(spare.size(), batch_pos.size());
        if (routed > 0) {
            std::vector<Edge> es;
            for (Vertex v = 0; v < n; ++v)
                if (!parked[v] && tree.parent[v] >= 0 && !parked[tree.parent[v]])
                    es.push_back({std::min(v, tree.parent[v]), std::max(v, tree.parent[v])});
            Tree residual;
            residual.graph = Graph::from_edges(n, es);
            residual.root = root;
            residual.parent = tree.parent;
            RoutingTask task;
            task.tree = std::move(residual);
            task.sources.assign(batch_pos.begin(), batch_pos.begin() + routed);
            task.targets.assign(spare.begin(), spare.begin() + routed);
            b.push_all(route_on_tree(task));
            for (std::size_t i = 0; i < routed; ++i) parked[spare[i]] = true;
        }
        bool progress = routed > 0;
        for (std::size_t i = routed; i < batch_pos.size(); ++i)
            if (sub[i].size() == 1) {
                parked[batch_pos[i]] = true;
                progress = true;
            }
        if (!progress) throw std::logic_error("max_degree_strategy: no parking progress");
    }
    return b.take();
}

Strategy complete_bipartite_strategy(int r) {
    if (r < 0) throw std::invalid_argument("complete_bipartite_strategy: negative exponent");
    int half = 1 << r;
    int n = 2 * half;
    Placement p(n);
    Strategy s;
    s.n = n;
    for (int i = 1; i <= r; ++i) {
        std::vector<Vertex> from_a, from_b;
        for (Vertex v = 0; v < n; ++v) {
            int a = p.at[v];
            bool want_a = ((a % half) >> (r - i) & 1) == 0;
            bool on_a = v < half;
            if (want_a != on_a) (on_a ? from_a : from_b).push_back(v);
        }
        if (from_a.size() != from_b.size())
            throw std::logic_error("complete_bipartite_strategy: unbalanced round");
        Matching m;
        for (std::size_t t = 0; t < from_a.size(); ++t) m.push_back({from_a[t], from_b[t]});
        s.rounds.push_back(normalize_matching(std::move(m)));
        p.apply(s.rounds.back());
    }
    return s;
}

Strategy clique_ring_strategy(int cliques, int clique_size) {
    int r = cliques, l = clique_size;
    Graph g = generate(CliqueRingSpec{r, l});
    int n = r * l;
    Builder b(g);
    auto id = [l](int block, int j) { return block * l + j; };

    std::vector<int> block_at(r);
    std::iota(block_at.begin(), block_at.end(), 0);
    std::vector<std::vector<bool>> mixed(r, std::vector<bool>(r, false));
    for (int i = 0; i < r; ++i) mixed[i][i] = true;

    // <= 8 rounds acquainting all agents of two adjacent position cliques,
    // with net effect identity
    auto mixer_rounds = [&](int pa, int pb) {
        std::vector<Matching> seq;
        int h = l / 2;
        if (h == 0) return seq;  // singleton blocks are acquainted by adjacency
        Matching rung, intra;
        for (int j = 0; j < h; ++j) rung.push_back({id(pa, j), id(pb, j)});
        for (int j = 0; j < h; ++j) intra.push_back({id(pb, j), id(pb, j + h)});
        seq = {rung, rung, intra, rung};
        if (l % 2 == 1) {
            Matching last{{id(pa, l - 1), id(pb, l - 1)}};
            seq.push_back(last);
            seq.push_back(last);
        }
        seq.push_back(rung);
        seq.push_back(intra);
        return seq;
    };

    std::set<std::pair<int, int>> ring_pairs;
    for (int i = 0; i < r; ++i) {
        int jn = (i + 1) % r;
        ring_pairs.insert({std::min(i, jn), std::max(i, jn)});
    }

    auto run_mixing = [&]() {
        while (!b.done()) {
            std::vector<std::pair<int, int>> todo;
            for (auto [x, y] : ring_pairs)
                if (!mixed[block_at[x]][block_at[y]]) todo.push_back({x, y});
            if (todo.empty()) break;
            std::vector<bool> busy(r, false);
            std::vector<std::vector<Matching>> batch;
            for (auto [x, y] : todo) {
                if (busy[x] || busy[y]) continue;
                busy[x] = busy[y] = true;
                batch.push_back(mixer_rounds(x, y));
                mixed[block_at[x]][block_at[y]] = mixed[block_at[y]][block_at[x]] = true;
            }
            std::size_t len = 0;
            for (const auto& rounds : batch) len = std::max(len, rounds.size());
            for (std::size_t t = 0; t < len; ++t) {
                Matching merged;
                for (const auto& rounds : batch)
                    if (t < rounds.size())
                        merged.insert(merged.end(), rounds[t].begin(), rounds[t].end());
                b.push(std::move(merged));
            }
        }
    };

    run_mixing();
    if (r > 2) {
        for (const Matching& bm : path_strategy(r).rounds) {
            if (b.done()) break;
            Matching round;
            for (auto [x, y] : bm)
                for (int j = 0; j < l; ++j) round.push_back({id(x, j), id(y, j)});
            b.push(std::move(round));
            for (auto [x, y] : bm) std::swap(block_at[x], block_at[y]);
            run_mixing();
        }
    }
    if (!b.done()) throw std::logic_error("clique_ring_strategy: schedule incomplete");
    return b.take();
}

Strategy octopus_strategy(int cliques, int clique_size, OctopusMode mode) {
    int r = cliques, l = clique_size;
    Graph g = generate(OctopusSpec{r, l});
    int n = r * l + 1;
    Vertex center = r * l;
    Builder b(g);

    if (mode == OctopusMode::pairs) {
        for (int i = 0; i < r && !b.done(); ++i)
            for (int j = i + 1; j < r && !b.done(); ++j) {
                std::vector<Vertex> verts;
                for (int t = 0; t < l; ++t) verts.push_back(i * l + t);
                verts.push_back(center);
                for (int t = 0; t < l; ++t) verts.push_back(j * l + t);
                std::vector<int> local;
                Graph sub = induced_subgraph(g, verts, local);
                std::vector<Vertex> ham;
                for (int t = l - 1; t >= 0; --t) ham.push_back(local[i * l + t]);
                ham.push_back(local[center]);
                for (int t = 0; t < l; ++t) ham.push_back(local[j * l + t]);
                Strategy phase = relabel_strategy(hamiltonian_strategy(sub, ham), verts, n);
                b.push_all(phase);
                b.push_all(reverse(phase));
            }
        return b.take();
    }

    // center mode: two reflections rotate every clique by one in two rounds
    Matching refl1, refl2;
    for (int c = 0; c < r; ++c) {
        for (int k = 1; k < l - k; ++k) refl1.push_back({c * l + k, c * l + (l - k)});
        for (int k = 0; k < l; ++k) {
            int q = ((1 - k) % l + l) % l;
            if (k < q) refl2.push_back({c * l + k, c * l + q});
        }
    }

    for (int a = 0; a < n && !b.done(); ++a) {
        if (agent_met_everyone(b.state(), a)) continue;
        Strategy phase;
        phase.n = n;
        if (a != center) {
            Vertex conn = (a / l) * l;
            if (a != conn) phase.rounds.push_back({{conn, a}});
            phase.rounds.push_back({{conn, center}});
        }
        for (int s = 0; s < l; ++s) {
            if (!refl1.empty()) phase.rounds.push_back(refl1);
            if (!refl2.empty()) phase.rounds.push_back(refl2);
        }
        b.push_all(phase);
        b.push_all(reverse(phase));
    }
    return b.take();
}

Strategy ac_upper_general(const Graph& g, int path_effort, std::uint64_t path_seed) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("ac_upper_general: empty graph");
    if (!g.is_connected())
        throw std::invalid_argument("ac_upper_general: graph must be connected");
    if (n <= 2) return Strategy{n, {}};
    int k = 1;
    while (true) {
        long long p = 1;
        bool over = false;
        for (int e = 0; e < k + 1; ++e) {
            p *= k + 1;
            if (p > n) {
                over = true;
                break;
            }
        }
        if (over) break;
        ++k;
    }
    auto path = long_path(g, path_effort, path_seed);
    if (static_cast<int>(path.size()) - 1 >= k) return long_path_strategy(g, path);
    return max_degree_strategy(g);
}

BestResult best_strategy(const Graph& g, int path_effort, std::uint64_t path_seed) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("best_strategy: empty graph");
    if (!g.is_connected()) throw std::invalid_argument("best_strategy: graph must be connected");

    std::vector<BestResult> cands;
    auto add = [&](std::string name, Strategy s) {
        if (s.n == n && verify_acquaintance(g, s))
            cands.push_back({std::move(s), std::move(name)});
    };

    if (auto fam = detect_family(g)) {
        std::visit(
            overloaded{
                [&](const PathSpec& f) { add("path", path_strategy(f.n)); },
                [&](const CycleSpec& f) {
                    std::vector<Vertex> hp(f.n);
                    std::iota(hp.begin(), hp.end(), 0);
                    add("hamiltonian", hamiltonian_strategy(g, hp));
                },
                [&](const CompleteSpec&) { add("trivial", Strategy{n, {}}); },
                [&](const CompleteBipartiteSpec& f) {
                    if (f.a == f.b && std::has_single_bit(static_cast<unsigned>(f.a)))
                        add("bipartite_doubling",
                            complete_bipartite_strategy(std::countr_zero(static_cast<unsigned>(f.a))));
                },
                [&](const HypercubeSpec& f) {
                    std::vector<Vertex> hp;
                    for (int i = 0; i < (1 << f.dim); ++i) hp.push_back(i ^ (i >> 1));
                    add("hamiltonian", hamiltonian_strategy(g, hp));
                },
                [&](const BinaryTreeSpec& f) { add("binary_tree", binary_tree_strategy(f.depth)); },
                [&](const BarbellSpec& f) {
                    std::vector<Vertex> hp;
                    for (int v = f.clique_size - 1; v >= 0; --v) hp.push_back(v);
                    for (int v = f.clique_size; v < 2 * f.clique_size; ++v) hp.push_back(v);
                    add("hamiltonian", hamiltonian_strategy(g, hp));
                },
                [&](const CliqueRingSpec& f) {
                    add("clique_ring", clique_ring_strategy(f.cliques, f.clique_size));
                },
                [&](const OctopusSpec& f) {
                    add("octopus_pairs", octopus_strategy(f.cliques, f.clique_size, OctopusMode::pairs));
                    add("octopus_center",
                        octopus_strategy(f.cliques, f.clique_size, OctopusMode::center));
                },
                [&](const GnpSpec&) {},
            },
            *fam);
    }

    if (n >= 2) {
        auto lp = long_path(g, path_effort, path_seed);
        if (static_cast<int>(lp.size()) == n) add("hamiltonian", hamiltonian_strategy(g, lp));
    }
    add("general", ac_upper_general(g, path_effort, path_seed));
    if (n <= 256 || cands.empty()) add("dfs_baseline", dfs_baseline(g));

    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].strategy.length() < cands[best].strategy.length()) best = i;
    return std::move(cands[best]);
}

}  // namespace acqtime
