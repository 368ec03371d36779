#include "acqtime/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acqtime {

namespace {

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

}  // namespace

int bottleneck_bound(const Graph& g, const std::vector<Vertex>& separator) {
    int n = g.vertex_count();
    if (separator.empty()) throw std::invalid_argument("bottleneck_bound: empty separator");
    std::vector<bool> in_sep(n, false);
    int sep_size = 0;
    for (Vertex v : separator) {
        if (v < 0 || v >= n) throw std::invalid_argument("bottleneck_bound: vertex out of range");
        if (!in_sep[v]) {
            in_sep[v] = true;
            ++sep_size;
        }
    }
    if (sep_size == n) throw std::invalid_argument("bottleneck_bound: separator covers all vertices");
    if (auto w = g.disconnected_witness())
        throw std::runtime_error("bottleneck_bound: graph disconnected");

    // components of g with the separator removed
    std::vector<int> comp(n, -1);
    std::vector<long long> comp_size;
    for (Vertex v = 0; v < n; ++v) {
        if (in_sep[v] || comp[v] >= 0) continue;
        int id = static_cast<int>(comp_size.size());
        long long size = 0;
        std::vector<Vertex> stack{v};
        comp[v] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            ++size;
            for (Vertex w : g.neighbors(u)) {
                if (!in_sep[w] && comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        comp_size.push_back(size);
    }
    long long biggest = comp_size.empty() ? 0 : *std::max_element(comp_size.begin(), comp_size.end());

    // initial potential: every agent starts knowing its neighbours, and agents
    // sharing a component outside the separator never need the bottleneck.
    // both relations are symmetric, so summing per vertex counts each pair twice
    long long initial_twice = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (in_sep[v]) {
            initial_twice += g.degree(v);
        } else {
            long long sep_neighbors = 0;
            for (Vertex w : g.neighbors(v))
                if (in_sep[w]) ++sep_neighbors;
            initial_twice += comp_size[comp[v]] - 1 + sep_neighbors;
        }
    }

    // per round, at most |S| agents step out of the separator and each gains at
    // most one component's worth of new companions, and the agents standing on
    // the separator can strike up at most one new meeting per incident edge
    long long per_round = static_cast<long long>(sep_size) * biggest;
    for (Vertex v = 0; v < n; ++v)
        if (in_sep[v]) per_round += g.degree(v);
    if (per_round <= 0) per_round = 1;

    long long need = static_cast<long long>(n) * (n - 1) / 2 - initial_twice / 2;
    if (need <= 0) return 0;
    return static_cast<int>(ceil_div(need, per_round));
}

BoundsReport lower_bounds(const Graph& g, const std::optional<std::vector<Vertex>>& separator) {
    int n = g.vertex_count();
    BoundsReport report;
    if (n <= 1) return report;

    report.diameter_bound = diameter(g) / 2;
    long long pairs = static_cast<long long>(n) * (n - 1) / 2;
    report.edge_bound = static_cast<int>(ceil_div(pairs, static_cast<long long>(g.edge_count())) - 1);
    if (report.edge_bound < 0) report.edge_bound = 0;

    auto consider = [&](const std::vector<Vertex>& s) {
        int value = bottleneck_bound(g, s);
        if (!report.bottleneck_bound || value > *report.bottleneck_bound) {
            report.bottleneck_bound = value;
            report.bottleneck_separator = s;
        }
    };

    if (separator) {
        consider(*separator);
    } else {
        for (Vertex v = 0; v < n; ++v) consider({v});
        std::vector<Vertex> by_degree(n);
        std::iota(by_degree.begin(), by_degree.end(), 0);
        std::stable_sort(by_degree.begin(), by_degree.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        std::vector<Vertex> prefix;
        for (int k = 0; k < std::min(n - 1, 8); ++k) {
            prefix.push_back(by_degree[k]);
            if (prefix.size() >= 2) consider(prefix);
        }
    }

    report.best_lower = std::max({report.diameter_bound, report.edge_bound,
                                  report.bottleneck_bound.value_or(0)});
    return report;
}

}  // namespace acqtime
