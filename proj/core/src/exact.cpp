#include "acqtime/exact.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace acqtime {
namespace {

void enumerate_rec(const std::vector<Edge>& edges, std::size_t from, unsigned used,
                   Matching& cur, std::vector<Matching>& out) {
    for (std::size_t i = from; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (used & (1u << u) || used & (1u << v)) continue;
        cur.push_back(edges[i]);
        out.push_back(cur);
        enumerate_rec(edges, i + 1, used | (1u << u) | (1u << v), cur, out);
        cur.pop_back();
    }
}

struct StateKey {
    std::uint64_t placement;
    std::uint64_t met;
    bool operator==(const StateKey&) const = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const {
        std::uint64_t x = k.placement * 0x9e3779b97f4a7c15ULL ^ k.met;
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 27;
        return static_cast<std::size_t>(x * 0x94d049bb133111ebULL);
    }
};

class Search {
public:
    Search(const Graph& g, const std::vector<Matching>& matchings)
        : g_(g), matchings_(matchings), n_(g.vertex_count()) {
        for (int v = 0; v < n_; ++v) at_[v] = static_cast<std::int8_t>(v);
        full_ = (n_ * (n_ - 1) / 2 == 64)
                    ? ~0ULL
                    : (1ULL << (n_ * (n_ - 1) / 2)) - 1;
        init_met_ = sweep(0);
    }

    std::uint64_t initial_met() const { return init_met_; }
    std::uint64_t full() const { return full_; }

    bool run(int depth, std::vector<int>& chosen) {
        visited_.clear();
        chosen.clear();
        return dfs(init_met_, depth, chosen);
    }

private:
    int pair_bit(int a, int b) const {
        if (a > b) std::swap(a, b);
        return a * n_ - a * (a + 1) / 2 + (b - a - 1);
    }

    std::uint64_t sweep(std::uint64_t met) const {
        for (auto [u, v] : g_.edges()) met |= 1ULL << pair_bit(at_[u], at_[v]);
        return met;
    }

    std::uint64_t encode_placement() const {
        std::uint64_t x = 0;
        for (int v = 0; v < n_; ++v) x |= static_cast<std::uint64_t>(at_[v]) << (4 * v);
        return x;
    }

    bool dfs(std::uint64_t met, int remaining, std::vector<int>& chosen) {
        if (met == full_) return true;
        if (remaining == 0) return false;
        int unmet = n_ * (n_ - 1) / 2 - std::popcount(met);
        if (unmet > static_cast<int>(g_.edge_count()) * remaining) return false;
        StateKey key{encode_placement(), met};
        if (auto it = visited_.find(key); it != visited_.end() && it->second >= remaining)
            return false;
        for (std::size_t mi = 0; mi < matchings_.size(); ++mi) {
            apply(matchings_[mi]);
            std::uint64_t next = sweep(met);
            chosen.push_back(static_cast<int>(mi));
            if (dfs(next, remaining - 1, chosen)) return true;
            chosen.pop_back();
            apply(matchings_[mi]);
        }
        auto& slot = visited_[key];
        slot = std::max(slot, remaining);
        return false;
    }

    void apply(const Matching& m) {
        for (auto [u, v] : m) std::swap(at_[u], at_[v]);
    }

    const Graph& g_;
    const std::vector<Matching>& matchings_;
    int n_;
    std::array<std::int8_t, 16> at_{};
    std::uint64_t full_ = 0;
    std::uint64_t init_met_ = 0;
    std::unordered_map<StateKey, int, StateHash> visited_;
};

}  // namespace

std::vector<Matching> enumerate_matchings(const Graph& g) {
    if (g.vertex_count() > 32)
        throw std::invalid_argument("enumerate_matchings: graph too large");
    std::vector<Matching> out;
    Matching cur;
    enumerate_rec(g.edges(), 0, 0, cur, out);
    return out;
}

ExactResult exact_ac(const Graph& g, int max_rounds, int vertex_cap) {
    int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("exact_ac: empty graph");
    if (n > vertex_cap)
        throw std::invalid_argument("exact_ac: " + std::to_string(n) +
                                    " vertices exceed the cap of " + std::to_string(vertex_cap));
    if (n > 10) throw std::invalid_argument("exact_ac: vertex cap above the supported 10");
    if (!g.is_connected()) throw std::invalid_argument("exact_ac: graph must be connected");

    auto matchings = enumerate_matchings(g);
    Search search(g, matchings);

    ExactResult res;
    if (search.initial_met() == search.full()) {
        res.value = 0;
        res.witness.n = n;
        return res;
    }
    std::vector<int> chosen;
    for (int depth = 1; depth <= max_rounds; ++depth) {
        if (search.run(depth, chosen)) {
            res.value = depth;
            res.witness.n = n;
            for (int mi : chosen) res.witness.rounds.push_back(matchings[mi]);
            return res;
        }
    }
    res.exceeded = true;
    return res;
}

}  // namespace acqtime
