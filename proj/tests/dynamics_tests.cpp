#include <doctest.h>

#include <sstream>

#include "acqtime/dynamics.hpp"
#include "acqtime/families.hpp"
#include "acqtime/io.hpp"

using namespace acqtime;

namespace {

Strategy make(int n, std::vector<Matching> rounds) {
    Strategy s;
    s.n = n;
    s.rounds = std::move(rounds);
    return s;
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("normalize_matching orients and sorts") {
    Matching m = normalize_matching({{3, 2}, {1, 0}});
    CHECK(m == Matching{{0, 1}, {2, 3}});
}

TEST_CASE("matching_violation") {
    Graph p4 = generate(PathSpec{4});
    CHECK(!matching_violation(p4, {}));
    CHECK(!matching_violation(p4, {{0, 1}, {2, 3}}));
    CHECK(matching_violation(p4, {{0, 2}}).has_value());
    CHECK(matching_violation(p4, {{0, 1}, {1, 2}}).has_value());
    CHECK(matching_violation(p4, {{0, 9}}).has_value());
}

TEST_CASE("pair bits") {
    PairBits bits(4);
    CHECK(bits.total_pairs() == 6);
    CHECK(bits.set(1, 3));
    CHECK(!bits.set(1, 3));
    CHECK(bits.test(1, 3));
    CHECK(!bits.test(0, 2));
    CHECK(bits.count() == 1);
    CHECK(!bits.all());
}

TEST_CASE("state evolution on the path") {
    Graph p4 = generate(PathSpec{4});
    AcquaintanceState st(p4);
    CHECK(st.met_pair(0, 1));
    CHECK(st.met_pair(1, 2));
    CHECK(!st.met_pair(0, 2));
    CHECK(st.vertex_of(2) == 2);

    st.apply_round({{0, 1}, {2, 3}});
    CHECK(st.vertex_of(0) == 1);
    CHECK(st.agent_at(1) == 0);
    CHECK(st.met_pair(0, 3));
    CHECK(!st.all_met());

    st.apply_round({{1, 2}});
    CHECK(st.all_met());
    CHECK(st.rounds_applied() == 2);
    CHECK(st.placement() == std::vector<Vertex>{2, 0, 3, 1});

    CHECK_THROWS(st.apply_round({{0, 2}}));
}

TEST_CASE("simulate reports the acquaintance curve") {
    Graph p4 = generate(PathSpec{4});
    Strategy s = make(4, {{{0, 1}, {2, 3}}, {{1, 2}}});
    SimulationReport rep = simulate(p4, s);
    CHECK(rep.rounds == 2);
    CHECK(rep.all_met);
    CHECK(rep.acquainted_after == std::vector<std::int64_t>{3, 4, 6});
    CHECK(rep.unmet_pairs.empty());
    CHECK(rep.final_placement == std::vector<Vertex>{2, 0, 3, 1});

    SimulationReport partial = simulate(p4, make(4, {{{1, 2}}}));
    CHECK(!partial.all_met);
    CHECK(partial.unmet_pairs == std::vector<std::pair<int, int>>{{0, 3}});
}

TEST_CASE("one round settles the triangle path") {
    Graph p3 = generate(PathSpec{3});
    CHECK(verify_acquaintance(p3, make(3, {{{0, 1}}})));
    CHECK(verify_acquaintance(p3, make(3, {{{1, 2}}})));
    CHECK(!verify_acquaintance(p3, make(3, {})));
}

TEST_CASE("round order matters") {
    Graph p4 = generate(PathSpec{4});
    // the classic regression: the same multiset of rounds in a different
    // order stops being a witness
    Strategy good = make(4, {{{0, 1}}, {{2, 3}}, {{0, 1}}});
    Strategy bad = make(4, {{{0, 1}}, {{0, 1}}, {{2, 3}}});
    CHECK(verify_acquaintance(p4, good));
    CHECK(!verify_acquaintance(p4, bad));
}

TEST_CASE("reverse of a witness is a witness") {
    Graph p4 = generate(PathSpec{4});
    Strategy s = make(4, {{{0, 1}, {2, 3}}, {{1, 2}}});
    Strategy r = reverse(s);
    CHECK(r.rounds == std::vector<Matching>{{{1, 2}}, {{0, 1}, {2, 3}}});
    CHECK(verify_acquaintance(p4, r));
}

TEST_CASE("concat and parallel_compose") {
    Strategy a = make(4, {{{0, 1}}});
    Strategy b = make(4, {{{2, 3}}, {{1, 2}}});
    Strategy ab = concat(a, b);
    CHECK(ab.length() == 3);
    CHECK(ab.rounds[0] == Matching{{0, 1}});
    CHECK(ab.rounds[2] == Matching{{1, 2}});
    CHECK_THROWS(concat(a, make(5, {})));

    Strategy merged = parallel_compose(a, b);
    CHECK(merged.rounds ==
          std::vector<Matching>{{{0, 1}, {2, 3}}, {{1, 2}}});
    CHECK_THROWS(parallel_compose(a, make(4, {{{1, 2}}})));
}

}  // TEST_SUITE("dynamics")

TEST_SUITE("io") {

TEST_CASE("graph format round trip") {
    Graph p4 = generate(PathSpec{4});
    std::ostringstream out;
    write_graph(out, p4);
    CHECK(out.str() == "4 3\n0 1\n1 2\n2 3\n");

    std::istringstream in(out.str());
    Graph back = read_graph(in);
    CHECK(back.edges() == p4.edges());
}

TEST_CASE("graph reader tolerates comments and rejects garbage") {
    std::istringstream in("# a path\n3 2\n0 1\n# middle\n1 2\n");
    Graph g = read_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);

    std::istringstream bad_header("three 2\n");
    CHECK_THROWS(read_graph(bad_header));
    std::istringstream bad_edge("2 1\n1 0\n");
    CHECK_THROWS(read_graph(bad_edge));
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS(read_graph(truncated));
}

TEST_CASE("strategy json round trip keeps metadata") {
    Strategy s;
    s.n = 4;
    s.rounds = {{{0, 1}, {2, 3}}, {{1, 2}}};
    std::ostringstream out;
    write_strategy(out, s, {{"method", "path"}});
    CHECK(out.str().find("\"format_version\"") != std::string::npos);

    std::istringstream in(out.str());
    StrategyFile back = read_strategy(in);
    CHECK(back.strategy.n == 4);
    CHECK(back.strategy.rounds == s.rounds);
    CHECK(back.metadata.at("method") == "path");

    std::ostringstream again;
    write_strategy(again, s, {{"method", "path"}});
    CHECK(again.str() == out.str());
}

TEST_CASE("strategy reader rejects malformed documents") {
    std::istringstream not_json("rounds: nope");
    CHECK_THROWS(read_strategy(not_json));
    std::istringstream bad_pair(R"({"format_version":1,"n":3,"rounds":[[[0]]]})");
    CHECK_THROWS(read_strategy(bad_pair));
}

TEST_CASE("coloring round trip") {
    Coloring c;
    c.k = 2;
    c.color = {0, 1, 0, 1};
    std::ostringstream out;
    write_coloring(out, c);
    std::istringstream in(out.str());
    Coloring back = read_coloring(in);
    CHECK(back.k == 2);
    CHECK(back.color == c.color);

    std::istringstream bad("2 1\n0\n1\n");
    CHECK_THROWS(read_coloring(bad));
}

}  // TEST_SUITE("io")
