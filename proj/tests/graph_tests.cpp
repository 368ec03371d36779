#include <doctest.h>

#include <algorithm>

#include "acqtime/families.hpp"
#include "acqtime/graph.hpp"
#include "acqtime/paths.hpp"

using namespace acqtime;

TEST_SUITE("graph") {

TEST_CASE("from_edges rejects bad input") {
    CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));
    CHECK_THROWS(Graph::from_edges(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph::from_edges(3, {{0, 3}}));
    CHECK_THROWS(Graph::from_edges(-1, {}));
}

TEST_CASE("adjacency basics") {
    Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 2}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(1, 0));
    CHECK(!g.has_edge(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(2) == std::vector<Vertex>{1, 3});
    // edge list comes back sorted regardless of construction order
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("connectivity") {
    Graph path = generate(PathSpec{4});
    CHECK(path.is_connected());
    CHECK(!path.disconnected_witness());

    Graph split = Graph::from_edges(4, {{0, 1}, {2, 3}});
    CHECK(!split.is_connected());
    auto w = split.disconnected_witness();
    REQUIRE(w.has_value());
    CHECK(bfs_distances(split, w->first)[w->second] == -1);
}

TEST_CASE("bfs and diameter") {
    Graph p4 = generate(PathSpec{4});
    CHECK(bfs_distances(p4, 0) == std::vector<int>{0, 1, 2, 3});
    CHECK(diameter(p4) == 3);
    CHECK(diameter(generate(CycleSpec{6})) == 3);
    CHECK(diameter(generate(CompleteSpec{5})) == 1);
    CHECK_THROWS(diameter(Graph::from_edges(3, {{0, 1}})));
}

TEST_CASE("spanning tree visits children in ascending order") {
    Graph c4 = generate(CycleSpec{4});
    Tree t = spanning_tree(c4, 0);
    CHECK(t.root == 0);
    CHECK(t.parent == std::vector<Vertex>{-1, 0, 1, 0});
    CHECK(t.graph.edge_count() == 3);
    CHECK(tree_path(t, 0, 2) == std::vector<Vertex>{0, 1, 2});
    CHECK(tree_path(t, 2, 3) == std::vector<Vertex>{2, 1, 0, 3});
    CHECK(tree_path(t, 2, 2) == std::vector<Vertex>{2});
}

}  // TEST_SUITE("graph")

TEST_SUITE("families") {

TEST_CASE("sizes and edge counts") {
    CHECK(generate(PathSpec{4}).edge_count() == 3);
    CHECK(generate(CycleSpec{5}).edge_count() == 5);
    CHECK(generate(CompleteSpec{5}).edge_count() == 10);

    Graph kbip = generate(CompleteBipartiteSpec{2, 3});
    CHECK(kbip.vertex_count() == 5);
    CHECK(kbip.edge_count() == 6);

    Graph cube = generate(HypercubeSpec{3});
    CHECK(cube.vertex_count() == 8);
    CHECK(cube.edge_count() == 12);

    Graph tree = generate(BinaryTreeSpec{2});
    CHECK(tree.vertex_count() == 7);
    CHECK(tree.edge_count() == 6);

    Graph barbell = generate(BarbellSpec{3});
    CHECK(barbell.vertex_count() == 6);
    CHECK(barbell.edge_count() == 7);

    Graph octo = generate(OctopusSpec{2, 3});
    CHECK(octo.vertex_count() == 7);
    CHECK(octo.edge_count() == 8);
}

TEST_CASE("clique ring joins neighbouring cliques by a matching") {
    Graph ring = generate(CliqueRingSpec{3, 2});
    CHECK(ring.vertex_count() == 6);
    CHECK(ring.edge_count() == 3 * 1 + 3 * 2);
    CHECK_THROWS(generate(CliqueRingSpec{2, 1}));
    CHECK(generate(CliqueRingSpec{2, 2}).is_connected());
}

TEST_CASE("every family generates a connected graph") {
    std::vector<FamilySpec> specs = {
        PathSpec{1},   PathSpec{6},          CycleSpec{3},
        CompleteSpec{1}, CompleteSpec{4},    CompleteBipartiteSpec{1, 1},
        CompleteBipartiteSpec{3, 3},         HypercubeSpec{0},
        HypercubeSpec{3}, BinaryTreeSpec{0}, BinaryTreeSpec{3},
        BarbellSpec{1}, BarbellSpec{4},      CliqueRingSpec{2, 2},
        CliqueRingSpec{5, 3},                OctopusSpec{1, 1},
        OctopusSpec{3, 4},
    };
    for (const auto& spec : specs) {
        Graph g = generate(spec);
        CAPTURE(family_name(spec));
        CHECK(g.is_connected());
    }
}

TEST_CASE("family names") {
    CHECK(family_name(PathSpec{4}) == "path(4)");
    CHECK(family_name(CliqueRingSpec{3, 2}) == "clique_ring(3,2)");
    CHECK(family_name(OctopusSpec{2, 3}) == "octopus(2,3)");
}

TEST_CASE("gnp is seeded and connected") {
    Graph a = generate(GnpSpec{12, 0.4, 9});
    Graph b = generate(GnpSpec{12, 0.4, 9});
    CHECK(a.edges() == b.edges());
    CHECK(a.is_connected());
    Graph c = generate(GnpSpec{12, 0.4, 10});
    CHECK(a.edges() != c.edges());
    CHECK_THROWS(generate(GnpSpec{5, 0.0, 1}));
}

TEST_CASE("detection round trips") {
    CHECK(family_name(*detect_family(generate(PathSpec{5}))) == "path(5)");
    CHECK(family_name(*detect_family(generate(CycleSpec{6}))) == "cycle(6)");
    CHECK(family_name(*detect_family(generate(CompleteSpec{4}))) == "complete(4)");
    CHECK(family_name(*detect_family(generate(CompleteBipartiteSpec{3, 4}))) ==
          "complete_bipartite(3,4)");
    CHECK(family_name(*detect_family(generate(HypercubeSpec{3}))) == "hypercube(3)");
    CHECK(family_name(*detect_family(generate(BinaryTreeSpec{3}))) == "binary_tree(3)");
    CHECK(family_name(*detect_family(generate(BarbellSpec{3}))) == "barbell(3)");
    CHECK(family_name(*detect_family(generate(CliqueRingSpec{4, 3}))) == "clique_ring(4,3)");
    CHECK(family_name(*detect_family(generate(OctopusSpec{3, 3}))) == "octopus(3,3)");
}

TEST_CASE("detection prefers the earlier family on ambiguity") {
    // P_3 == K_{1,2}; the bipartite reading wins over the heap-order tree
    CHECK(family_name(*detect_family(generate(BinaryTreeSpec{1}))) ==
          "complete_bipartite(1,2)");
    CHECK(family_name(*detect_family(generate(CycleSpec{4}))) == "cycle(4)");
    CHECK(family_name(*detect_family(generate(PathSpec{3}))) == "path(3)");
    CHECK(!detect_family(generate(GnpSpec{9, 0.5, 3})).has_value());
}

}  // TEST_SUITE("families")

TEST_SUITE("paths") {

TEST_CASE("is_simple_path") {
    Graph c5 = generate(CycleSpec{5});
    CHECK(is_simple_path(c5, {0, 1, 2, 3, 4}));
    CHECK(is_simple_path(c5, {3, 4, 0}));
    CHECK(!is_simple_path(c5, {0, 2}));
    CHECK(!is_simple_path(c5, {0, 1, 0}));
    CHECK(!is_simple_path(c5, {}));
}

TEST_CASE("long_path recovers a path graph entirely") {
    Graph p8 = generate(PathSpec{8});
    auto found = long_path(p8);
    CHECK(found.size() == 8);
    CHECK(is_simple_path(p8, found));
}

TEST_CASE("long_path beats the bfs baseline on a cycle") {
    Graph c10 = generate(CycleSpec{10});
    auto found = long_path(c10);
    CHECK(is_simple_path(c10, found));
    CHECK(found.size() >= 6);
}

TEST_CASE("long_path is deterministic per seed") {
    Graph g = generate(GnpSpec{14, 0.3, 5});
    CHECK(long_path(g, 4000, 2) == long_path(g, 4000, 2));
}

}  // TEST_SUITE("paths")
