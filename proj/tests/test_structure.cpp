#include <catch2/catch_amalgamated.hpp>

#include "lpc/induced.hpp"
#include "lpc/patterns.hpp"
#include "lpc/structure.hpp"
#include "support/gen.hpp"

using namespace lpc;

TEST_CASE("spanning complete bipartite on P4-free graphs") {
    // C4 on 0..3 (cycle order): complement is 2K2
    auto [a, b] = spanning_complete_bipartite(cycle_graph(4));
    REQUIRE(a == VertexSet{0, 2});
    REQUIRE(b == VertexSet{1, 3});

    auto [a2, b2] = spanning_complete_bipartite(path_graph(2));
    REQUIRE(a2 == VertexSet{0});
    REQUIRE(b2 == VertexSet{1});

    // paw: triangle 0,1,2 with pendant 3 on 0
    Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    auto [a3, b3] = spanning_complete_bipartite(paw);
    REQUIRE(a3 == VertexSet{0});
    REQUIRE(b3 == VertexSet{1, 2, 3});
    for (VertexId x : a3)
        for (VertexId y : b3) REQUIRE(paw.has_edge(x, y));
}

TEST_CASE("spanning complete bipartite errors") {
    REQUIRE_THROWS_AS(spanning_complete_bipartite(path_graph(4)), Error); // has induced P4
    REQUIRE_THROWS_AS(spanning_complete_bipartite(Graph(3)), Error);      // disconnected
}

TEST_CASE("property: spanning complete bipartite output is complete across") {
    std::mt19937 rng(7);
    int found = 0;
    for (int rep = 0; rep < 200; ++rep) {
        Graph g = gen::random_class_member(6, {path_graph(4)}, rng);
        if (g.num_vertices() < 2) continue;
        auto [a, b] = spanning_complete_bipartite(g);
        REQUIRE_FALSE(a.empty());
        REQUIRE_FALSE(b.empty());
        for (VertexId x : a)
            for (VertexId y : b) REQUIRE(g.has_edge(x, y));
        ++found;
    }
    REQUIRE(found > 0);
}

TEST_CASE("girth") {
    REQUIRE(girth(cycle_graph(5)) == 5);
    REQUIRE_FALSE(girth(path_graph(6)).has_value()); // acyclic
    REQUIRE(girth(complete_graph(4)) == 3);
    Graph g = cycle_graph(6);
    g.add_edge(0, 3);
    REQUIRE(girth(g) == 4);
}

TEST_CASE("subdividing every edge once doubles the girth") {
    for (int n : {3, 4, 5, 6}) {
        Graph g = cycle_graph(n);
        REQUIRE(girth(subdivide_all_edges(g, 1)) == 2 * n);
    }
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        Graph g = gen::gnp(6, 0.5, rng);
        auto base = girth(g);
        auto doubled = girth(subdivide_all_edges(g, 1));
        if (base)
            REQUIRE(doubled == 2 * *base);
        else
            REQUIRE_FALSE(doubled.has_value());
    }
}

TEST_CASE("line graphs") {
    Graph lk13 = line_graph(claw());
    REQUIRE(lk13.num_vertices() == 3);
    REQUIRE(lk13.num_edges() == 3); // K3
    Graph lp4 = line_graph(path_graph(4));
    REQUIRE(lp4.num_vertices() == 3);
    REQUIRE(lp4.num_edges() == 2); // P3
}

TEST_CASE("linear forest recognition") {
    REQUIRE(is_linear_forest(path_graph(10)));
    REQUIRE(is_linear_forest(linear_forest_graph({1, 2, 3})));
    REQUIRE_FALSE(is_linear_forest(claw()));
    REQUIRE_FALSE(is_linear_forest(cycle_graph(4)));
}

TEST_CASE("bipartiteness") {
    REQUIRE(is_bipartite(cycle_graph(6)));
    REQUIRE_FALSE(is_bipartite(cycle_graph(5)));
    REQUIRE(is_bipartite(path_graph(7)));
}
