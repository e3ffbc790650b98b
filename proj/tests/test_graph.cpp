#include <catch2/catch_amalgamated.hpp>

#include "lpc/graph.hpp"
#include "lpc/patterns.hpp"

using namespace lpc;

TEST_CASE("contract_edge keeps the first endpoint") {
    // C4 on {0,1,2,3}, contract (0,1) -> C3
    Graph c4 = cycle_graph(4);
    Graph g = contract_edge(c4, 0, 1);
    REQUIRE(g.num_vertices() == 3);
    REQUIRE_FALSE(g == cycle_graph(3)); // ids differ: {0,2,3}
    REQUIRE(g.has_edge(0, 2));
    REQUIRE(g.has_edge(2, 3));
    REQUIRE(g.has_edge(0, 3));
    REQUIRE(g.num_edges() == 3);
    REQUIRE(g.origin(0) == VertexSet{0, 1});
    REQUIRE(g.origin(2) == VertexSet{2});
}

TEST_CASE("contract_edge on a path") {
    // P4 = 0-1-2-3, contract (1,2) -> P3 with origin(1) = {1,2}
    Graph p4 = path_graph(4);
    Graph g = contract_edge(p4, 1, 2);
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 3));
    REQUIRE_FALSE(g.has_edge(0, 3));
    REQUIRE(g.origin(1) == VertexSet{1, 2});
}

TEST_CASE("contracting K4 collapses parallel edges") {
    Graph g = contract_edge(complete_graph(4), 0, 1);
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.num_edges() == 3);
}

TEST_CASE("contract_edge errors") {
    Graph p4 = path_graph(4);
    REQUIRE_THROWS_AS(contract_edge(p4, 0, 2), Error);
    REQUIRE_THROWS_AS(contract_edge(p4, 0, 9), Error);
}

TEST_CASE("contract_set collapses components of the induced set") {
    // P5 = 0-1-2-3-4, s = {1,2,3} -> P3 with middle origin {1,2,3}
    Graph p5 = path_graph(5);
    Graph g = contract_set(p5, {1, 2, 3});
    REQUIRE(g.num_vertices() == 3);
    REQUIRE(g.has_edge(0, 1));
    REQUIRE(g.has_edge(1, 4));
    REQUIRE(g.origin(1) == VertexSet{1, 2, 3});
}

TEST_CASE("contract_set on an independent set is the identity") {
    Graph p5 = path_graph(5);
    Graph g = contract_set(p5, {0, 2, 4});
    REQUIRE(g == p5);
}

TEST_CASE("contract_set on C6 opposite edges gives C4") {
    // C6 on 0..5; edges (1,2) and (4,5) via s = {1,2,4,5}
    Graph c6 = cycle_graph(6);
    Graph g = contract_set(c6, {1, 2, 4, 5});
    REQUIRE(g.num_vertices() == 4);
    REQUIRE(g.num_edges() == 4);
    for (VertexId v : g.vertices()) REQUIRE(g.degree(v) == 2);
}

TEST_CASE("contract_set equals iterated contract_edge on smaller ids") {
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}});
    Graph a = contract_set(g, {0, 1, 2});
    Graph b = contract_edge(contract_edge(g, 0, 1), 0, 2);
    REQUIRE(a == b);
    REQUIRE(a.origin(0) == VertexSet{0, 1, 2});
}

TEST_CASE("contract_set order independence") {
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 6}});
    VertexSet s{0, 1, 2, 3};
    Graph direct = contract_set(g, s);
    // any edge order inside g[s] must give the same labeled quotient
    Graph step = contract_edge(g, 2, 3);
    step = contract_edge(step, 1, 2);
    step = contract_edge(step, 0, 1);
    REQUIRE(direct == step);
}

TEST_CASE("origin sets partition the original vertex set after contractions") {
    Graph g = cycle_graph(6);
    g = contract_edge(g, 0, 1);
    g = contract_set(g, {2, 3, 4});
    VertexSet all;
    size_t total = 0;
    for (VertexId v : g.vertices()) {
        total += g.origin(v).size();
        all = set_union(all, g.origin(v));
    }
    REQUIRE(total == all.size());
    REQUIRE(all == cycle_graph(6).vertices());
}

TEST_CASE("distance and shortest path") {
    Graph p4 = path_graph(4);
    REQUIRE(distance(p4, 0, 3) == 3);
    Graph two = Graph(2);
    REQUIRE_FALSE(distance(two, 0, 1).has_value());

    Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
    auto p = shortest_path(g, 0, 4);
    REQUIRE(p.has_value());
    REQUIRE(*p == std::vector<VertexId>{0, 1, 3, 4}); // lexicographic tie-break
}

TEST_CASE("connected components ordering") {
    Graph g = Graph::from_edges(5, {{1, 3}, {0, 4}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    REQUIRE(comps[0] == VertexSet{0, 4});
    REQUIRE(comps[1] == VertexSet{1, 3});
    REQUIRE(comps[2] == VertexSet{2});
}

TEST_CASE("induced subgraph preserves provenance") {
    Graph g = contract_edge(path_graph(5), 1, 2);
    Graph sub = induced_subgraph(g, {1, 3, 4});
    REQUIRE(sub.origin(1) == VertexSet{1, 2});
    REQUIRE(sub.num_edges() == 2);
}

TEST_CASE("rebased resets provenance") {
    Graph g = contract_edge(path_graph(4), 1, 2).rebased();
    REQUIRE(g.origin(1) == VertexSet{1});
}
