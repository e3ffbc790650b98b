#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lpc/io.hpp"
#include "lpc/patterns.hpp"
#include "support/gen.hpp"

using namespace lpc;

TEST_CASE("graph text round trip is bit-exact") {
    std::mt19937 rng(3);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = gen::gnp(7, 0.4, rng);
        std::string text = write_graph_string(g);
        Graph back = read_graph_string(text);
        REQUIRE(back == g);
        REQUIRE(write_graph_string(back) == text);
    }
}

TEST_CASE("comments and blank lines are skipped") {
    std::string text = "# a path\n\n4 3\n0 1\n# middle\n1 2\n2 3\n";
    Graph g = read_graph_string(text);
    REQUIRE(g == path_graph(4));
}

TEST_CASE("parse errors carry the input-error kind") {
    auto expect_parse_error = [](const std::string& text) {
        try {
            read_graph_string(text);
            FAIL("expected a parse error");
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::ParseError);
            REQUIRE(e.is_input_error());
        }
    };
    expect_parse_error("");
    expect_parse_error("3 1\n0 3\n");   // out of range
    expect_parse_error("3 1\n1 1\n");   // self loop
    expect_parse_error("3 2\n0 1\n0 1\n"); // duplicate
    expect_parse_error("3 2\n0 1\n");   // truncated
}

TEST_CASE("writer renumbers sparse ids densely") {
    Graph g = contract_edge(path_graph(5), 1, 2); // ids {0,1,3,4}
    Graph back = read_graph_string(write_graph_string(g));
    REQUIRE(back == path_graph(4));
}

TEST_CASE("hypergraph round trip") {
    std::string text = "3 2\n2 0 1\n3 0 1 2\n";
    std::istringstream in(text);
    Hypergraph h = read_hypergraph(in);
    REQUIRE(h.m == 3);
    REQUIRE(h.hyperedges.size() == 2);
    REQUIRE(h.hyperedges[0] == VertexSet{0, 1});
    std::ostringstream out;
    write_hypergraph(out, h);
    REQUIRE(out.str() == text);
}

TEST_CASE("witness JSON round trip") {
    WitnessStructure w;
    w.bags[0] = {0};
    w.bags[1] = {1, 2};
    w.bags[2] = {3, 4};
    w.bags[3] = {5};
    nlohmann::json j = witness_to_json("P4", w);
    REQUIRE(j["pattern"] == "P4");
    REQUIRE(j["bags"].size() == 4);
    NamedWitness back = witness_from_json(j);
    REQUIRE(back.pattern_name == "P4");
    REQUIRE(back.witness.bags == w.bags);

    nlohmann::json bad = {{"pattern", "P3"}, {"bags", {{0}, {1}}}};
    REQUIRE_THROWS_AS(witness_from_json(bad), Error); // bag count mismatch
}

TEST_CASE("pattern names parse") {
    REQUIRE(pattern_by_name("P4") == path_graph(4));
    REQUIRE(pattern_by_name("C5") == cycle_graph(5));
    REQUIRE_THROWS_AS(pattern_by_name("Q3"), Error);
    REQUIRE_THROWS_AS(pattern_by_name("P0"), Error);
}
