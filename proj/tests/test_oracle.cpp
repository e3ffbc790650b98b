#include <catch2/catch_amalgamated.hpp>

#include "lpc/oracle.hpp"
#include "lpc/patterns.hpp"
#include "lpc/structure.hpp"
#include "support/gen.hpp"

using namespace lpc;

TEST_CASE("paths contract to shorter paths, cycles to nothing path-like beyond P2") {
    for (int n = 2; n <= 7; ++n)
        for (int k = 2; k <= n; ++k) REQUIRE(oracle_contracts_to(path_graph(n), path_graph(k)).has_value());
    for (int n = 3; n <= 8; ++n) REQUIRE_FALSE(oracle_contracts_to(cycle_graph(n), path_graph(4)).has_value());
}

TEST_CASE("every returned witness verifies") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 120; ++rep) {
        Graph g = gen::gnp(6, 0.45, rng);
        if (!is_connected(g)) continue;
        for (int k = 2; k <= 5; ++k) {
            auto w = oracle_contracts_to(g, path_graph(k));
            if (w) REQUIRE(verify_witness(g, path_graph(k), *w).ok);
        }
    }
}

TEST_CASE("longest path contraction on basic families") {
    for (int n = 1; n <= 8; ++n) REQUIRE(oracle_longest_path_contraction(path_graph(n)).k == n);
    for (int n = 3; n <= 8; ++n) REQUIRE(oracle_longest_path_contraction(cycle_graph(n)).k == 2);
    REQUIRE(oracle_longest_path_contraction(claw()).k == 3);
    REQUIRE(oracle_longest_path_contraction(complete_graph(5)).k == 2);
}

TEST_CASE("longest path contraction is at least 2 on connected graphs with an edge") {
    std::mt19937 rng(5);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = gen::gnp(6, 0.5, rng);
        if (!is_connected(g) || g.num_edges() == 0) continue;
        auto ans = oracle_longest_path_contraction(g);
        REQUIRE(ans.k >= 2);
        REQUIRE(verify_witness(g, path_graph(ans.k), ans.witness).ok);
    }
}

TEST_CASE("monotonicity: a P_k witness implies P_j witnesses for smaller j") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = gen::gnp(7, 0.35, rng);
        if (!is_connected(g)) continue;
        int k = oracle_longest_path_contraction(g).k;
        for (int j = 2; j <= k; ++j) REQUIRE(oracle_contracts_to(g, path_graph(j)).has_value());
    }
}

TEST_CASE("cycle contraction oracle") {
    for (int n = 3; n <= 8; ++n) {
        auto ans = oracle_longest_cycle_contraction(cycle_graph(n));
        REQUIRE(ans.has_value());
        REQUIRE(ans->k == n);
    }
    REQUIRE_FALSE(oracle_longest_cycle_contraction(path_graph(6)).has_value());
    REQUIRE_FALSE(oracle_longest_cycle_contraction(claw()).has_value());
    // K4 cannot keep four pairwise bags C4-shaped; the best cycle is C3
    auto k4 = oracle_longest_cycle_contraction(complete_graph(4));
    REQUIRE(k4.has_value());
    REQUIRE(k4->k == 3);
}

TEST_CASE("suitable pairs") {
    // P4 end pair
    REQUIRE(oracle_suitable_pair(path_graph(4), 0, 3, 4).has_value());
    // C6: no suitable pair at k=4 for any pair
    Graph c6 = cycle_graph(6);
    for (VertexId u = 0; u < 6; ++u)
        for (VertexId v = u + 1; v < 6; ++v) REQUIRE_FALSE(oracle_suitable_pair(c6, u, v, 4).has_value());
    // H-shaped example: u=0, a=1, b=2, c=3, d=4, v=5
    Graph h = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
    auto w = oracle_suitable_pair(h, 0, 5, 4);
    REQUIRE(w.has_value());
    REQUIRE(w->bags[0] == VertexSet{0});
    REQUIRE(w->bags[1] == VertexSet{1, 2, 3});
    REQUIRE(w->bags[3] == VertexSet{5});
    REQUIRE(verify_witness(h, path_graph(4), *w).ok);
}

TEST_CASE("suitable-pair witnesses pin the end bags") {
    std::mt19937 rng(23);
    for (int rep = 0; rep < 80; ++rep) {
        Graph g = gen::gnp(6, 0.4, rng);
        if (!is_connected(g)) continue;
        for (VertexId u = 0; u < 6; ++u)
            for (VertexId v = u + 1; v < 6; ++v) {
                auto w = oracle_suitable_pair(g, u, v, 4);
                if (!w) continue;
                REQUIRE(w->bags[0] == VertexSet{u});
                REQUIRE(w->bags[3] == VertexSet{v});
                REQUIRE(verify_witness(g, path_graph(4), *w).ok);
            }
    }
}

TEST_CASE("size limits") {
    REQUIRE_THROWS_AS(oracle_contracts_to(complete_graph(13), path_graph(4)), Error);
    OracleLimits big{14};
    REQUIRE(oracle_contracts_to(complete_graph(13), path_graph(2), big).has_value());
}

TEST_CASE("oracle equals a plain surjection filter on tiny instances") {
    // independent route: enumerate all assignments without pruning
    auto slow_contracts = [](const Graph& g, const Graph& h) {
        VertexSet hv = g.vertices();
        VertexSet pv = h.vertices();
        size_t n = hv.size(), k = pv.size();
        if (k > n) return false;
        std::vector<size_t> a(n, 0);
        while (true) {
            WitnessStructure w;
            for (size_t b = 0; b < k; ++b) w.bags[pv[b]] = {};
            for (size_t i = 0; i < n; ++i) w.bags[pv[a[i]]].push_back(hv[i]);
            bool feasible = true;
            for (auto& [x, bag] : w.bags)
                if (bag.empty()) feasible = false;
            if (feasible && verify_witness(g, h, w).ok) return true;
            size_t pos = 0;
            while (pos < n && a[pos] == k - 1) a[pos++] = 0;
            if (pos == n) return false;
            ++a[pos];
        }
    };
    std::mt19937 rng(31);
    std::vector<Graph> patterns{path_graph(3), path_graph(4), cycle_graph(3), cycle_graph(4), claw()};
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = gen::gnp(6, 0.45, rng);
        for (const auto& h : patterns) {
            INFO("rep=" << rep);
            REQUIRE(oracle_contracts_to(g, h).has_value() == slow_contracts(g, h));
        }
    }
}
