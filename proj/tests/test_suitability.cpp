#include <catch2/catch_amalgamated.hpp>

#include "lpc/oracle.hpp"
#include "lpc/patterns.hpp"
#include "lpc/suitability.hpp"
#include "support/gen.hpp"

using namespace lpc;

TEST_CASE("p3 suitability basics") {
    REQUIRE(p3_suitability(path_graph(3), 0, 2));
    REQUIRE(p3_suitability(path_graph(5), 0, 4));
    // C4 opposite pair: removal disconnects the two middles
    REQUIRE_FALSE(p3_suitability(cycle_graph(4), 0, 2));
    REQUIRE_FALSE(p3_suitability(cycle_graph(4), 1, 3));
    REQUIRE_THROWS_AS(p3_suitability(path_graph(3), 0, 1), Error); // adjacent
}

TEST_CASE("C4 has no P3 witness at all, matching the pair check") {
    REQUIRE_FALSE(oracle_contracts_to(cycle_graph(4), path_graph(3)).has_value());
}

TEST_CASE("p3 suitability agrees with the oracle on small connected graphs") {
    for (int n = 3; n <= 6; ++n) {
        for (const Graph& g : gen::connected_graphs_upto_iso(n)) {
            for (VertexId u = 0; u < n; ++u)
                for (VertexId v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v)) continue;
                    bool fast = p3_suitability(g, u, v);
                    bool slow = oracle_suitable_pair(g, u, v, 3).has_value();
                    INFO("n=" << n << " u=" << u << " v=" << v);
                    REQUIRE(fast == slow);
                }
        }
    }
}

TEST_CASE("alpha-constant check on the stated fixtures") {
    // bare P4: T is empty, the empty cores work
    Graph p4 = path_graph(4);
    auto sol = alpha_constant_check(p4, 0, 3, 0);
    REQUIRE(sol.has_value());
    REQUIRE(sol->s_u.empty());
    REQUIRE(sol->s_v.empty());

    // H-shaped graph: u=0,a=1,b=2,c=3,d=4,v=5; alpha=1 puts c on the u side
    Graph h = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
    auto solh = alpha_constant_check(h, 0, 5, 1);
    REQUIRE(solh.has_value());
    REQUIRE(solh->s_u == VertexSet{3});
    REQUIRE(solh->s_v.empty());
    // alpha=0 already works here through the singleton v side
    auto sol0 = alpha_constant_check(h, 0, 5, 0);
    REQUIRE(sol0.has_value());
    REQUIRE(sol0->s_v.empty());

    // C6 distance-3 pair: no witness at any alpha
    for (int alpha = 0; alpha <= 4; ++alpha)
        REQUIRE_FALSE(alpha_constant_check(cycle_graph(6), 0, 3, alpha).has_value());
}

TEST_CASE("alpha-constant solutions are monotone in alpha and verify") {
    std::mt19937 rng(14);
    for (int rep = 0; rep < 150; ++rep) {
        Graph g = gen::gnp(7, 0.4, rng);
        if (!is_connected(g)) continue;
        for (VertexId u = 0; u < 7; ++u)
            for (VertexId v = u + 1; v < 7; ++v) {
                if (g.has_edge(u, v)) continue;
                for (int alpha = 0; alpha <= 3; ++alpha) {
                    auto sol = alpha_constant_check(g, u, v, alpha);
                    if (sol) {
                        REQUIRE(verify_witness(g, path_graph(4), solution_to_witness(g, u, v, *sol)).ok);
                        REQUIRE(alpha_constant_check(g, u, v, alpha + 1).has_value());
                    }
                }
            }
    }
}

TEST_CASE("alpha-constant absence means no small-core witness exists") {
    // with alpha = |T| the check is complete, so compare to the oracle
    std::mt19937 rng(15);
    for (int rep = 0; rep < 100; ++rep) {
        Graph g = gen::gnp(6, 0.45, rng);
        if (!is_connected(g)) continue;
        for (VertexId u = 0; u < 6; ++u)
            for (VertexId v = u + 1; v < 6; ++v) {
                if (g.has_edge(u, v)) continue;
                VertexSet t = t_set(g, u, v);
                bool fast = alpha_constant_check(g, u, v, static_cast<int>(t.size())).has_value();
                bool slow = oracle_suitable_pair(g, u, v, 4).has_value();
                REQUIRE(fast == slow);
            }
    }
}

TEST_CASE("closure folds hanging parts") {
    // bare path: nothing dangles
    Graph p5 = path_graph(5);
    REQUIRE(closure_set(p5, 0, 4, {}).empty());

    // pendant tree hanging off N(u): u=0, n=1, tree 2-3 behind it, v-path 1-4-5
    Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
    VertexSet cl = closure_set(g, 0, 5, {});
    REQUIRE(cl == VertexSet{2, 3});

    // H-shaped graph with s' = {c}: everything else reaches the v side
    Graph h = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}});
    REQUIRE(closure_set(h, 0, 5, {3}).empty());

    REQUIRE_THROWS_AS(closure_set(h, 0, 5, {4}), Error); // N(u) ∪ {4} is not connected
}

TEST_CASE("distance reduction produces d-2 branches with a preserved disjunction") {
    Graph p7 = path_graph(7);
    auto queue = reduce_distance(p7, 0, 6, 4);
    REQUIRE(queue.size() == 4);
    for (const auto& inst : queue) {
        REQUIRE(distance(inst.g, 0, 6) == 5);
        REQUIRE(inst.g.num_vertices() == 6);
    }
    REQUIRE_THROWS_AS(reduce_distance(path_graph(5), 0, 4, 4), Error); // d == k

    // disjunction against the oracle on small graphs
    std::mt19937 rng(16);
    int checked = 0;
    for (int rep = 0; rep < 400 && checked < 60; ++rep) {
        Graph g = gen::gnp(8, 0.25, rng);
        if (!is_connected(g)) continue;
        for (VertexId u = 0; u < 8; ++u)
            for (VertexId v = u + 1; v < 8; ++v) {
                auto d = distance(g, u, v);
                if (!d || *d <= 4) continue;
                bool parent = oracle_suitable_pair(g, u, v, 4).has_value();
                bool any_child = false;
                for (const auto& inst : reduce_distance(g, u, v, 4))
                    any_child |= oracle_suitable_pair(inst.g, u, v, 4).has_value();
                REQUIRE(parent == any_child);
                ++checked;
            }
    }
    REQUIRE(checked > 0);
}
