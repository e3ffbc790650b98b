#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "lpc/matching.hpp"
#include "support/gen.hpp"

using namespace lpc;

namespace {

BipartiteGraph make_bip(int nl, int nr, const std::vector<std::pair<int, int>>& idx_edges) {
    BipartiteGraph b;
    for (int i = 0; i < nl; ++i) b.left.push_back(i);
    for (int j = 0; j < nr; ++j) b.right.push_back(100 + j);
    for (const auto& [u, w] : idx_edges) b.edges.emplace_back(u, 100 + w);
    return b;
}

bool is_valid_matching(const BipartiteGraph& b, const Matching& m) {
    VertexSet used;
    for (const auto& [u, w] : m.edges) {
        bool present = false;
        for (const auto& [x, y] : b.edges) present |= (x == u && y == w);
        if (!present) return false;
        if (set_contains(used, u) || set_contains(used, w)) return false;
        used = set_union(used, {u, w});
    }
    return true;
}

} // namespace

TEST_CASE("K33 has a perfect matching") {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) es.emplace_back(i, j);
    auto b = make_bip(3, 3, es);
    REQUIRE(maximum_matching(b).size() == 3);
}

TEST_CASE("P4 as a bipartite graph matches twice") {
    // a-b-c-d with sides {a,c} and {b,d}
    auto b = make_bip(2, 2, {{0, 0}, {1, 0}, {1, 1}});
    REQUIRE(maximum_matching(b).size() == 2);
}

TEST_CASE("matching is deterministic and valid") {
    auto b = make_bip(4, 4, {{0, 0}, {0, 1}, {1, 0}, {2, 2}, {3, 2}, {3, 3}});
    Matching m1 = maximum_matching(b);
    Matching m2 = maximum_matching(b);
    REQUIRE(m1.edges == m2.edges);
    REQUIRE(is_valid_matching(b, m1));
}

TEST_CASE("no augmenting path remains for the returned matching") {
    std::mt19937 rng(8);
    for (int rep = 0; rep < 300; ++rep) {
        int nl = 1 + static_cast<int>(rng() % 5), nr = 1 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nr; ++j)
                if (rng() % 2) es.emplace_back(i, j);
        auto b = make_bip(nl, nr, es);
        Matching m = maximum_matching(b);
        REQUIRE(is_valid_matching(b, m));
        // maximality: brute force cannot beat it
        REQUIRE(m.size() == gen::brute_force_max_matching(nl, nr, es));
    }
}

TEST_CASE("Koenig: minimum vertex cover size equals the matching size and covers") {
    std::mt19937 rng(9);
    for (int rep = 0; rep < 300; ++rep) {
        int nl = 1 + static_cast<int>(rng() % 6), nr = 1 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nr; ++j)
                if (rng() % 3 == 0) es.emplace_back(i, j);
        auto b = make_bip(nl, nr, es);
        Matching m = maximum_matching(b);
        VertexSet cover = minimum_vertex_cover(b);
        REQUIRE(static_cast<int>(cover.size()) == m.size());
        for (const auto& [u, w] : b.edges)
            REQUIRE((set_contains(cover, u) || set_contains(cover, w)));
    }
}

TEST_CASE("random graphs up to 12 vertices match the exhaustive oracle") {
    std::mt19937 rng(10);
    for (int rep = 0; rep < 500; ++rep) {
        int nl = 1 + static_cast<int>(rng() % 6);
        int nr = std::min(12 - nl, 1 + static_cast<int>(rng() % 6));
        std::vector<std::pair<int, int>> es;
        for (int i = 0; i < nl; ++i)
            for (int j = 0; j < nr; ++j)
                if (rng() % 2) es.emplace_back(i, j);
        auto b = make_bip(nl, nr, es);
        REQUIRE(maximum_matching(b).size() == gen::brute_force_max_matching(nl, nr, es));
    }
}
