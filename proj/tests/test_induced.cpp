#include <catch2/catch_amalgamated.hpp>

#include "lpc/induced.hpp"
#include "lpc/patterns.hpp"
#include "support/gen.hpp"

using namespace lpc;

namespace {

// independent all-subsets oracle for induced containment
bool naive_contains(const Graph& g, const Graph& h) {
    VertexSet hv = g.vertices();
    std::vector<VertexId> pv = h.vertices();
    size_t k = pv.size();
    if (k > hv.size()) return false;
    std::vector<int> idx(k);
    std::vector<VertexId> pick(k);
    auto rec = [&](auto&& self, size_t i, size_t from) -> bool {
        if (i == k) {
            // try all bijections of the chosen set
            std::vector<VertexId> perm = pick;
            std::sort(perm.begin(), perm.end());
            do {
                bool ok = true;
                for (size_t a = 0; a < k && ok; ++a)
                    for (size_t b = a + 1; b < k && ok; ++b)
                        if (g.has_edge(perm[a], perm[b]) != h.has_edge(pv[a], pv[b])) ok = false;
                if (ok) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (size_t j = from; j < hv.size(); ++j) {
            pick[i] = hv[j];
            if (self(self, i + 1, j + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace

TEST_CASE("P4 inside C5, claw identity, C6 misses P2+P4") {
    REQUIRE(contains_induced(cycle_graph(5), path_graph(4)).has_value());
    REQUIRE(contains_induced(claw(), claw()).has_value());
    REQUIRE_FALSE(contains_induced(cycle_graph(6), p2_plus_p4()).has_value());
}

TEST_CASE("embedding preserves edges and non-edges and is lexicographically first") {
    Graph g = cycle_graph(5);
    auto emb = contains_induced(g, path_graph(4));
    REQUIRE(emb.has_value());
    for (size_t i = 0; i < emb->size(); ++i)
        for (size_t j = i + 1; j < emb->size(); ++j) {
            bool pe = path_graph(4).has_edge((*emb)[i].first, (*emb)[j].first);
            bool ge = g.has_edge((*emb)[i].second, (*emb)[j].second);
            REQUIRE(pe == ge);
        }
    // first host choice for pattern vertex 0 must be the smallest workable id
    REQUIRE((*emb)[0].second == 0);
}

TEST_CASE("is_h_free over pattern lists") {
    REQUIRE_FALSE(is_h_free(cycle_graph(6), {cycle_graph(6)}));
    // paw = triangle 0,1,2 plus pendant 3 on 0: split, so (2P2,C4,C5)-free
    Graph paw = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
    REQUIRE(is_h_free(paw, {linear_forest_graph({2, 2}), cycle_graph(4), cycle_graph(5)}));
}

TEST_CASE("pattern size cap") {
    REQUIRE_THROWS_AS(contains_induced(complete_graph(12), path_graph(11)), Error);
}

TEST_CASE("agreement with the all-subsets oracle on small graphs") {
    std::vector<Graph> patterns{path_graph(4), p2_plus_p4(), claw(), cycle_graph(4),
                                p1_plus_p2_plus_p3(), linear_forest_graph({2, 2})};
    std::mt19937 rng(12345);
    for (int n = 1; n <= 8; ++n) {
        for (int rep = 0; rep < 40; ++rep) {
            Graph g = gen::gnp(n, 0.4, rng);
            for (const auto& h : patterns) {
                bool fast = contains_induced(g, h).has_value();
                bool slow = naive_contains(g, h);
                INFO("n=" << n << " rep=" << rep);
                REQUIRE(fast == slow);
            }
        }
    }
}
