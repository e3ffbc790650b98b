#ifndef LPC_INDUCED_PATH_HPP
#define LPC_INDUCED_PATH_HPP

#include <optional>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/induced.hpp"
#include "lpc/patterns.hpp"
#include "lpc/structure.hpp"

namespace lpc {

inline constexpr int kMaxExhaustiveLipVertices = 16;

namespace detail {

struct LipSearch {
    const Graph* g;
    VertexSet vs;
    int cap;                       // max vertices allowed on a path
    std::vector<VertexId> current; // growing induced path
    std::vector<VertexId> best;
    VertexSet used;                // on the path

    void consider() {
        if (current.size() > best.size() ||
            (current.size() == best.size() && current < best)) {
            best = current;
        }
    }

    void extend() {
        consider();
        if (static_cast<int>(current.size()) == cap) return;
        VertexId tip = current.back();
        for (VertexId w : g->neighbors(tip)) {
            if (set_contains(used, w)) continue;
            // w may touch only the tip among path vertices
            bool ok = true;
            for (size_t i = 0; i + 1 < current.size() && ok; ++i)
                if (g->has_edge(w, current[i])) ok = false;
            if (!ok) continue;
            current.push_back(w);
            used.insert(std::lower_bound(used.begin(), used.end(), w), w);
            extend();
            used.erase(std::lower_bound(used.begin(), used.end(), w));
            current.pop_back();
        }
    }
};

} // namespace detail

// Longest induced path as a vertex sequence; exact. With a cap only paths on
// at most `cap` vertices are sought (polynomial for fixed cap); without one
// the search is exhaustive and the host size is limited. Among maximum-length
// paths the lexicographically smallest sequence is returned.
inline std::vector<VertexId> longest_induced_path(const Graph& g, std::optional<int> cap = std::nullopt) {
    if (!cap && g.num_vertices() > kMaxExhaustiveLipVertices)
        fail(ErrorKind::CapTooLargeForExhaustive,
             std::to_string(g.num_vertices()) + " vertices without a cap");
    if (g.num_vertices() == 0) return {};
    detail::LipSearch s;
    s.g = &g;
    s.vs = g.vertices();
    s.cap = cap ? std::max(1, *cap) : g.num_vertices();
    for (VertexId start : s.vs) {
        s.current = {start};
        s.used = {start};
        s.extend();
    }
    // double-check the result really is induced before handing it out
    for (size_t i = 0; i < s.best.size(); ++i)
        for (size_t j = i + 1; j < s.best.size(); ++j) {
            bool adj = g.has_edge(s.best[i], s.best[j]);
            if (adj != (j == i + 1)) fail(ErrorKind::Internal, "induced path check failed");
        }
    return s.best;
}

// Smallest k such that h is an induced subgraph of P_k; for a linear forest
// with t vertices and c components this lands at t + c - 1, but it is
// computed rather than assumed.
inline int smallest_containing_path(const PatternGraph& h) {
    if (!is_linear_forest(h)) fail(ErrorKind::NotLinearForest, "pattern is not a linear forest");
    int t = h.num_vertices();
    int c = static_cast<int>(connected_components(h).size());
    for (int k = t; k <= t + c; ++k)
        if (contains_induced(path_graph(k), h)) return k;
    fail(ErrorKind::Internal, "linear forest not contained in any candidate path");
}

// Longest induced path in an h-free graph for a linear forest h: answers are
// capped at one vertex below the smallest path containing h.
inline std::vector<VertexId> lip_h_free(const Graph& g, const PatternGraph& h) {
    int k = smallest_containing_path(h); // also validates linear-forest-ness
    if (!is_h_free(g, {h})) fail(ErrorKind::NotInClass, "graph is not h-free");
    return longest_induced_path(g, k - 1);
}

} // namespace lpc

#endif
