#ifndef LPC_INDUCED_HPP
#define LPC_INDUCED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/patterns.hpp"

namespace lpc {

inline constexpr int kMaxPatternVertices = 10;

// Injective map pattern-vertex -> host-vertex, listed in pattern-id order.
using Embedding = std::vector<std::pair<VertexId, VertexId>>;

namespace detail {

struct InducedSearch {
    const Graph* host;
    VertexSet hv;                 // host vertices, sorted
    std::vector<VertexId> pv;     // pattern vertices, sorted
    std::vector<std::vector<char>> padj;
    std::vector<int> pdeg;
    std::vector<VertexId> assign; // pattern index -> host vertex
    std::vector<char> used;       // by host index

    bool extend(int i) {
        if (i == static_cast<int>(pv.size())) return true;
        for (size_t h = 0; h < hv.size(); ++h) {
            if (used[h]) continue;
            VertexId cand = hv[h];
            if (host->degree(cand) < pdeg[i]) continue;
            bool ok = true;
            for (int j = 0; j < i && ok; ++j)
                if (host->has_edge(cand, assign[j]) != static_cast<bool>(padj[i][j])) ok = false;
            if (!ok) continue;
            assign[i] = cand;
            used[h] = 1;
            if (extend(i + 1)) return true;
            used[h] = 0;
        }
        return false;
    }
};

} // namespace detail

// Backtracking search for h as an induced subgraph of g (edges and non-edges
// both preserved). Pattern vertices are tried in id order against ascending
// host vertices, so the first hit is the lexicographically first embedding.
inline std::optional<Embedding> contains_induced(const Graph& g, const PatternGraph& h) {
    if (h.num_vertices() > kMaxPatternVertices)
        fail(ErrorKind::PatternTooLarge,
             std::to_string(h.num_vertices()) + " > " + std::to_string(kMaxPatternVertices));
    if (h.num_vertices() > g.num_vertices()) return std::nullopt;

    detail::InducedSearch s;
    s.host = &g;
    s.hv = g.vertices();
    s.pv = h.vertices();
    int k = static_cast<int>(s.pv.size());
    s.padj.assign(k, std::vector<char>(k, 0));
    s.pdeg.assign(k, 0);
    for (int i = 0; i < k; ++i) {
        s.pdeg[i] = h.degree(s.pv[i]);
        for (int j = 0; j < k; ++j) s.padj[i][j] = h.has_edge(s.pv[i], s.pv[j]) ? 1 : 0;
    }
    s.assign.assign(k, 0);
    s.used.assign(s.hv.size(), 0);
    if (!s.extend(0)) return std::nullopt;

    Embedding out;
    for (int i = 0; i < k; ++i) out.emplace_back(s.pv[i], s.assign[i]);
    return out;
}

inline bool is_h_free(const Graph& g, const std::vector<PatternGraph>& hs) {
    for (const auto& h : hs)
        if (contains_induced(g, h)) return false;
    return true;
}

} // namespace lpc

#endif
