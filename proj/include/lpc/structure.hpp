#ifndef LPC_STRUCTURE_HPP
#define LPC_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/induced.hpp"
#include "lpc/patterns.hpp"

namespace lpc {

inline Graph complement(const Graph& g) {
    Graph out;
    VertexSet vs = g.vertices();
    for (VertexId v : vs) out.add_vertex(v);
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) out.add_edge(vs[i], vs[j]);
    return out;
}

// Spanning complete bipartite subgraph of a connected P4-free graph: A is the
// vertex set of the complement component containing the smallest id, B the
// rest. Cograph structure guarantees A is complete to B.
inline std::pair<VertexSet, VertexSet> spanning_complete_bipartite(const Graph& g) {
    if (!is_connected(g) || g.num_vertices() < 2)
        fail(ErrorKind::NotConnected, "need a connected graph on >= 2 vertices");
    if (!is_h_free(g, {path_graph(4)})) fail(ErrorKind::NotP4Free, "input contains an induced P4");
    auto comps = connected_components(complement(g));
    VertexSet a = comps.front(); // component of the smallest vertex id
    VertexSet b = set_difference(g.vertices(), a);
    if (b.empty()) fail(ErrorKind::Internal, "complement of a connected cograph must disconnect");
    return {a, b};
}

inline bool is_acyclic(const Graph& g) {
    // A forest has exactly n - c edges.
    return g.num_edges() == g.num_vertices() - static_cast<int>(connected_components(g).size());
}

inline bool is_linear_forest(const Graph& h) {
    if (!is_acyclic(h)) return false;
    for (VertexId v : h.vertices())
        if (h.degree(v) > 2) return false;
    return true;
}

// Length of a shortest cycle; absent on forests. One BFS per start vertex:
// the first non-tree edge closing two branches gives a candidate cycle.
inline std::optional<int> girth(const Graph& g) {
    if (is_acyclic(g)) return std::nullopt;
    int best = g.num_vertices() + 1;
    for (VertexId root : g.vertices()) {
        std::map<VertexId, int> dist;
        std::map<VertexId, VertexId> parent;
        dist[root] = 0;
        parent[root] = root;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.neighbors(v)) {
                if (!dist.count(w)) {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    q.push(w);
                } else if (parent[v] != w && parent[w] != v) {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

inline bool is_bipartite(const Graph& g) {
    std::map<VertexId, int> color;
    for (VertexId start : g.vertices()) {
        if (color.count(start)) continue;
        color[start] = 0;
        std::queue<VertexId> q;
        q.push(start);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.neighbors(v)) {
                if (!color.count(w)) {
                    color[w] = 1 - color[v];
                    q.push(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// Replaces every edge by a path with t internal vertices. Fresh value:
// provenance restarts at identity. New ids follow the sorted edge order.
inline Graph subdivide_all_edges(const Graph& g, int t) {
    if (t < 0) fail(ErrorKind::Internal, "negative subdivision count");
    Graph out;
    for (VertexId v : g.vertices()) out.add_vertex(v);
    VertexId next = g.num_vertices() == 0 ? 0 : g.vertices().back() + 1;
    for (const auto& [u, v] : g.edge_list()) {
        VertexId prev = u;
        for (int i = 0; i < t; ++i) {
            out.add_vertex(next);
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

// Line graph on deterministic edge ids: the i-th edge in sorted order becomes
// vertex i; two edge-vertices are adjacent iff the edges share an endpoint.
inline Graph line_graph(const Graph& g) {
    auto edges = g.edge_list();
    Graph out(static_cast<int>(edges.size()));
    for (size_t i = 0; i < edges.size(); ++i)
        for (size_t j = i + 1; j < edges.size(); ++j) {
            const auto& [a, b] = edges[i];
            const auto& [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d)
                out.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
    return out;
}

} // namespace lpc

#endif
