#ifndef LPC_GRAPH_HPP
#define LPC_GRAPH_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "lpc/error.hpp"

namespace lpc {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;
using VertexSet = std::vector<VertexId>; // always kept sorted and unique

inline VertexSet sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

inline bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// Undirected simple graph with stable vertex identifiers and contraction
// provenance. Values are immutable once built: every operation below returns
// a new graph, so instances can be shared and forked freely across threads.
//
// origin(v) records which vertices of the graph this value was derived from
// have been merged into v; it is {v} on freshly constructed graphs and grows
// under contraction. Origin sets stay pairwise disjoint.
class Graph {
public:
    Graph() = default;

    explicit Graph(int n) {
        for (VertexId v = 0; v < n; ++v) add_vertex(v);
    }

    static Graph from_edges(int n, const std::vector<Edge>& edges) {
        Graph g(n);
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    void add_vertex(VertexId v) {
        if (adj_.count(v)) return;
        adj_[v] = {};
        origin_[v] = {v};
    }

    void add_edge(VertexId u, VertexId v) {
        if (u == v) fail(ErrorKind::Internal, "self-loop rejected");
        require_vertex(u);
        require_vertex(v);
        if (has_edge(u, v)) return;
        insert_sorted(adj_[u], v);
        insert_sorted(adj_[v], u);
        ++m_;
    }

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }

    bool has_vertex(VertexId v) const { return adj_.count(v) > 0; }

    bool has_edge(VertexId u, VertexId v) const {
        auto it = adj_.find(u);
        if (it == adj_.end()) return false;
        return set_contains(it->second, v);
    }

    const VertexSet& neighbors(VertexId v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
        return it->second;
    }

    int degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

    VertexSet vertices() const {
        VertexSet out;
        out.reserve(adj_.size());
        for (const auto& [v, _] : adj_) out.push_back(v);
        return out;
    }

    std::vector<Edge> edge_list() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (const auto& [v, ns] : adj_)
            for (VertexId w : ns)
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    const VertexSet& origin(VertexId v) const {
        auto it = origin_.find(v);
        if (it == origin_.end()) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
        return it->second;
    }

    void set_origin(VertexId v, VertexSet o) {
        require_vertex(v);
        origin_[v] = std::move(o);
    }

    // Same graph with provenance reset, so that lifting stops here.
    Graph rebased() const {
        Graph g = *this;
        for (auto& [v, o] : g.origin_) o = {v};
        return g;
    }

    // Labeled-graph equality; provenance is not part of the value identity.
    bool operator==(const Graph& other) const {
        return m_ == other.m_ && adj_ == other.adj_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    void require_vertex(VertexId v) const {
        if (!has_vertex(v)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
    }

    static void insert_sorted(VertexSet& s, VertexId v) {
        s.insert(std::upper_bound(s.begin(), s.end(), v), v);
    }

    std::map<VertexId, VertexSet> adj_;
    std::map<VertexId, VertexSet> origin_;
    int m_ = 0;
};

inline VertexSet neighbor_set(const Graph& g, VertexId v) { return g.neighbors(v); }

inline VertexSet closed_neighborhood(const Graph& g, VertexId v) {
    VertexSet s = g.neighbors(v);
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    return s;
}

// Contracts edge uv keeping identifier u: u's adjacency becomes
// N(u) ∪ N(v) minus the pair itself and u's origin absorbs v's.
inline Graph contract_edge(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        fail(ErrorKind::UnknownVertex, "contract_edge endpoint missing");
    if (!g.has_edge(u, v))
        fail(ErrorKind::NotAnEdge, std::to_string(u) + "-" + std::to_string(v));
    Graph out;
    for (VertexId x : g.vertices())
        if (x != v) out.add_vertex(x);
    for (const auto& [a, b] : g.edge_list()) {
        VertexId x = (a == v) ? u : a;
        VertexId y = (b == v) ? u : b;
        if (x != y) out.add_edge(x, y);
    }
    for (VertexId x : out.vertices())
        out.set_origin(x, x == u ? set_union(g.origin(u), g.origin(v)) : g.origin(x));
    return out;
}

// Result of contracting a vertex set component-wise: the quotient graph plus
// the map from old identifiers to their surviving representative.
struct Contraction {
    Graph graph;
    std::map<VertexId, VertexId> to_new;

    VertexId image(VertexId old) const {
        auto it = to_new.find(old);
        return it == to_new.end() ? old : it->second;
    }

    VertexSet image_set(const VertexSet& olds) const {
        VertexSet out;
        out.reserve(olds.size());
        for (VertexId v : olds) out.push_back(image(v));
        return sorted_unique(out);
    }
};

namespace detail {

// Union-find over explicit ids.
class DisjointSets {
public:
    VertexId find(VertexId v) {
        auto it = parent_.find(v);
        if (it == parent_.end()) {
            parent_[v] = v;
            return v;
        }
        if (it->second == v) return v;
        VertexId r = find(it->second);
        parent_[v] = r;
        return r;
    }
    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b); // smaller id becomes the representative
        parent_[b] = a;
    }

private:
    std::map<VertexId, VertexId> parent_;
};

} // namespace detail

// Contracts every edge inside g[s]. Each connected component of g[s] survives
// as its smallest vertex id, which makes the result independent of the order
// in which individual edges would have been contracted.
inline Contraction contract_set_mapped(const Graph& g, const VertexSet& s) {
    for (VertexId v : s)
        if (!g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "contract_set vertex " + std::to_string(v));
    detail::DisjointSets ds;
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v))
            if (w > v && set_contains(s, w)) ds.unite(v, w);

    Contraction out;
    for (VertexId v : g.vertices()) {
        VertexId rep = set_contains(s, v) ? ds.find(v) : v;
        out.to_new[v] = rep;
        out.graph.add_vertex(rep);
    }
    for (const auto& [a, b] : g.edge_list()) {
        VertexId x = out.to_new[a], y = out.to_new[b];
        if (x != y) out.graph.add_edge(x, y);
    }
    std::map<VertexId, VertexSet> merged;
    for (VertexId v : g.vertices()) {
        VertexSet& o = merged[out.to_new[v]];
        o = set_union(o, g.origin(v));
    }
    for (auto& [rep, o] : merged) out.graph.set_origin(rep, std::move(o));
    return out;
}

inline Graph contract_set(const Graph& g, const VertexSet& s) {
    return contract_set_mapped(g, s).graph;
}

// Induced subgraph on `keep`; provenance of surviving vertices is preserved.
inline Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    Graph out;
    for (VertexId v : keep) {
        if (!g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "vertex " + std::to_string(v));
        out.add_vertex(v);
    }
    for (const auto& [a, b] : g.edge_list())
        if (set_contains(keep, a) && set_contains(keep, b)) out.add_edge(a, b);
    for (VertexId v : keep) out.set_origin(v, g.origin(v));
    return out;
}

inline Graph remove_vertices(const Graph& g, const VertexSet& del) {
    return induced_subgraph(g, set_difference(g.vertices(), del));
}

// Components listed with sorted members, ordered by smallest member.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (VertexId start : g.vertices()) {
        if (set_contains(seen, start)) continue;
        VertexSet comp{start};
        std::queue<VertexId> q;
        q.push(start);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : g.neighbors(v)) {
                if (!set_contains(comp, w)) {
                    comp.insert(std::lower_bound(comp.begin(), comp.end(), w), w);
                    q.push(w);
                }
            }
        }
        seen = set_union(seen, comp);
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    if (g.num_vertices() == 0) return false;
    return connected_components(g).size() == 1;
}

inline std::map<VertexId, int> bfs_distances(const Graph& g, VertexId src) {
    std::map<VertexId, int> dist;
    dist[src] = 0;
    std::queue<VertexId> q;
    q.push(src);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v)) {
            if (!dist.count(w)) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

// BFS distance; disconnected pairs report absence.
inline std::optional<int> distance(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "distance endpoint");
    auto d = bfs_distances(g, u);
    auto it = d.find(v);
    if (it == d.end()) return std::nullopt;
    return it->second;
}

// Lexicographically minimal shortest path from u to v as a vertex sequence.
inline std::optional<std::vector<VertexId>> shortest_path(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "shortest_path endpoint");
    auto du = bfs_distances(g, u);
    if (!du.count(v)) return std::nullopt;
    auto dv = bfs_distances(g, v);
    int total = du[v];
    std::vector<VertexId> path{u};
    VertexId cur = u;
    while (cur != v) {
        for (VertexId w : g.neighbors(cur)) { // sorted, so first feasible is minimal
            auto itu = du.find(w), itv = dv.find(w);
            if (itu == du.end() || itv == dv.end()) continue;
            if (itu->second == du[cur] + 1 && itu->second + itv->second == total) {
                path.push_back(w);
                cur = w;
                break;
            }
        }
    }
    return path;
}

} // namespace lpc

#endif
