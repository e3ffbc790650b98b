#ifndef LPC_MATCHING_HPP
#define LPC_MATCHING_HPP

#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "lpc/graph.hpp"

namespace lpc {

struct BipartiteGraph {
    VertexSet left;
    VertexSet right;
    std::vector<Edge> edges; // (left vertex, right vertex)
};

struct Matching {
    std::vector<Edge> edges;
    int size() const { return static_cast<int>(edges.size()); }
};

namespace detail {

// Hopcroft-Karp on index-compressed sides. Layers and augmenting paths are
// explored in ascending index order, so the matching is deterministic.
struct HopcroftKarp {
    int nl = 0, nr = 0;
    std::vector<std::vector<int>> adj; // left index -> right indices (sorted)
    std::vector<int> match_l, match_r, dist;
    static constexpr int kInf = std::numeric_limits<int>::max();

    void init(int left, int right) {
        nl = left;
        nr = right;
        adj.assign(nl, {});
        match_l.assign(nl, -1);
        match_r.assign(nr, -1);
        dist.assign(nl, 0);
    }

    bool bfs() {
        std::queue<int> q;
        bool reachable_free = false;
        for (int u = 0; u < nl; ++u) {
            if (match_l[u] == -1) {
                dist[u] = 0;
                q.push(u);
            } else {
                dist[u] = kInf;
            }
        }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                int u2 = match_r[w];
                if (u2 == -1) {
                    reachable_free = true;
                } else if (dist[u2] == kInf) {
                    dist[u2] = dist[u] + 1;
                    q.push(u2);
                }
            }
        }
        return reachable_free;
    }

    bool dfs(int u) {
        for (int w : adj[u]) {
            int u2 = match_r[w];
            if (u2 == -1 || (dist[u2] == dist[u] + 1 && dfs(u2))) {
                match_l[u] = w;
                match_r[w] = u;
                return true;
            }
        }
        dist[u] = kInf;
        return false;
    }

    int run() {
        int size = 0;
        while (bfs())
            for (int u = 0; u < nl; ++u)
                if (match_l[u] == -1 && dfs(u)) ++size;
        return size;
    }

    // Koenig construction from the final layered structure: Z = left vertices
    // reachable from free left vertices by alternating paths; the cover is
    // (L \ Z) on the left plus the right endpoints matched into Z.
    std::pair<std::vector<int>, std::vector<int>> vertex_cover() const {
        std::vector<char> zl(nl, 0), zr(nr, 0);
        std::queue<int> q;
        for (int u = 0; u < nl; ++u)
            if (match_l[u] == -1) {
                zl[u] = 1;
                q.push(u);
            }
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj[u]) {
                if (zr[w]) continue;
                zr[w] = 1;
                int u2 = match_r[w];
                if (u2 != -1 && !zl[u2]) {
                    zl[u2] = 1;
                    q.push(u2);
                }
            }
        }
        std::vector<int> cl, cr;
        for (int u = 0; u < nl; ++u)
            if (!zl[u]) cl.push_back(u);
        for (int w = 0; w < nr; ++w)
            if (zr[w]) cr.push_back(w);
        return {cl, cr};
    }
};

inline HopcroftKarp build_hk(const BipartiteGraph& b) {
    for (VertexId v : b.left)
        if (set_contains(b.right, v)) fail(ErrorKind::Internal, "sides of a bipartite graph overlap");
    std::map<VertexId, int> li, ri;
    for (size_t i = 0; i < b.left.size(); ++i) li[b.left[i]] = static_cast<int>(i);
    for (size_t i = 0; i < b.right.size(); ++i) ri[b.right[i]] = static_cast<int>(i);
    HopcroftKarp hk;
    hk.init(static_cast<int>(b.left.size()), static_cast<int>(b.right.size()));
    for (const auto& [u, w] : b.edges) {
        auto lu = li.find(u);
        auto rw = ri.find(w);
        if (lu == li.end() || rw == ri.end())
            fail(ErrorKind::Internal, "matching edge does not cross the partition");
        hk.adj[lu->second].push_back(rw->second);
    }
    for (auto& ns : hk.adj) ns = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    }(std::move(ns));
    return hk;
}

} // namespace detail

inline Matching maximum_matching(const BipartiteGraph& b) {
    auto hk = detail::build_hk(b);
    hk.run();
    Matching m;
    for (int u = 0; u < hk.nl; ++u)
        if (hk.match_l[u] != -1) m.edges.emplace_back(b.left[u], b.right[hk.match_l[u]]);
    return m;
}

// Minimum vertex cover via Koenig's construction; |cover| = |maximum matching|.
inline VertexSet minimum_vertex_cover(const BipartiteGraph& b) {
    auto hk = detail::build_hk(b);
    hk.run();
    auto [cl, cr] = hk.vertex_cover();
    VertexSet out;
    for (int u : cl) out.push_back(b.left[u]);
    for (int w : cr) out.push_back(b.right[w]);
    return sorted_unique(out);
}

} // namespace lpc

#endif
