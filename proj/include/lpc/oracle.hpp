#ifndef LPC_ORACLE_HPP
#define LPC_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/patterns.hpp"
#include "lpc/witness.hpp"

namespace lpc {

struct OracleLimits {
    // Hosts above this size are rejected for patterns on >= 3 vertices;
    // the enumeration is exponential and meant for cross-validation only.
    int max_host_vertices = 12;
};

namespace detail {

// Assigns host vertices (in id order) to pattern bags, pruning on adjacency
// between committed vertices and on bag-count feasibility. The first complete
// assignment that verifies is the lexicographically first witness.
struct WitnessEnumerator {
    int n = 0, k = 0;
    std::vector<uint64_t> host_adj;          // host index -> neighbor mask
    std::vector<std::vector<char>> bag_adj;  // pattern index adjacency (incl. diagonal)
    std::vector<uint64_t> allowed;           // host index -> allowed bag mask
    std::vector<int> assign;                 // host index -> bag index
    std::vector<uint64_t> members;           // bag index -> member mask
    int empty_bags = 0;

    bool bag_connected(uint64_t mask) const {
        if (mask == 0) return false;
        uint64_t seen = mask & (~mask + 1); // lowest bit
        while (true) {
            uint64_t grow = seen;
            uint64_t m = seen;
            while (m) {
                int i = __builtin_ctzll(m);
                m &= m - 1;
                grow |= host_adj[i] & mask;
            }
            if (grow == seen) break;
            seen = grow;
        }
        return seen == mask;
    }

    bool leaf_ok() const {
        for (int b = 0; b < k; ++b)
            if (!bag_connected(members[b])) return false;
        // every pattern edge must be realized by some host edge
        for (int b = 0; b < k; ++b)
            for (int c = b + 1; c < k; ++c) {
                if (!bag_adj[b][c]) continue;
                bool hit = false;
                uint64_t m = members[b];
                while (m && !hit) {
                    int i = __builtin_ctzll(m);
                    m &= m - 1;
                    if (host_adj[i] & members[c]) hit = true;
                }
                if (!hit) return false;
            }
        return true;
    }

    bool search(int i) {
        if (i == n) return empty_bags == 0 && leaf_ok();
        if (n - i < empty_bags) return false;
        for (int b = 0; b < k; ++b) {
            if (!(allowed[i] >> b & 1)) continue;
            // committed adjacency must stay compatible with the pattern
            uint64_t nbrs = host_adj[i] & ((i == 0) ? 0ULL : ((1ULL << i) - 1));
            bool ok = true;
            uint64_t m = nbrs;
            while (m && ok) {
                int j = __builtin_ctzll(m);
                m &= m - 1;
                if (!bag_adj[b][assign[j]]) ok = false;
            }
            if (!ok) continue;
            bool was_empty = members[b] == 0;
            members[b] |= 1ULL << i;
            if (was_empty) --empty_bags;
            assign[i] = b;
            if (search(i + 1)) return true;
            members[b] &= ~(1ULL << i);
            if (was_empty) ++empty_bags;
        }
        return false;
    }
};

inline std::optional<WitnessStructure> enumerate_witness(const Graph& g, const PatternGraph& h,
                                                         const std::vector<uint64_t>* allowed_override) {
    VertexSet hv = g.vertices();
    VertexSet pv = h.vertices();
    int n = static_cast<int>(hv.size());
    int k = static_cast<int>(pv.size());
    if (n > 63) fail(ErrorKind::TooLarge, "oracle host above 63 vertices");
    if (k > 63) fail(ErrorKind::TooLarge, "oracle pattern above 63 vertices");
    if (n < k) return std::nullopt;

    WitnessEnumerator e;
    e.n = n;
    e.k = k;
    e.host_adj.assign(n, 0);
    std::map<VertexId, int> hidx;
    for (int i = 0; i < n; ++i) hidx[hv[i]] = i;
    for (int i = 0; i < n; ++i)
        for (VertexId w : g.neighbors(hv[i])) e.host_adj[i] |= 1ULL << hidx[w];
    e.bag_adj.assign(k, std::vector<char>(k, 0));
    for (int b = 0; b < k; ++b) {
        e.bag_adj[b][b] = 1; // same bag is always fine
        for (int c = 0; c < k; ++c)
            if (h.has_edge(pv[b], pv[c])) e.bag_adj[b][c] = 1;
    }
    e.allowed.assign(n, (k == 64) ? ~0ULL : ((1ULL << k) - 1));
    if (allowed_override) e.allowed = *allowed_override;
    e.assign.assign(n, -1);
    e.members.assign(k, 0);
    e.empty_bags = k;
    if (!e.search(0)) return std::nullopt;

    WitnessStructure w;
    for (int b = 0; b < k; ++b) {
        VertexSet bag;
        uint64_t m = e.members[b];
        while (m) {
            int i = __builtin_ctzll(m);
            m &= m - 1;
            bag.push_back(hv[i]);
        }
        w.bags[pv[b]] = sorted_unique(bag);
    }
    return w;
}

} // namespace detail

// Ground-truth check: does g contract to h? Exhaustive over bag assignments,
// deterministic (lexicographically first witness in host-id order).
inline std::optional<WitnessStructure> oracle_contracts_to(const Graph& g, const PatternGraph& h,
                                                           const OracleLimits& limits = {}) {
    if (h.num_vertices() >= 3 && g.num_vertices() > limits.max_host_vertices)
        fail(ErrorKind::InstanceTooLarge,
             std::to_string(g.num_vertices()) + " host vertices, limit " +
                 std::to_string(limits.max_host_vertices));
    return detail::enumerate_witness(g, h, nullptr);
}

struct OracleAnswer {
    int k = 0;
    WitnessStructure witness;
};

// Maximum k with a P_k-witness, searched downward from |V(g)|.
inline OracleAnswer oracle_longest_path_contraction(const Graph& g, const OracleLimits& limits = {}) {
    if (!is_connected(g)) fail(ErrorKind::NotConnected, "oracle needs a connected graph");
    if (g.num_vertices() > limits.max_host_vertices)
        fail(ErrorKind::InstanceTooLarge, std::to_string(g.num_vertices()) + " host vertices");
    for (int k = g.num_vertices(); k >= 1; --k) {
        auto w = detail::enumerate_witness(g, path_graph(k), nullptr);
        if (w) return {k, *w};
    }
    fail(ErrorKind::Internal, "a connected graph contracts to P1");
}

// Longest cycle the graph contracts to (k >= 3); absent for forests.
inline std::optional<OracleAnswer> oracle_longest_cycle_contraction(const Graph& g,
                                                                    const OracleLimits& limits = {}) {
    if (!is_connected(g)) fail(ErrorKind::NotConnected, "oracle needs a connected graph");
    if (g.num_vertices() > limits.max_host_vertices)
        fail(ErrorKind::InstanceTooLarge, std::to_string(g.num_vertices()) + " host vertices");
    for (int k = g.num_vertices(); k >= 3; --k) {
        auto w = detail::enumerate_witness(g, cycle_graph(k), nullptr);
        if (w) return OracleAnswer{k, *w};
    }
    return std::nullopt;
}

// P_k-witness with singleton end bags {u} and {v}; the enumeration pins u and
// v to the end bags and bars every other vertex from them.
inline std::optional<WitnessStructure> oracle_suitable_pair(const Graph& g, VertexId u, VertexId v,
                                                            int k, const OracleLimits& limits = {}) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "suitable-pair endpoint");
    if (k < 3) fail(ErrorKind::Internal, "suitable pairs need k >= 3");
    if (u == v) return std::nullopt;
    if (g.num_vertices() > limits.max_host_vertices)
        fail(ErrorKind::InstanceTooLarge, std::to_string(g.num_vertices()) + " host vertices");
    if (g.num_vertices() < k) return std::nullopt;

    VertexSet hv = g.vertices();
    int n = static_cast<int>(hv.size());
    std::vector<uint64_t> allowed(n, ((1ULL << (k - 2)) - 1) << 1); // bags 1..k-2
    for (int i = 0; i < n; ++i) {
        if (hv[i] == u) allowed[i] = 1ULL;
        if (hv[i] == v) allowed[i] = 1ULL << (k - 1);
    }
    return detail::enumerate_witness(g, path_graph(k), &allowed);
}

} // namespace lpc

#endif
