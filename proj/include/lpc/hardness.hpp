#ifndef LPC_HARDNESS_HPP
#define LPC_HARDNESS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/structure.hpp"
#include "lpc/witness.hpp"

namespace lpc {

// Element/hyperedge structure feeding the hardness generators. Elements are
// 0..m-1; hyperedges are nonempty element sets, the last one normalized to
// the full element set.
struct Hypergraph {
    int m = 0;
    std::vector<VertexSet> hyperedges;

    VertexSet all_elements() const {
        VertexSet q(m);
        for (int i = 0; i < m; ++i) q[i] = i;
        return q;
    }

    void validate() const {
        if (m <= 0) fail(ErrorKind::ParseError, "hypergraph needs at least one element");
        for (const auto& s : hyperedges) {
            if (s.empty()) fail(ErrorKind::ParseError, "empty hyperedge");
            for (int e : s)
                if (e < 0 || e >= m) fail(ErrorKind::ParseError, "element index out of range");
        }
    }

    // Appends the full element set when the last hyperedge is not already it.
    // Any valid bipartition meets the full set on both sides, so
    // 2-colourability is unchanged.
    Hypergraph normalized() const {
        validate();
        Hypergraph out = *this;
        if (out.hyperedges.empty() || out.hyperedges.back() != all_elements())
            out.hyperedges.push_back(all_elements());
        return out;
    }
};

struct TwoColouring {
    VertexSet q1;
    VertexSet q2;
};

inline constexpr int kMaxTwoColouringElements = 20;

// Exhaustive over bipartitions; lexicographically first valid assignment
// (element i's side is bit i, Q1 = clear bits).
inline std::optional<TwoColouring> two_colouring(const Hypergraph& h_in) {
    Hypergraph h = h_in.normalized();
    if (h.m > kMaxTwoColouringElements)
        fail(ErrorKind::TooManyElements, std::to_string(h.m) + " elements");
    std::vector<uint32_t> edge_masks;
    for (const auto& s : h.hyperedges) {
        uint32_t m = 0;
        for (int e : s) m |= 1u << e;
        edge_masks.push_back(m);
    }
    uint32_t full = (h.m == 32) ? ~0u : ((1u << h.m) - 1);
    for (uint32_t mask = 1; mask < full; ++mask) {
        bool ok = true;
        for (uint32_t em : edge_masks)
            if ((em & mask) == 0 || (em & ~mask & full) == 0) {
                ok = false;
                break;
            }
        if (!ok) continue;
        TwoColouring col;
        for (int e = 0; e < h.m; ++e)
            (mask >> e & 1 ? col.q1 : col.q2).push_back(e);
        return col;
    }
    return std::nullopt;
}

using RoleMap = std::map<VertexId, std::string>;

// The Brouwer-Veldman gadget: incidence graph of the hypergraph plus a copy
// S' of the hyperedge side, S x S' complete bipartite, Q a clique, and two
// terminals t1 (complete to S) and t2 (complete to S').
struct GhGadget {
    Graph graph;
    RoleMap roles;
    VertexSet q;      // element vertices, ids 0..m-1
    VertexSet s;      // hyperedge vertices S_1..S_n, ids m..m+n-1
    VertexSet sprime; // copies S'_1..S'_n, ids m+n..m+2n-1
    VertexId t1 = 0;
    VertexId t2 = 0;
};

inline GhGadget build_gh(const Hypergraph& h_in) {
    Hypergraph h = h_in.normalized();
    int m = h.m;
    int n = static_cast<int>(h.hyperedges.size());
    GhGadget out;
    Graph& g = out.graph;
    for (VertexId v = 0; v < m + 2 * n + 2; ++v) g.add_vertex(v);
    for (int i = 0; i < m; ++i) {
        out.q.push_back(i);
        out.roles[i] = "q" + std::to_string(i);
    }
    for (int j = 0; j < n; ++j) {
        out.s.push_back(m + j);
        out.sprime.push_back(m + n + j);
        out.roles[m + j] = "S" + std::to_string(j + 1);
        out.roles[m + n + j] = "S'" + std::to_string(j + 1);
    }
    out.t1 = m + 2 * n;
    out.t2 = m + 2 * n + 1;
    out.roles[out.t1] = "t1";
    out.roles[out.t2] = "t2";

    for (int j = 0; j < n; ++j)
        for (int e : h.hyperedges[j]) {
            g.add_edge(e, out.s[j]);      // incidence edges
            g.add_edge(e, out.sprime[j]); // and to the copies
        }
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) g.add_edge(out.s[j], out.sprime[l]);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) g.add_edge(a, b);
    for (int j = 0; j < n; ++j) {
        g.add_edge(out.t1, out.s[j]);
        g.add_edge(out.t2, out.sprime[j]);
    }
    return out;
}

// Same gadget plus the t1-t2 edge; the cycle-contraction variant.
inline GhGadget build_gh_prime(const Hypergraph& h) {
    GhGadget out = build_gh(h);
    out.graph.add_edge(out.t1, out.t2);
    return out;
}

// Parity-controlled subdivision of the gadget: bipartite with girth >= p and
// a unique farthest pair of pendant tips at distance 2p - 1.
struct BarGhGadget {
    Graph graph;
    RoleMap roles;
    GhGadget base;
    VertexId tbar1 = 0;
    VertexId tbar2 = 0;
    int p = 0;
    // subdivision path for each original edge, endpoints included
    std::map<Edge, std::vector<VertexId>> paths;
    std::vector<VertexId> pendant1; // t1 .. tbar1
    std::vector<VertexId> pendant2; // t2 .. tbar2

    // Subdivision path oriented from a to b, endpoints included.
    std::vector<VertexId> path(VertexId a, VertexId b) const {
        auto it = paths.find({std::min(a, b), std::max(a, b)});
        if (it == paths.end()) fail(ErrorKind::Internal, "no subdivision path recorded");
        std::vector<VertexId> p = it->second;
        if (p.front() != a) std::reverse(p.begin(), p.end());
        return p;
    }
};

inline BarGhGadget build_bar_gh(const Hypergraph& h_in, int p) {
    if (p < 4 || p % 2 != 0) fail(ErrorKind::OddP, "p must be even and at least 4");
    BarGhGadget out;
    out.p = p;
    out.base = build_gh(h_in);
    const GhGadget& base = out.base;
    Graph& g = out.graph;

    for (VertexId v : base.graph.vertices()) g.add_vertex(v);
    out.roles = base.roles;
    VertexId next = base.graph.vertices().back() + 1;

    auto role_of = [&](VertexId v) { return base.roles.at(v); };
    auto in_set = [](const VertexSet& s, VertexId v) { return set_contains(s, v); };

    auto add_subdivided = [&](VertexId a, VertexId b, int internal) {
        std::vector<VertexId> path{a};
        VertexId prev = a;
        for (int i = 0; i < internal; ++i) {
            g.add_vertex(next);
            out.roles[next] = "sub(" + role_of(a) + "," + role_of(b) + "," + std::to_string(i) + ")";
            g.add_edge(prev, next);
            path.push_back(next);
            prev = next++;
        }
        g.add_edge(prev, b);
        path.push_back(b);
        out.paths[{std::min(a, b), std::max(a, b)}] = a < b ? path
                                                            : std::vector<VertexId>(path.rbegin(), path.rend());
    };

    VertexId sn = base.s.back();
    VertexId snp = base.sprime.back();
    for (const auto& [a, b] : base.graph.edge_list()) {
        bool a_q = in_set(base.q, a), b_q = in_set(base.q, b);
        bool a_s = in_set(base.s, a), b_s = in_set(base.s, b);
        bool a_sp = in_set(base.sprime, a), b_sp = in_set(base.sprime, b);
        bool t_edge = (a == base.t1 || b == base.t1 || a == base.t2 || b == base.t2);
        if ((a == sn && b == snp) || (a == snp && b == sn)) {
            add_subdivided(a, b, 0); // the one edge that stays intact
        } else if ((a_s && b_sp) || (a_sp && b_s)) {
            add_subdivided(a, b, p - 2);
        } else if ((a_q && b_sp) || (a_sp && b_q)) {
            add_subdivided(a, b, p - 2);
        } else if ((a_q && b_q) || (a_q && b_s) || (a_s && b_q)) {
            add_subdivided(a, b, p - 1);
        } else if (t_edge) {
            add_subdivided(a, b, 0); // terminal attachments stay edges
        } else {
            fail(ErrorKind::Internal, "unclassified gadget edge");
        }
    }

    auto add_pendant = [&](VertexId t, const std::string& tip_role, std::vector<VertexId>& store) {
        // path of length p - 2 hanging off t, ending in the tip
        store = {t};
        VertexId prev = t;
        for (int i = 0; i < p - 2; ++i) {
            g.add_vertex(next);
            bool last = (i == p - 3);
            out.roles[next] = last ? tip_role : ("sub(" + tip_role + "," + std::to_string(i) + ")");
            g.add_edge(prev, next);
            store.push_back(next);
            prev = next++;
        }
    };
    add_pendant(base.t1, "tbar1", out.pendant1);
    add_pendant(base.t2, "tbar2", out.pendant2);
    out.tbar1 = out.pendant1.back();
    out.tbar2 = out.pendant2.back();
    return out;
}

// The explicit P_{2p}-witness of the subdivided gadget built from a
// 2-colouring: pendant vertices sit in singleton bags, everything else is
// split between the bag of S_n (colour-1 side) and the bag of S'_n
// (colour-2 side). Each subdivided S_i-S'_j path is cut at its middle-most
// subdivision vertex, ties toward S_i.
inline WitnessStructure bar_gh_witness(const BarGhGadget& bar, const Hypergraph& h_in,
                                       const TwoColouring& col) {
    Hypergraph h = h_in.normalized();
    const GhGadget& base = bar.base;
    int n = static_cast<int>(h.hyperedges.size());

    // Bag layout along P_{2p}: bags 0..p-2 walk the first pendant path from
    // tbar1 down to and including t1, bag p-1 is W(S_n), bag p is W(S'_n),
    // and bags p+1..2p-1 walk from t2 out to tbar2.
    WitnessStructure w;
    int k = 2 * bar.p;
    int idx = 0;
    for (auto it = bar.pendant1.rbegin(); it != bar.pendant1.rend(); ++it)
        w.bags[idx++] = {*it};
    int first_mid = idx;
    w.bags[first_mid] = {};
    w.bags[first_mid + 1] = {};
    idx = first_mid + 2;
    for (VertexId v : bar.pendant2)
        w.bags[idx++] = {v};
    if (idx != k) fail(ErrorKind::Internal, "bar gadget bag count mismatch");

    VertexSet w_sn, w_snp;
    auto add_path_to = [&](VertexSet& bag, const std::vector<VertexId>& path, size_t from, size_t to) {
        for (size_t i = from; i <= to; ++i) bag.push_back(path[i]);
    };

    VertexId sn = base.s.back(), snp = base.sprime.back();
    // S_i-S'_j halves
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == n - 1 && j == n - 1) {
                w_sn.push_back(sn);
                w_snp.push_back(snp);
                continue;
            }
            const auto& path = bar.path(base.s[i], base.sprime[j]); // oriented S_i -> S'_j
            size_t cut = 1 + (bar.p - 4) / 2; // middle-most internal vertex, ties toward S_i
            add_path_to(w_sn, path, 0, cut);
            add_path_to(w_snp, path, cut + 1, path.size() - 1);
        }
    // Q-S paths: colour-1 endpoints pull the whole path into W(S_n), others
    // keep their internals on the S side and hand the element vertex over.
    for (int i = 0; i < n; ++i)
        for (int e : h.hyperedges[i]) {
            const auto& path = bar.path(base.s[i], e);
            bool q1 = set_contains(col.q1, e);
            add_path_to(w_sn, path, 0, path.size() - (q1 ? 1 : 2));
            if (!q1) w_snp.push_back(e);
        }
    // Q-S' paths, symmetric.
    for (int i = 0; i < n; ++i)
        for (int e : h.hyperedges[i]) {
            const auto& path = bar.path(base.sprime[i], e);
            bool q2 = set_contains(col.q2, e);
            add_path_to(w_snp, path, 0, path.size() - (q2 ? 1 : 2));
            if (!q2) w_sn.push_back(e);
        }
    // Q-Q paths: both endpoints same colour -> that side; split otherwise.
    for (int a = 0; a < h.m; ++a)
        for (int b = a + 1; b < h.m; ++b) {
            const auto& path = bar.path(a, b);
            bool a1 = set_contains(col.q1, a), b1 = set_contains(col.q1, b);
            if (a1 && b1) {
                add_path_to(w_sn, path, 0, path.size() - 1);
            } else if (!a1 && !b1) {
                add_path_to(w_snp, path, 0, path.size() - 1);
            } else {
                // cut between the halves; endpoint colours decide the sides
                size_t cut = path.size() / 2 - 1;
                VertexSet& first = a1 ? w_sn : w_snp;
                VertexSet& second = a1 ? w_snp : w_sn;
                add_path_to(first, path, 0, cut);
                add_path_to(second, path, cut + 1, path.size() - 1);
            }
        }

    w.bags[first_mid] = sorted_unique(w_sn);
    w.bags[first_mid + 1] = sorted_unique(w_snp);
    return w;
}

// One-subdivision reduction: Hamiltonian path in g corresponds to an induced
// path of length 2n - 2 in the subdivision.
inline Graph hampath_to_lip_subdivision(const Graph& g) { return subdivide_all_edges(g, 1); }

// Line-graph reduction: Hamiltonian path in g corresponds to an induced path
// on n - 1 vertices in L(g).
inline Graph hampath_to_lip_linegraph(const Graph& g) { return line_graph(g); }

inline constexpr int kMaxHamPathVertices = 10;

// Exhaustive Hamiltonian-path search, the test oracle for the reductions.
inline std::optional<std::vector<VertexId>> hampath_bruteforce(const Graph& g) {
    if (g.num_vertices() > kMaxHamPathVertices)
        fail(ErrorKind::TooLarge, std::to_string(g.num_vertices()) + " vertices");
    if (g.num_vertices() == 0) return std::nullopt;
    VertexSet vs = g.vertices();
    std::vector<VertexId> order;
    VertexSet used;
    std::optional<std::vector<VertexId>> found;
    auto dfs = [&](auto&& self, VertexId last) -> bool {
        if (order.size() == vs.size()) {
            found = order;
            return true;
        }
        for (VertexId w : g.neighbors(last)) {
            if (set_contains(used, w)) continue;
            order.push_back(w);
            used.insert(std::lower_bound(used.begin(), used.end(), w), w);
            if (self(self, w)) return true;
            used.erase(std::lower_bound(used.begin(), used.end(), w));
            order.pop_back();
        }
        return false;
    };
    for (VertexId start : vs) {
        order = {start};
        used = {start};
        if (dfs(dfs, start)) return found;
    }
    return std::nullopt;
}

} // namespace lpc

#endif
