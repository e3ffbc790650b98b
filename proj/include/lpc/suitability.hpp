#ifndef LPC_SUITABILITY_HPP
#define LPC_SUITABILITY_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/witness.hpp"

namespace lpc {

// Partition (S_u, S_v) of T(u,v) with N(u) ∪ S_u and N(v) ∪ S_v connected;
// equivalently a P4-witness with singleton end bags {u}, {v}.
struct Solution {
    VertexSet s_u;
    VertexSet s_v;
};

// One unit of P_k-Suitability work, used when a step splits an instance into
// a disjunction of smaller ones.
struct SuitabilityInstance {
    Graph g;
    VertexId u = 0;
    VertexId v = 0;
    int k = 0;
    std::string label; // which step produced this instance
};

using BranchQueue = std::vector<SuitabilityInstance>;

// Optional machine-readable branching trace: one line per branching step.
struct Trace {
    std::ostream* out = nullptr;
    int next_id = 1;

    int emit(int parent, const std::string& label) {
        int id = next_id++;
        if (out) (*out) << "BRANCH " << id << " " << parent << " " << label << "\n";
        return id;
    }
};

struct SolveOptions {
    bool check_class = true;
    Trace* trace = nullptr;
};

// T(u,v): vertices still to be distributed over the two middle bags.
inline VertexSet t_set(const Graph& g, VertexId u, VertexId v) {
    VertexSet shield = set_union(closed_neighborhood(g, u), closed_neighborhood(g, v));
    return set_difference(g.vertices(), shield);
}

inline WitnessStructure solution_to_witness(const Graph& g, VertexId u, VertexId v, const Solution& sol) {
    WitnessStructure w;
    w.bags[0] = {u};
    w.bags[1] = set_union(g.neighbors(u), sol.s_u);
    w.bags[2] = set_union(g.neighbors(v), sol.s_v);
    w.bags[3] = {v};
    return w;
}

inline Solution witness_to_solution(const Graph& g, VertexId u, VertexId v, const WitnessStructure& w) {
    Solution sol;
    sol.s_u = set_difference(w.bag(1), g.neighbors(u));
    sol.s_v = set_difference(w.bag(2), g.neighbors(v));
    return sol;
}

// Contracts every edge inside g[U] (the rule applied on U).
inline Contraction contraction_rule(const Graph& g, const VertexSet& u_set) {
    return contract_set_mapped(g, u_set);
}

// P3-suitable pairs: non-adjacent u, v in a connected graph form one exactly
// when g - {u, v} is connected.
inline bool p3_suitability(const Graph& g, VertexId u, VertexId v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "p3 endpoint");
    if (g.has_edge(u, v) || u == v) fail(ErrorKind::AdjacentPair, "u and v must be distinct non-adjacent");
    if (!is_connected(g)) fail(ErrorKind::NotConnected, "p3_suitability needs a connected graph");
    Graph rest = remove_vertices(g, {std::min(u, v), std::max(u, v)});
    return rest.num_vertices() > 0 && is_connected(rest);
}

namespace detail {

// Enumerates subsets of `pool` of size <= cap, sizes ascending, each size in
// lexicographic order; stops when fn returns true.
template <typename Fn>
bool for_each_small_subset(const VertexSet& pool, int cap, Fn&& fn) {
    int n = static_cast<int>(pool.size());
    cap = std::min(cap, n);
    std::vector<int> idx;
    for (int size = 0; size <= cap; ++size) {
        idx.resize(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            VertexSet subset;
            subset.reserve(size);
            for (int i : idx) subset.push_back(pool[i]);
            if (fn(subset)) return true;
            if (size == 0) break;
            int pos = size - 1;
            while (pos >= 0 && idx[pos] == n - size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return false;
}

} // namespace detail

// Checks for an alpha-constant solution: a side whose connecting core has at
// most alpha vertices. For each side and each candidate core S it tests that
// the whole opposite neighbourhood lies in one component D of the graph
// induced by (T \ S) plus that neighbourhood, then splits T along D.
inline std::optional<Solution> alpha_constant_check(const Graph& g, VertexId u, VertexId v, int alpha) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "alpha check endpoint");
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    if (!set_intersection(g.neighbors(u), g.neighbors(v)).empty()) return std::nullopt;
    if (!is_connected(g)) return std::nullopt;

    VertexSet t = t_set(g, u, v);
    std::optional<Solution> found;
    auto try_side = [&](VertexId side, VertexId other, bool side_is_u) {
        const VertexSet& n_side = g.neighbors(side);
        const VertexSet& n_other = g.neighbors(other);
        return detail::for_each_small_subset(t, alpha, [&](const VertexSet& s) {
            if (!is_connected(induced_subgraph(g, set_union(n_side, s)))) return false;
            VertexSet around = set_union(set_difference(t, s), n_other);
            auto comps = connected_components(induced_subgraph(g, around));
            for (const auto& d : comps) {
                if (set_intersection(d, n_other) != n_other) continue;
                Solution sol;
                VertexSet to_side = set_difference(t, d);
                VertexSet to_other = set_intersection(t, d);
                sol.s_u = side_is_u ? to_side : to_other;
                sol.s_v = side_is_u ? to_other : to_side;
                found = sol;
                return true;
            }
            return false;
        });
    };
    if (try_side(u, v, true)) return found;
    if (try_side(v, u, false)) return found;
    return std::nullopt;
}

// Vertices that can only reach v through N(u) ∪ s_prime: the components of
// g - ({u} ∪ N(u) ∪ s_prime) not containing v. Folding them into the bag of
// N(u) ∪ s_prime keeps a solution a solution.
inline VertexSet closure_set(const Graph& g, VertexId u, VertexId v, const VertexSet& s_prime) {
    VertexSet core = set_union(g.neighbors(u), s_prime);
    if (!is_connected(induced_subgraph(g, core)))
        fail(ErrorKind::NotConnectedCore, "N(u) with the guessed set must be connected");
    VertexSet removed = set_union(core, VertexSet{u});
    VertexSet rest = set_difference(g.vertices(), removed);
    VertexSet out;
    for (const auto& comp : connected_components(induced_subgraph(g, rest)))
        if (!set_contains(comp, v)) out = set_union(out, comp);
    return out;
}

// Distance reduction: an instance with dist(u,v) = d > k splits into d - 2
// instances, one per shortest-path edge not incident to u or v, each edge
// contracted; the original is a yes-instance iff some child is.
inline BranchQueue reduce_distance(const Graph& g, VertexId u, VertexId v, int k) {
    auto d = distance(g, u, v);
    if (!d) fail(ErrorKind::NotConnected, "u and v are in different components");
    if (*d <= k)
        fail(ErrorKind::DistanceNotExceeding,
             "dist=" + std::to_string(*d) + " does not exceed k=" + std::to_string(k));
    auto path = shortest_path(g, u, v);
    BranchQueue out;
    for (size_t i = 1; i + 2 < path->size(); ++i) {
        VertexId a = (*path)[i], b = (*path)[i + 1];
        SuitabilityInstance inst;
        inst.g = contract_edge(g, std::min(a, b), std::max(a, b));
        inst.u = u;
        inst.v = v;
        inst.k = k;
        inst.label = "reduce e=(" + std::to_string(a) + "," + std::to_string(b) + ")";
        out.push_back(std::move(inst));
    }
    return out;
}

} // namespace lpc

#endif
