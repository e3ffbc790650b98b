#ifndef LPC_SOLVER_SP1P4_HPP
#define LPC_SOLVER_SP1P4_HPP

#include <optional>

#include "lpc/graph.hpp"
#include "lpc/patterns.hpp"
#include "lpc/solver_common.hpp"
#include "lpc/suitability.hpp"
#include "lpc/witness.hpp"

namespace lpc {

// Every solvable instance in this class has an alpha-constant solution for
// alpha = (s+2)(2s+4); the bound feeds both the P4 base case and the size of
// the guessed connecting sets in the downward reduction.
inline int sp1p4_alpha(int s) { return (s + 2) * (2 * s + 4); }

namespace detail {

inline std::optional<WitnessStructure> pk_suitability_sp1p4_impl(const Graph& g_in, VertexId u,
                                                                 VertexId v, int k, int s,
                                                                 const SolveOptions& opt) {
    Graph g = g_in.rebased();
    auto d = distance(g, u, v);
    if (!d || *d < k - 1) return std::nullopt;
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));
    int alpha = sp1p4_alpha(s);

    if (k == 4) {
        auto sol = alpha_constant_check(g, u, v, alpha);
        if (!sol) return std::nullopt;
        auto w = lift_solution(g_in.rebased(), g, u, v, *sol);
        if (!w) fail(ErrorKind::Internal, "alpha-constant candidate failed verification");
        return w;
    }

    // guess the connecting core S'_u, widen it by its closure, contract the
    // whole end region and recurse on P_{k-1}
    VertexSet t = t_set(g, u, v);
    std::optional<WitnessStructure> out;
    for_each_small_subset(t, alpha, [&](const VertexSet& sprime) {
        VertexSet core = set_union(g.neighbors(u), sprime);
        if (!is_connected(induced_subgraph(g, core))) return false;
        VertexSet closed = closure_set(g, u, v, sprime);
        auto smaller = reduce_to_smaller_k(g, u, v, set_union(sprime, closed));
        if (!smaller) return false;
        if (opt.trace) opt.trace->emit(0, "descend k=" + std::to_string(k) +
                                              " |S'|=" + std::to_string(sprime.size()));
        auto child = pk_suitability_sp1p4_impl(smaller->g, smaller->new_end, v, k - 1, s, opt);
        if (!child) return false;
        out = prepend_end_bag(smaller->g, u, *child);
        return true;
    });
    if (!out) return std::nullopt;
    auto check = verify_witness(g_in, path_graph(k), *out);
    if (!check.ok) fail(ErrorKind::Internal, "lifted witness invalid: " + check.violation);
    return out;
}

} // namespace detail

inline std::optional<WitnessStructure> pk_suitability_sp1p4(const Graph& g, VertexId u, VertexId v,
                                                            int k, int s,
                                                            const SolveOptions& opt = {}) {
    if (s < 0 || k < 4) fail(ErrorKind::Internal, "pk_suitability_sp1p4 needs s >= 0 and k >= 4");
    require_class_member(g, sp1_plus_p4(s), opt.check_class, "(sP1+P4)");
    if (!g.has_vertex(u) || !g.has_vertex(v)) fail(ErrorKind::UnknownVertex, "suitability endpoint");
    if (u == v || g.has_edge(u, v)) return std::nullopt;
    return detail::pk_suitability_sp1p4_impl(g, u, v, k, s, opt);
}

} // namespace lpc

#endif
