#ifndef LPC_SOLVER_P1P5_HPP
#define LPC_SOLVER_P1P5_HPP

#include <optional>

#include "lpc/graph.hpp"
#include "lpc/patterns.hpp"
#include "lpc/solver_common.hpp"
#include "lpc/suitability.hpp"
#include "lpc/witness.hpp"

namespace lpc {

// P4-Suitability for (P1+P5)-free graphs: after making N(u) independent,
// a solution exists exactly when a 2-constant one does.
inline std::optional<Solution> p4_suitability_p1p5(const Graph& g_in, VertexId u, VertexId v,
                                                   const SolveOptions& opt = {}) {
    require_class_member(g_in, p1_plus_p5(), opt.check_class, "(P1+P5)");
    if (!g_in.has_vertex(u) || !g_in.has_vertex(v)) fail(ErrorKind::UnknownVertex, "suitability endpoint");
    if (u == v || g_in.has_edge(u, v)) return std::nullopt;
    if (!set_intersection(g_in.neighbors(u), g_in.neighbors(v)).empty()) return std::nullopt;
    Graph g = g_in.rebased();
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));
    auto sol = alpha_constant_check(g, u, v, 2);
    if (!sol) return std::nullopt;
    auto w = detail::lift_solution(g_in.rebased(), g, u, v, *sol);
    if (!w) fail(ErrorKind::Internal, "2-constant candidate failed verification");
    return witness_to_solution(g_in, u, v, *w);
}

namespace detail {

// Shared downward step for this family: guess the connecting set S of size
// at most two with N(u) ∪ S connected, fold it into a new end, recurse.
template <typename SubSolver>
std::optional<WitnessStructure> p1p5_descend(const Graph& g_in, VertexId u, VertexId v, int k,
                                             const SolveOptions& opt, SubSolver&& sub) {
    Graph g = g_in.rebased();
    auto d = distance(g, u, v);
    if (!d || *d < k - 1) return std::nullopt;
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));
    VertexSet t = t_set(g, u, v);
    std::optional<WitnessStructure> out;
    for_each_small_subset(t, 2, [&](const VertexSet& s) {
        auto smaller = reduce_to_smaller_k(g, u, v, s);
        if (!smaller) return false;
        if (opt.trace) opt.trace->emit(0, "descend |S|=" + std::to_string(s.size()));
        auto child = sub(smaller->g, smaller->new_end, v);
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

inline std::optional<WitnessStructure> p5_suitability_p1p5(const Graph& g_in, VertexId u, VertexId v,
                                                           const SolveOptions& opt = {}) {
    require_class_member(g_in, p1_plus_p5(), opt.check_class, "(P1+P5)");
    return detail::p1p5_descend(g_in, u, v, 5, opt,
                                [&](const Graph& g2, VertexId u2, VertexId v2)
                                    -> std::optional<WitnessStructure> {
                                    auto sol = p4_suitability_p1p5(g2, u2, v2, opt);
                                    if (!sol) return std::nullopt;
                                    return solution_to_witness(g2, u2, v2, *sol);
                                });
}

inline std::optional<WitnessStructure> p6_suitability_p1p5(const Graph& g_in, VertexId u, VertexId v,
                                                           const SolveOptions& opt = {}) {
    require_class_member(g_in, p1_plus_p5(), opt.check_class, "(P1+P5)");
    return detail::p1p5_descend(g_in, u, v, 6, opt, [&](const Graph& g2, VertexId u2, VertexId v2) {
        return p5_suitability_p1p5(g2, u2, v2, opt);
    });
}

} // namespace lpc

#endif
