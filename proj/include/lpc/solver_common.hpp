#ifndef LPC_SOLVER_COMMON_HPP
#define LPC_SOLVER_COMMON_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/induced.hpp"
#include "lpc/patterns.hpp"
#include "lpc/suitability.hpp"
#include "lpc/witness.hpp"

namespace lpc {

namespace detail {

// Checks a solution on the instance graph, lifts it through the origin maps
// and re-verifies against the root graph. A failed check on the instance
// graph means the branch's structural assumptions were off: the caller
// discards it. A failed check after lifting would be a provenance bug.
inline std::optional<WitnessStructure> lift_solution(const Graph& root, const Graph& cur, VertexId u,
                                                     VertexId v, const Solution& sol) {
    WitnessStructure local = solution_to_witness(cur, u, v, sol);
    if (!verify_witness(cur, path_graph(4), local).ok) return std::nullopt;
    WitnessStructure lifted = lift_witness(cur, local);
    auto check = verify_witness(root, path_graph(4), lifted);
    if (!check.ok) fail(ErrorKind::Internal, "lifted witness invalid: " + check.violation);
    return lifted;
}

// Contracts N(end) ∪ connector to one vertex, removes `end`, and folds every
// component of the remainder that lost contact with `other` into that vertex.
// This is the downward P_k -> P_{k-1} reduction step shared by all solvers:
// the folded components can only reach `other` through the contracted core,
// so re-bagging them into the new end bag keeps solutions intact.
struct SmallerInstance {
    Graph g;
    VertexId new_end;
};

inline std::optional<SmallerInstance> reduce_to_smaller_k(const Graph& g, VertexId end, VertexId other,
                                                          const VertexSet& connector) {
    VertexSet core = set_union(g.neighbors(end), connector);
    if (core.empty() || set_contains(core, other)) return std::nullopt;
    if (!is_connected(induced_subgraph(g, core))) return std::nullopt;
    Contraction c = contract_set_mapped(g, core);
    VertexId blob = c.image(core.front());
    Graph rest = remove_vertices(c.graph, {end});
    VertexSet strays{blob};
    for (const auto& comp : connected_components(remove_vertices(rest, {blob})))
        if (!set_contains(comp, other)) strays = set_union(strays, comp);
    Contraction folded = contract_set_mapped(rest, strays);
    return SmallerInstance{folded.graph, folded.image(blob)};
}

// Witness for P_k built from a P_{k-1} witness of a derived instance by
// putting `end` back in front (bag ids shift by one).
inline WitnessStructure prepend_end_bag(const Graph& derived, VertexId end,
                                        const WitnessStructure& child) {
    WitnessStructure lifted = lift_witness(derived, child);
    WitnessStructure out;
    out.bags[0] = {end};
    for (const auto& [x, bag] : lifted.bags) out.bags[x + 1] = bag;
    return out;
}

// Symmetric version for peeling at the far end.
inline WitnessStructure append_end_bag(const Graph& derived, VertexId end,
                                       const WitnessStructure& child) {
    WitnessStructure lifted = lift_witness(derived, child);
    WitnessStructure out;
    for (const auto& [x, bag] : lifted.bags) out.bags[x] = bag;
    out.bags[static_cast<VertexId>(lifted.bags.size())] = {end};
    return out;
}

// Downward reduction shared by the P5-and-up levels of every family: pick a
// connector s complete to N(u), fold N(u) ∪ {s} plus anything it cuts off
// into a new end vertex, and recurse one suitability level lower.
template <typename SubSolver>
std::optional<WitnessStructure> descend_via_connector(const Graph& g, VertexId u, VertexId v,
                                                      const VertexSet& candidates,
                                                      const SolveOptions& opt, SubSolver&& sub) {
    VertexSet nu = g.neighbors(u);
    for (VertexId s : candidates) {
        if (!set_difference(nu, g.neighbors(s)).empty()) continue; // must cover all of N(u)
        auto smaller = reduce_to_smaller_k(g, u, v, {s});
        if (!smaller) continue;
        if (opt.trace) opt.trace->emit(0, "descend s=" + std::to_string(s));
        auto child = sub(smaller->g, smaller->new_end, v);
        if (child) return prepend_end_bag(smaller->g, u, *child);
    }
    return std::nullopt;
}

// Exact instance keys for merging branches that converged to the same
// labeled instance.
using InstanceKey = std::vector<int>;

inline InstanceKey instance_key(int tag, const Graph& g, VertexId u, VertexId v, VertexId w_a,
                                VertexId w_b, const VertexSet& t2) {
    InstanceKey key{tag, u, v, w_a, w_b, static_cast<int>(t2.size())};
    for (VertexId t : t2) key.push_back(t);
    key.push_back(-1);
    for (VertexId x : g.vertices()) key.push_back(x);
    key.push_back(-2);
    for (const auto& [a, b] : g.edge_list()) {
        key.push_back(a);
        key.push_back(b);
    }
    return key;
}

} // namespace detail

// Shared entry validation for the class solvers.
inline void require_class_member(const Graph& g, const PatternGraph& h, bool check_class,
                                 const std::string& klass) {
    if (!is_connected(g)) fail(ErrorKind::NotConnected, "suitability needs a connected graph");
    if (check_class && !is_h_free(g, {h})) fail(ErrorKind::NotInClass, "graph is not " + klass + "-free");
}

} // namespace lpc

#endif
