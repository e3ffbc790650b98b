#ifndef LPC_SOLVER_P1P2P3_HPP
#define LPC_SOLVER_P1P2P3_HPP

#include <optional>
#include <string>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/matching.hpp"
#include "lpc/patterns.hpp"
#include "lpc/solver_common.hpp"
#include "lpc/suitability.hpp"
#include "lpc/witness.hpp"

namespace lpc {

namespace detail {

// P4-Suitability for (P1+P2+P3)-free graphs. One 8-constant sweep settles
// everything except independent solutions with unique private neighbours;
// those are found by guessing two core vertices per side together with their
// privates and finishing with a star-cover matching.
class P1P2P3P4Solver {
public:
    P1P2P3P4Solver(const Graph& input, VertexId u, VertexId v, const SolveOptions& opt)
        : root_(input.rebased()), u_(u), v_(v), opt_(opt) {}

    std::optional<WitnessStructure> solve() {
        if (!root_.has_vertex(u_) || !root_.has_vertex(v_))
            fail(ErrorKind::UnknownVertex, "suitability endpoint");
        if (u_ == v_ || root_.has_edge(u_, v_)) return std::nullopt;
        if (!set_intersection(root_.neighbors(u_), root_.neighbors(v_)).empty()) return std::nullopt;

        State st;
        st.g = root_;
        apply(st, root_.neighbors(u_));
        apply(st, st.g.neighbors(v_));
        if (alpha_finish(st, 8)) return result_;
        branching(st);
        return result_;
    }

private:
    struct State {
        Graph g;
        VertexId w_u = -1, w_v = -1;
        bool pertain = false;
        int trace_id = 0;
    };

    Graph root_;
    VertexId u_, v_;
    SolveOptions opt_;
    std::optional<WitnessStructure> result_;

    bool done() const { return result_.has_value(); }

    int emit(const State& st, const std::string& label) {
        if (opt_.trace) return opt_.trace->emit(st.trace_id, label);
        return 0;
    }

    bool finish(const State& st, const Solution& sol) {
        auto w = lift_solution(root_, st.g, u_, v_, sol);
        if (!w) return false;
        result_ = std::move(w);
        return true;
    }

    bool alpha_finish(const State& st, int alpha) {
        auto sol = alpha_constant_check(st.g, u_, v_, alpha);
        if (!sol) return false;
        if (!finish(st, *sol)) fail(ErrorKind::Internal, "alpha-constant candidate failed verification");
        return true;
    }

    void apply(State& st, const VertexSet& target) {
        Contraction c = contract_set_mapped(st.g, target);
        st.g = std::move(c.graph);
        if (st.w_u >= 0) st.w_u = c.image(st.w_u);
        if (st.w_v >= 0) st.w_v = c.image(st.w_v);
        if (st.pertain && !done()) alpha_finish(st, 1);
    }

    // Guess the two covering vertices per side; each must have a unique
    // private neighbour, every other neighbour is common to both and gets
    // contracted into the side's hub.
    void branching(const State& st) {
        VertexSet t = t_set(st.g, u_, v_);
        VertexSet nu = st.g.neighbors(u_);
        VertexSet nv = st.g.neighbors(v_);
        for (size_t i = 0; i < t.size() && !done(); ++i) {
            for (size_t j = i + 1; j < t.size() && !done(); ++j) {
                VertexId s = t[i], s2 = t[j];
                if (st.g.has_edge(s, s2)) continue;
                auto u_guess = side_guess(st, nu, s, s2);
                if (!u_guess) continue;
                for (size_t h = 0; h < t.size() && !done(); ++h) {
                    for (size_t l = h + 1; l < t.size() && !done(); ++l) {
                        VertexId x = t[h], x2 = t[l];
                        if (x == s || x == s2 || x2 == s || x2 == s2) continue;
                        if (st.g.has_edge(x, x2)) continue;
                        auto v_guess = side_guess(st, nv, x, x2);
                        if (!v_guess) continue;
                        State child = st;
                        child.trace_id =
                            emit(st, "guess s=" + std::to_string(s) + " s'=" + std::to_string(s2) +
                                         " t=" + std::to_string(x) + " t'=" + std::to_string(x2));
                        child.w_u = u_guess->front();
                        child.w_v = v_guess->front();
                        child.pertain = true;
                        apply(child, set_union(nu, VertexSet{s, s2}));
                        if (done()) return;
                        apply(child, set_union(child.g.neighbors(v_), VertexSet{x, x2}));
                        if (done()) return;
                        process_branch(child);
                    }
                }
            }
        }
    }

    // Valid side guess: both picks have a private neighbour, a common
    // neighbour exists, and no further neighbour of either pick hides in the
    // private zone (privates are unique in this class).
    std::optional<VertexSet> side_guess(const State& st, const VertexSet& side_nbrs, VertexId s,
                                        VertexId s2) const {
        VertexSet ns = st.g.neighbors(s), ns2 = st.g.neighbors(s2);
        VertexSet common = set_intersection(side_nbrs, set_intersection(ns, ns2));
        if (common.empty()) return std::nullopt;
        VertexSet privs = set_difference(set_intersection(side_nbrs, ns), ns2);
        VertexSet privs2 = set_difference(set_intersection(side_nbrs, ns2), ns);
        if (privs.size() != 1 || privs2.size() != 1) return std::nullopt;
        return common;
    }

    void process_branch(State st) {
        // first pass: every T vertex must reach both hubs
        while (!done()) {
            bool changed = false;
            for (VertexId z : t_set(st.g, u_, v_)) {
                bool zu = st.g.has_edge(z, st.w_u);
                bool zv = st.g.has_edge(z, st.w_v);
                if (zu && zv) continue;
                if (!zu && !zv) return; // discard
                // the hub it does see is the only side it can join
                VertexId dest = zu ? u_ : v_;
                VertexId dest_hub = zu ? st.w_u : st.w_v;
                VertexSet others = set_difference(
                    set_intersection(st.g.neighbors(z), st.g.neighbors(dest)), {dest_hub});
                if (others.size() >= 2) return; // discard: no room on the only available side
                apply(st, set_union(st.g.neighbors(dest), {z}));
                changed = true;
                break;
            }
            if (!changed) break;
        }
        if (done()) return;

        // second pass: each T vertex keeps exactly one private neighbour on
        // each side; anything slimmer folds away, anything fatter commits to
        // the opposite side or dies
        while (!done()) {
            bool changed = false;
            for (VertexId z : t_set(st.g, u_, v_)) {
                VertexSet eu = set_difference(set_intersection(st.g.neighbors(z), st.g.neighbors(u_)),
                                              {st.w_u});
                VertexSet ev = set_difference(set_intersection(st.g.neighbors(z), st.g.neighbors(v_)),
                                              {st.w_v});
                if (eu.size() + ev.size() <= 1) {
                    VertexId side = eu.size() == 1 ? u_ : v_;
                    apply(st, set_union(st.g.neighbors(side), {z}));
                    changed = true;
                    break;
                }
                if (eu.size() >= 2 && ev.size() >= 2) return; // discard
                if (eu.size() >= 2) {
                    apply(st, set_union(st.g.neighbors(v_), {z}));
                    changed = true;
                    break;
                }
                if (ev.size() >= 2) {
                    apply(st, set_union(st.g.neighbors(u_), {z}));
                    changed = true;
                    break;
                }
            }
            if (!changed) break;
        }
        if (done()) return;
        matching_endgame(st);
    }

    // Drop the hubs and all edges inside T; accept exactly when the matching
    // saturates both reduced neighbourhoods.
    void matching_endgame(State st) {
        VertexSet t = t_set(st.g, u_, v_);
        VertexSet left_u = set_difference(st.g.neighbors(u_), {st.w_u});
        VertexSet left_v = set_difference(st.g.neighbors(v_), {st.w_v});
        BipartiteGraph bg;
        bg.left = set_union(left_u, left_v);
        bg.right = t;
        for (VertexId w : bg.left)
            for (VertexId x : set_intersection(st.g.neighbors(w), t)) bg.edges.emplace_back(w, x);
        Matching m = maximum_matching(bg);
        if (m.size() < static_cast<int>(bg.left.size())) return; // discard
        VertexSet s_u;
        for (const auto& [w, x] : m.edges)
            if (set_contains(left_u, w)) s_u.push_back(x);
        s_u = sorted_unique(s_u);
        emit(st, "endgame |M|=" + std::to_string(m.size()));
        Solution sol;
        sol.s_u = s_u;
        sol.s_v = set_difference(t, s_u);
        finish(st, sol);
    }
};

} // namespace detail

inline std::optional<Solution> p4_suitability_p1p2p3(const Graph& g, VertexId u, VertexId v,
                                                     const SolveOptions& opt = {}) {
    require_class_member(g, p1_plus_p2_plus_p3(), opt.check_class, "(P1+P2+P3)");
    detail::P1P2P3P4Solver solver(g, u, v, opt);
    auto w = solver.solve();
    if (!w) return std::nullopt;
    return witness_to_solution(g, u, v, *w);
}

inline std::optional<WitnessStructure> p5_suitability_p1p2p3(const Graph& g_in, VertexId u, VertexId v,
                                                             const SolveOptions& opt = {});
inline std::optional<WitnessStructure> p6_suitability_p1p2p3(const Graph& g_in, VertexId u, VertexId v,
                                                             const SolveOptions& opt = {});
inline std::optional<WitnessStructure> p7_suitability_p1p2p3(const Graph& g_in, VertexId u, VertexId v,
                                                             const SolveOptions& opt = {});

namespace detail {

// Peel a pendant end vertex: its single neighbour becomes the new end and
// the instance drops one suitability level.
template <typename SubSolver>
std::optional<WitnessStructure> peel_and_descend(const Graph& g, VertexId end, VertexId other,
                                                 bool at_front, const SolveOptions& opt,
                                                 SubSolver&& sub) {
    auto smaller = reduce_to_smaller_k(g, end, other, {});
    if (!smaller) return std::nullopt;
    if (opt.trace) opt.trace->emit(0, at_front ? "peel u" : "peel v");
    auto child = sub(smaller->g, smaller->new_end, other);
    if (!child) return std::nullopt;
    return at_front ? prepend_end_bag(smaller->g, end, *child)
                    : append_end_bag(smaller->g, end, *child);
}

} // namespace detail

inline std::optional<WitnessStructure> p5_suitability_p1p2p3(const Graph& g_in, VertexId u, VertexId v,
                                                             const SolveOptions& opt) {
    require_class_member(g_in, p1_plus_p2_plus_p3(), opt.check_class, "(P1+P2+P3)");
    Graph g = g_in.rebased();
    auto d = distance(g, u, v);
    if (!d || *d < 4) return std::nullopt;
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));

    auto check_and_return = [&](std::optional<WitnessStructure> w) -> std::optional<WitnessStructure> {
        if (!w) return std::nullopt;
        auto check = verify_witness(g_in, path_graph(5), *w);
        if (!check.ok) fail(ErrorKind::Internal, "lifted witness invalid: " + check.violation);
        return w;
    };

    auto p4_as_witness = [&](const Graph& g2, VertexId u2, VertexId v2) -> std::optional<WitnessStructure> {
        auto sol = p4_suitability_p1p2p3(g2, u2, v2, opt);
        if (!sol) return std::nullopt;
        return solution_to_witness(g2, u2, v2, *sol);
    };

    if (g.neighbors(u).size() == 1)
        return check_and_return(detail::peel_and_descend(g, u, v, true, opt, p4_as_witness));
    if (g.neighbors(v).size() == 1) {
        auto w = detail::peel_and_descend(g, v, u, false, opt,
                                          [&](const Graph& g2, VertexId v2, VertexId u2) {
                                              return p4_as_witness(g2, u2, v2);
                                          });
        return check_and_return(std::move(w));
    }

    d = distance(g, u, v);
    if (*d > 4) {
        for (const auto& inst : reduce_distance(g, u, v, 4)) {
            if (opt.trace) opt.trace->emit(0, inst.label);
            auto w = p5_suitability_p1p2p3(inst.g, u, v, opt);
            if (w) return check_and_return(lift_witness(inst.g, *w));
        }
        return std::nullopt;
    }

    // middle layer: distance two from both ends, pinned to the centre bag
    VertexSet mset;
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    for (VertexId z : t_set(g, u, v))
        if (du.count(z) && dv.count(z) && du[z] == 2 && dv[z] == 2) mset.push_back(z);
    VertexSet candidates;
    for (VertexId z : set_difference(t_set(g, u, v), sorted_unique(mset)))
        if (du.count(z) && du[z] == 2) candidates.push_back(z);
    return check_and_return(detail::descend_via_connector(g, u, v, candidates, opt, p4_as_witness));
}

inline std::optional<WitnessStructure> p6_suitability_p1p2p3(const Graph& g_in, VertexId u, VertexId v,
                                                             const SolveOptions& opt) {
    require_class_member(g_in, p1_plus_p2_plus_p3(), opt.check_class, "(P1+P2+P3)");
    Graph g = g_in.rebased();
    auto d = distance(g, u, v);
    if (!d || *d < 5) return std::nullopt;
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));

    auto check_and_return = [&](std::optional<WitnessStructure> w) -> std::optional<WitnessStructure> {
        if (!w) return std::nullopt;
        auto check = verify_witness(g_in, path_graph(6), *w);
        if (!check.ok) fail(ErrorKind::Internal, "lifted witness invalid: " + check.violation);
        return w;
    };

    auto p5_sub = [&](const Graph& g2, VertexId u2, VertexId v2) {
        return p5_suitability_p1p2p3(g2, u2, v2, opt);
    };
    if (g.neighbors(u).size() == 1)
        return check_and_return(detail::peel_and_descend(g, u, v, true, opt, p5_sub));
    if (g.neighbors(v).size() == 1) {
        auto w = detail::peel_and_descend(g, v, u, false, opt,
                                          [&](const Graph& g2, VertexId v2, VertexId u2) {
                                              return p5_sub(g2, u2, v2);
                                          });
        return check_and_return(std::move(w));
    }
    return check_and_return(detail::descend_via_connector(g, u, v, t_set(g, u, v), opt, p5_sub));
}

inline std::optional<WitnessStructure> p7_suitability_p1p2p3(const Graph& g_in, VertexId u, VertexId v,
                                                             const SolveOptions& opt) {
    require_class_member(g_in, p1_plus_p2_plus_p3(), opt.check_class, "(P1+P2+P3)");
    Graph g = g_in.rebased();
    auto d = distance(g, u, v);
    if (!d || *d < 6) return std::nullopt;
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));
    // the class forces a pendant end at this level
    if (g.neighbors(u).size() != 1) return std::nullopt;
    auto w = detail::peel_and_descend(g, u, v, true, opt, [&](const Graph& g2, VertexId u2, VertexId v2) {
        return p6_suitability_p1p2p3(g2, u2, v2, opt);
    });
    if (!w) return std::nullopt;
    auto check = verify_witness(g_in, path_graph(7), *w);
    if (!check.ok) fail(ErrorKind::Internal, "lifted witness invalid: " + check.violation);
    return w;
}

} // namespace lpc

#endif
