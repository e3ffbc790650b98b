#ifndef LPC_SOLVER_P2P4_HPP
#define LPC_SOLVER_P2P4_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/induced.hpp"
#include "lpc/matching.hpp"
#include "lpc/patterns.hpp"
#include "lpc/solver_common.hpp"
#include "lpc/suitability.hpp"
#include "lpc/witness.hpp"

namespace lpc {

namespace detail {

// Two-coloring of a connected complete bipartite candidate; the first class
// contains the smallest vertex. Absent when the graph is not complete
// bipartite.
inline std::optional<std::pair<VertexSet, VertexSet>> complete_bipartition(const Graph& comp) {
    VertexSet vs = comp.vertices();
    if (vs.empty()) return std::nullopt;
    std::map<VertexId, int> color;
    color[vs.front()] = 0;
    std::queue<VertexId> q;
    q.push(vs.front());
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : comp.neighbors(v)) {
            if (!color.count(w)) {
                color[w] = 1 - color[v];
                q.push(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;
            }
        }
    }
    if (color.size() != vs.size()) return std::nullopt; // disconnected
    VertexSet x, y;
    for (VertexId v : vs) (color[v] == 0 ? x : y).push_back(v);
    for (VertexId a : x)
        for (VertexId b : y)
            if (!comp.has_edge(a, b)) return std::nullopt;
    return std::make_pair(x, y);
}

// P4-Suitability for (P2+P4)-free graphs. The search maintains instances
// derived from the input by contractions only, so any partial solution found
// anywhere lifts to a witness of the input; branches whose structural
// assumptions fail are discarded.
class P2P4P4Solver {
public:
    P2P4P4Solver(const Graph& input, VertexId u, VertexId v, const SolveOptions& opt)
        : root_(input.rebased()), u_(u), v_(v), opt_(opt) {}

    std::optional<WitnessStructure> solve() {
        if (!root_.has_vertex(u_) || !root_.has_vertex(v_))
            fail(ErrorKind::UnknownVertex, "suitability endpoint");
        if (u_ == v_ || root_.has_edge(u_, v_)) return std::nullopt;
        if (!set_intersection(root_.neighbors(u_), root_.neighbors(v_)).empty()) return std::nullopt;

        State st;
        st.g = root_;
        st.a = u_;
        st.b = v_;
        apply(st, root_.neighbors(u_)); // both neighbourhoods become independent
        apply(st, st.g.neighbors(v_));
        phase1(st);
        return result_;
    }

private:
    struct State {
        Graph g;
        VertexId a = -1, b = -1;      // a is the side whose S is assumed independent
        VertexId w_a = -1, w_b = -1;  // the identified hub vertices, once known
        VertexSet t2;                 // floaters: independent, anticomplete to N(b)
        bool pertain = false;         // re-check 1-constant solutions after contractions
        int trace_id = 0;
    };

    Graph root_;
    VertexId u_, v_;
    SolveOptions opt_;
    std::optional<WitnessStructure> result_;
    std::set<InstanceKey> seen_;

    bool done() const { return result_.has_value(); }

    int emit(const State& st, const std::string& label) {
        if (opt_.trace) return opt_.trace->emit(st.trace_id, label);
        return 0;
    }

    VertexSet t_of(const State& st) const { return t_set(st.g, u_, v_); }

    Solution oriented(const State& st, VertexSet s_a, VertexSet s_b) const {
        Solution sol;
        if (st.a == u_) {
            sol.s_u = std::move(s_a);
            sol.s_v = std::move(s_b);
        } else {
            sol.s_u = std::move(s_b);
            sol.s_v = std::move(s_a);
        }
        return sol;
    }

    // Lift-and-verify gate: false means this candidate was not a solution of
    // the current instance and the branch continues/discards.
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

    // Contraction with bookkeeping: tracked ids are remapped, t2 is clipped
    // to the new T, and from phase 3c on every contraction re-checks for a
    // 1-constant solution so shrinking instances cannot silently lose their
    // last covering vertices.
    void apply(State& st, const VertexSet& target) {
        Contraction c = contract_set_mapped(st.g, target);
        st.g = std::move(c.graph);
        if (st.w_a >= 0) st.w_a = c.image(st.w_a);
        if (st.w_b >= 0) st.w_b = c.image(st.w_b);
        st.t2 = set_intersection(c.image_set(st.t2), t_of(st));
        if (st.pertain && !done()) alpha_finish(st, 1);
    }

    VertexSet nbr(const State& st, VertexId v) const { return st.g.neighbors(v); }

    // --- Phase 1: structure of G[T] -------------------------------------

    void phase1(State st) {
        if (done()) return;
        VertexSet t = t_of(st);
        Graph gt = induced_subgraph(st.g, t);
        auto quad_a = contains_induced(gt, path_graph(4));
        if (!quad_a) {
            phase2(st);
            return;
        }
        VertexSet a_set;
        std::vector<VertexId> a_path(4);
        for (const auto& [pi, host] : *quad_a) {
            a_set.push_back(host);
            a_path[pi] = host;
        }
        a_set = sorted_unique(a_set);
        auto quad_b = contains_induced(induced_subgraph(st.g, set_difference(t, a_set)), path_graph(4));
        if (quad_b) {
            immediate_two_quad_solution(st, a_set, *quad_b);
            return;
        }
        // every remaining induced P4 of G[T] meets a_set: branch it away
        branching1(st, a_path, 0, std::vector<int>{});
    }

    void immediate_two_quad_solution(State& st, const VertexSet& a_set, const Embedding& quad_b) {
        VertexSet b_set;
        for (const auto& [pi, host] : quad_b) b_set.push_back(host);
        b_set = sorted_unique(b_set);
        VertexSet w2 = set_union(nbr(st, u_), a_set);
        VertexSet w3 = set_union(nbr(st, v_), b_set);
        VertexSet pool = set_difference(set_difference(t_of(st), a_set), b_set);
        bool progressed = true;
        while (!pool.empty() && progressed) {
            progressed = false;
            for (VertexId x : pool) {
                VertexSet nx = nbr(st, x);
                if (!set_intersection(nx, w2).empty()) {
                    w2 = set_union(w2, {x});
                } else if (!set_intersection(nx, w3).empty()) {
                    w3 = set_union(w3, {x});
                } else {
                    continue;
                }
                pool = set_difference(pool, {x});
                progressed = true;
                break;
            }
        }
        if (!pool.empty()) fail(ErrorKind::Internal, "unabsorbed vertices in a connected instance");
        Solution sol;
        sol.s_u = set_difference(w2, nbr(st, u_));
        sol.s_v = set_difference(w3, nbr(st, v_));
        if (!finish(st, sol)) fail(ErrorKind::Internal, "two-quad solution failed verification");
    }

    // Branching I: each quad vertex goes to one side, connected to that
    // side's neighbourhood either directly or via at most four guessed inner
    // vertices, all contracted away.
    void branching1(const State& st, const std::vector<VertexId>& a_path, size_t i, std::vector<int> sides) {
        if (done()) return;
        if (i == a_path.size()) {
            State child = st;
            VertexSet t = t_of(child);
            if (contains_induced(induced_subgraph(child.g, t), path_graph(4))) return; // discard
            phase2(child);
            return;
        }
        for (int side = 0; side < 2; ++side) {
            sides.push_back(side);
            branching1_place(st, a_path, i, sides);
            sides.pop_back();
            if (done()) return;
        }
    }

    void branching1_place(const State& st, const std::vector<VertexId>& a_path, size_t i,
                          const std::vector<int>& sides) {
        VertexId ai = a_path[i];
        VertexId side_vertex = sides[i] == 0 ? u_ : v_;
        if (!st.g.has_vertex(ai)) { // absorbed by an earlier step
            branching1(st, a_path, i + 1, sides);
            return;
        }
        VertexSet side_nbrs = nbr(st, side_vertex);
        if (!set_intersection(nbr(st, ai), side_nbrs).empty()) {
            State child = st;
            child.trace_id = emit(st, "I a=" + std::to_string(ai) + (sides[i] == 0 ? " side=u" : " side=v"));
            apply(child, set_union(side_nbrs, {ai}));
            branching1(child, a_path, i + 1, sides);
            return;
        }
        VertexSet pool = set_difference(t_of(st), {ai});
        for_each_small_subset(pool, 4, [&](const VertexSet& conn) {
            State child = st;
            child.trace_id = emit(st, "I a=" + std::to_string(ai) + (sides[i] == 0 ? " side=u" : " side=v") +
                                          " conn=" + std::to_string(conn.size()));
            apply(child, set_union(set_union(side_nbrs, {ai}), conn));
            if (child.g.has_vertex(ai) && set_contains(t_of(child), ai)) return done(); // bad connector
            branching1(child, a_path, i + 1, sides);
            return done();
        });
    }

    // --- Phase 2: constant solutions, then both feasibility passes ------

    void phase2(State st) {
        if (done()) return;
        if (alpha_finish(st, 7)) return;
        State su = st;
        su.a = u_;
        su.b = v_;
        phase3(su);
        if (done()) return;
        State sv = st;
        sv.a = v_;
        sv.b = u_;
        phase3(sv);
    }

    // --- Phase 3: feasibility check with S_a independent -----------------

    // Floater maintenance: vertices in t2 must stay independent and
    // anticomplete to N(b); members that gain a neighbour in N(b) commit to
    // that side and are contracted away.
    void claim5_fixpoint(State& st) {
        while (!done()) {
            st.t2 = set_intersection(st.t2, t_of(st));
            bool changed = false;
            for (VertexId t : st.t2) {
                if (!set_intersection(nbr(st, t), nbr(st, st.b)).empty()) {
                    apply(st, set_union(nbr(st, st.b), {t}));
                    changed = true;
                    break;
                }
            }
            if (changed) continue;
            bool has_edge = false;
            for (VertexId t : st.t2) {
                if (!set_intersection(nbr(st, t), st.t2).empty()) {
                    has_edge = true;
                    break;
                }
            }
            if (!has_edge) break;
            apply(st, st.t2);
        }
    }

    // G[T] is made (K3+P1)-free: the isolated vertex of any embedded copy is
    // never needed and is folded into a neighbouring region.
    void claim6_eliminate(State& st) {
        while (!done()) {
            VertexSet t = t_of(st);
            auto emb = contains_induced(induced_subgraph(st.g, t), k3_plus_p1());
            if (!emb) return;
            VertexId y = -1;
            for (const auto& [pi, host] : *emb)
                if (pi == 3) y = host;
            if (!set_intersection(nbr(st, y), nbr(st, st.a)).empty()) {
                apply(st, set_union(nbr(st, st.a), {y}));
            } else {
                VertexSet ny = nbr(st, y);
                if (ny.empty()) fail(ErrorKind::Internal, "isolated vertex in a connected instance");
                apply(st, {std::min(y, ny.front()), std::max(y, ny.front())});
            }
            claim5_fixpoint(st);
        }
    }

    void phase3(State st) {
        if (done()) return;
        VertexSet t = t_of(st);
        VertexSet na = nbr(st, st.a);
        for (size_t si = 0; si < t.size(); ++si) {
            for (size_t sj = si + 1; sj < t.size(); ++sj) {
                VertexId s = t[si], s2 = t[sj];
                if (st.g.has_edge(s, s2)) continue;
                VertexSet ns = nbr(st, s), ns2 = nbr(st, s2);
                VertexSet common = set_intersection(na, set_intersection(ns, ns2));
                if (common.empty()) continue;
                if (set_difference(na, set_union(ns, ns2)).empty()) continue;
                VertexSet privs = set_difference(set_intersection(na, ns), ns2);
                VertexSet privs2 = set_difference(set_intersection(na, ns2), ns);
                if (privs.empty() || privs2.empty()) continue;
                for (VertexId w : privs) {
                    for (VertexId w2 : privs2) {
                        State child = st;
                        child.trace_id = emit(st, "II s=" + std::to_string(s) + " s'=" + std::to_string(s2) +
                                                      " w=" + std::to_string(w) + " w'=" + std::to_string(w2));
                        child.w_a = common.front();
                        apply(child, set_union(na, VertexSet{s, s2}));
                        child.t2 = set_difference(t_of(child), nbr(child, child.w_a));
                        claim5_fixpoint(child);
                        if (done()) return;
                        if (alpha_finish(child, 7)) return;
                        claim6_eliminate(child);
                        if (done()) return;
                        phase3_branch3(child);
                        if (done()) return;
                    }
                }
            }
        }
    }

    void phase3_branch3(State st) {
        VertexSet t1 = set_difference(t_of(st), st.t2);
        bool has_triangle = contains_induced(induced_subgraph(st.g, t1), complete_graph(3)).has_value();
        if (!has_triangle) {
            if (alpha_finish(st, 7)) return;
            phase3b(st);
            return;
        }
        for (VertexId t : t1) {
            State child = st;
            child.trace_id = emit(st, "III t=" + std::to_string(t));
            VertexSet tn = set_intersection(nbr(st, t), t1);
            apply(child, set_union(nbr(child, child.a), {t}));
            if (done()) return;
            if (child.g.has_vertex(t) && set_contains(t_of(child), t)) continue; // not contractible away
            commit_neighbors_to_b(child, tn);
            if (done()) return;
            VertexSet t1c = set_difference(t_of(child), child.t2);
            if (contains_induced(induced_subgraph(child.g, t1c), complete_graph(3))) continue; // discard
            if (alpha_finish(child, 7)) return;
            phase3b(child);
            if (done()) return;
        }
    }

    // The named vertices must end up on the b side: contract those that can
    // reach N(b), park the rest as floaters.
    void commit_neighbors_to_b(State& st, VertexSet pending) {
        bool changed = true;
        while (changed && !done()) {
            changed = false;
            pending = set_intersection(pending, t_of(st));
            for (VertexId t : pending) {
                if (!set_intersection(nbr(st, t), nbr(st, st.b)).empty()) {
                    Contraction c = contract_set_mapped(st.g, set_union(nbr(st, st.b), {t}));
                    pending = c.image_set(pending);
                    st.g = std::move(c.graph);
                    if (st.w_a >= 0) st.w_a = c.image(st.w_a);
                    if (st.w_b >= 0) st.w_b = c.image(st.w_b);
                    st.t2 = set_intersection(c.image_set(st.t2), t_of(st));
                    if (st.pertain) alpha_finish(st, 1);
                    changed = true;
                    break;
                }
            }
        }
        if (done()) return;
        st.t2 = set_union(st.t2, set_intersection(pending, t_of(st)));
        claim5_fixpoint(st);
    }

    // --- Phase 3b: drive T towards an independent set --------------------

    void phase3b(State st) {
        if (done()) return;
        if (!seen_.insert(instance_key(1, st.g, st.a, st.b, st.w_a, st.w_b, st.t2)).second) return;
        st.t2 = set_intersection(st.t2, t_of(st));
        VertexSet t = t_of(st);
        auto comps = connected_components(induced_subgraph(st.g, t));
        std::vector<VertexSet> multi;
        for (const auto& c : comps)
            if (c.size() >= 2) multi.push_back(c);
        if (multi.size() != 1) {
            phase3c(st);
            return;
        }
        const VertexSet& d1 = multi.front();

        // floaters outside the only nontrivial component are isolated in
        // G[T] and anticomplete to N(b); their neighbours all lie in N(a)
        VertexSet stray = set_difference(st.t2, d1);
        if (!stray.empty()) {
            VertexId t0 = stray.front();
            if (set_intersection(nbr(st, t0), nbr(st, st.a)).empty()) return; // discard: nothing to attach to
            apply(st, set_union(nbr(st, st.a), {t0}));
            phase3b(st);
            return;
        }

        VertexSet t1d1 = set_intersection(set_difference(t, st.t2), d1);
        auto bcomps = connected_components(induced_subgraph(st.g, t1d1));
        for (const auto& bc : bcomps)
            if (!complete_bipartition(induced_subgraph(st.g, bc))) return; // discard

        if (bcomps.size() == 1) {
            const VertexSet& b1 = bcomps.front();
            if (b1.size() == 1) {
                // forced: the single vertex must carry the floaters to N(b)
                VertexId tstar = b1.front();
                if (set_intersection(nbr(st, tstar), nbr(st, st.b)).empty()) return; // discard
                State child = st;
                child.trace_id = emit(st, "IV t*=" + std::to_string(tstar));
                apply(child, set_union(set_union(nbr(child, child.b), child.t2), {tstar}));
                phase3b(child);
                return;
            }
            branching46(st, b1);
            return;
        }

        // two or more pieces of T1 inside d1: floaters form the other class
        // of d1's spanning complete bipartite graph and must be complete to
        // the pieces
        for (VertexId f : set_intersection(st.t2, d1))
            for (VertexId x : t1d1)
                if (!st.g.has_edge(f, x)) return; // discard
        for (VertexId t0 : t1d1) {
            if (set_intersection(nbr(st, t0), nbr(st, st.b)).empty()) continue;
            State child = st;
            child.trace_id = emit(st, "V t=" + std::to_string(t0));
            apply(child, set_union(set_union(nbr(child, child.b), child.t2), {t0}));
            phase3b(child);
            if (done()) return;
        }
    }

    // Branchings over one complete bipartite piece: pick the member that
    // goes to the a side; its neighbours commit to the b side, possibly via
    // one bridging member that carries them to N(b).
    void branching46(State st, const VertexSet& b1) {
        for (VertexId t : b1) {
            VertexSet tn = set_intersection(nbr(st, t), t_of(st));
            State base = st;
            base.trace_id = emit(st, "IV t=" + std::to_string(t));
            Contraction c = contract_set_mapped(base.g, set_union(nbr(base, base.a), {t}));
            VertexSet tn_im = c.image_set(tn);
            VertexSet b1_im = c.image_set(set_difference(b1, {t}));
            base.g = std::move(c.graph);
            if (base.w_a >= 0) base.w_a = c.image(base.w_a);
            if (base.w_b >= 0) base.w_b = c.image(base.w_b);
            base.t2 = set_intersection(c.image_set(base.t2), t_of(base));
            if (base.pertain && !done()) alpha_finish(base, 1);
            if (done()) return;
            if (base.g.has_vertex(t) && set_contains(t_of(base), t)) continue; // discard branch

            // variant without a bridge, then one per bridging candidate
            {
                State child = base;
                commit_neighbors_to_b(child, tn_im);
                if (done()) return;
                phase3b(child);
                if (done()) return;
            }
            for (VertexId bridge : set_intersection(b1_im, t_of(base))) {
                if (set_intersection(nbr(base, bridge), nbr(base, base.b)).empty()) continue;
                State child = base;
                child.trace_id = emit(base, "IV bridge=" + std::to_string(bridge));
                Contraction c2 = contract_set_mapped(child.g, set_union(nbr(child, child.b), {bridge}));
                VertexSet tn2 = c2.image_set(tn_im);
                child.g = std::move(c2.graph);
                if (child.w_a >= 0) child.w_a = c2.image(child.w_a);
                if (child.w_b >= 0) child.w_b = c2.image(child.w_b);
                child.t2 = set_intersection(c2.image_set(child.t2), t_of(child));
                if (child.pertain && !done()) alpha_finish(child, 1);
                if (done()) return;
                commit_neighbors_to_b(child, tn2);
                if (done()) return;
                phase3b(child);
                if (done()) return;
            }
        }
    }

    // --- Phase 3c: private solutions and the matching endgame ------------

    void phase3c(State st) {
        if (done()) return;
        if (!seen_.insert(instance_key(2, st.g, st.a, st.b, st.w_a, st.w_b, st.t2)).second) return;
        if (st.w_a < 0 || !st.g.has_vertex(st.w_a)) return;
        VertexSet t = t_of(st);
        VertexSet nb = nbr(st, st.b);
        for (size_t ti = 0; ti < t.size(); ++ti) {
            for (size_t tj = ti + 1; tj < t.size(); ++tj) {
                VertexId x = t[ti], x2 = t[tj];
                if (st.g.has_edge(x, x2)) continue;
                VertexSet nx = nbr(st, x), nx2 = nbr(st, x2);
                VertexSet common = set_intersection(nb, set_intersection(nx, nx2));
                if (common.empty()) continue;
                if (set_difference(nb, set_union(nx, nx2)).empty()) continue;
                VertexSet privs = set_difference(set_intersection(nb, nx), nx2);
                VertexSet privs2 = set_difference(set_intersection(nb, nx2), nx);
                if (privs.empty() || privs2.empty()) continue;
                for (VertexId y : privs) {
                    for (VertexId y2 : privs2) {
                        State child = st;
                        child.trace_id = emit(st, "VII t=" + std::to_string(x) + " t'=" + std::to_string(x2) +
                                                      " y=" + std::to_string(y) + " y'=" + std::to_string(y2));
                        child.w_b = common.front();
                        child.pertain = true;
                        apply(child, set_union(nb, VertexSet{x, x2}));
                        if (done()) return;
                        private_phase(child);
                        if (done()) return;
                    }
                }
            }
        }
    }

    void private_phase(State st) {
        // every T vertex must see both hubs
        while (!done()) {
            if (!st.g.has_vertex(st.w_a) || !st.g.has_vertex(st.w_b) || st.w_a == st.w_b) return;
            bool changed = false;
            for (VertexId z : t_of(st)) {
                bool za = st.g.has_edge(z, st.w_a);
                bool zb = st.g.has_edge(z, st.w_b);
                if (!za && !zb) return; // discard
                if (za && !zb) {
                    apply(st, set_union(nbr(st, st.a), {z}));
                    changed = true;
                    break;
                }
                if (!za && zb) {
                    apply(st, set_union(nbr(st, st.b), {z}));
                    changed = true;
                    break;
                }
            }
            if (!changed) break;
        }
        if (done()) return;

        VertexSet t = t_of(st);
        auto comps = connected_components(induced_subgraph(st.g, t));
        std::vector<std::pair<VertexSet, VertexSet>> pieces;
        for (const auto& c : comps) {
            if (c.size() == 1) continue;
            auto bip = complete_bipartition(induced_subgraph(st.g, c));
            if (!bip) return; // discard: T must be a union of complete bipartite graphs
            pieces.push_back(*bip);
        }
        if (pieces.size() >= 4) return; // discard

        int r = static_cast<int>(pieces.size());
        for (int mask = 0; mask < (1 << r); ++mask) {
            State child = st;
            child.trace_id = emit(st, "VIII mask=" + std::to_string(mask));
            bool dead = false;
            for (int i = 0; i < r && !dead; ++i) {
                VertexSet ya = (mask >> i & 1) ? pieces[i].second : pieces[i].first;
                VertexSet za = (mask >> i & 1) ? pieces[i].first : pieces[i].second;
                ya = set_intersection(ya, t_of(child)); // ids survive: contractions so far kept them
                apply(child, set_union(nbr(child, child.a), ya));
                if (done()) return;
                za = set_intersection(za, t_of(child));
                apply(child, set_union(nbr(child, child.b), za));
                if (done()) return;
                if (!child.g.has_vertex(child.w_a) || !child.g.has_vertex(child.w_b)) dead = true;
            }
            if (dead) continue;
            independent_t_phase(child);
            if (done()) return;
        }
    }

    void independent_t_phase(State st) {
        // pruning rules on the independent-T instance, run to a joint fixpoint
        while (!done()) {
            bool changed = false;
            VertexSet t = t_of(st);
            if (!st.g.has_vertex(st.w_a) || !st.g.has_vertex(st.w_b) || st.w_a == st.w_b) return;

            // every remaining neighbourhood vertex needs two T-neighbours;
            // a single one pins its T-neighbour to that side
            for (int side = 0; side < 2 && !changed; ++side) {
                VertexId sv = side == 0 ? st.a : st.b;
                for (VertexId w : nbr(st, sv)) {
                    VertexSet tn = set_intersection(st.g.neighbors(w), t);
                    if (tn.empty()) return; // discard: w can never be covered
                    if (tn.size() == 1) {
                        apply(st, set_union(nbr(st, sv), {tn.front()}));
                        changed = true;
                        break;
                    }
                }
            }
            if (changed) continue;

            // a T vertex complete to one side is either the whole core of
            // that side or committed to the other side
            for (VertexId z : t) {
                if (set_difference(nbr(st, st.a), st.g.neighbors(z)).empty()) {
                    if (finish(st, oriented(st, {z}, set_difference(t, {z})))) return;
                    apply(st, set_union(nbr(st, st.b), {z}));
                    changed = true;
                    break;
                }
                if (set_difference(nbr(st, st.b), st.g.neighbors(z)).empty()) {
                    if (finish(st, oriented(st, set_difference(t, {z}), {z}))) return;
                    apply(st, set_union(nbr(st, st.a), {z}));
                    changed = true;
                    break;
                }
            }
            if (changed) continue;

            // three-witness configurations force a vertex off the a side
            if (three_witness_rule(st, st.a, st.b)) {
                if (done()) return;
                continue;
            }
            if (three_witness_rule(st, st.b, st.a)) {
                if (done()) return;
                continue;
            }
            break;
        }
        if (done()) return;

        if (alpha_finish(st, 2)) return;
        // after the 2-constant check, covering pairs cannot survive
        VertexSet t = t_of(st);
        for (size_t i = 0; i < t.size(); ++i)
            for (size_t j = i + 1; j < t.size(); ++j) {
                VertexSet both = set_union(st.g.neighbors(t[i]), st.g.neighbors(t[j]));
                if (set_difference(nbr(st, st.a), both).empty()) return; // discard
                if (set_difference(nbr(st, st.b), both).empty()) return; // discard
            }
        matching_endgame(st);
    }

    bool three_witness_rule(State& st, VertexId side, VertexId other) {
        VertexId hub = side == st.a ? st.w_a : st.w_b;
        VertexSet ns = set_difference(nbr(st, side), {hub});
        VertexSet t = t_of(st);
        for (VertexId s : t) {
            for (VertexId x : t) {
                if (s == x) continue;
                VertexSet cs = set_intersection(ns, st.g.neighbors(s));
                VertexSet cx = set_intersection(ns, st.g.neighbors(x));
                bool has_common = !set_intersection(cs, cx).empty();
                bool has_priv = !set_difference(cs, cx).empty();
                bool has_outside = !set_difference(ns, set_union(cs, cx)).empty();
                if (has_common && has_priv && has_outside) {
                    apply(st, set_union(nbr(st, other), {s}));
                    return true;
                }
            }
        }
        return false;
    }

    // Star-cover endgame: collapse neighbourhood-equivalent vertices of each
    // side to representatives, drop the hubs and the cross edges, and accept
    // exactly when a maximum matching saturates every representative.
    void matching_endgame(State st) {
        VertexSet t = t_of(st);
        auto classes_of = [&](VertexId side, VertexId hub) {
            std::map<VertexSet, VertexId> reps; // T-neighbourhood -> smallest member
            for (VertexId w : set_difference(nbr(st, side), {hub})) {
                VertexSet key = set_intersection(st.g.neighbors(w), t);
                auto it = reps.find(key);
                if (it == reps.end() || w < it->second) reps[key] = w;
            }
            VertexSet out;
            for (const auto& [key, w] : reps) out.push_back(w);
            return sorted_unique(out);
        };
        VertexSet reps_a = classes_of(st.a, st.w_a);
        VertexSet reps_b = classes_of(st.b, st.w_b);
        BipartiteGraph bg;
        bg.left = set_union(reps_a, reps_b);
        bg.right = t;
        for (VertexId w : bg.left)
            for (VertexId x : set_intersection(st.g.neighbors(w), t)) bg.edges.emplace_back(w, x);
        Matching m = maximum_matching(bg);
        if (m.size() < static_cast<int>(bg.left.size())) return; // discard
        VertexSet s_a;
        for (const auto& [w, x] : m.edges)
            if (set_contains(reps_a, w)) s_a.push_back(x);
        s_a = sorted_unique(s_a);
        emit(st, "endgame |M|=" + std::to_string(m.size()));
        finish(st, oriented(st, s_a, set_difference(t, s_a))); // unmatched leftovers join the b side
    }
};

} // namespace detail

// Solution to P4-Suitability on a (P2+P4)-free graph, or absence.
inline std::optional<Solution> p4_suitability_p2p4(const Graph& g, VertexId u, VertexId v,
                                                   const SolveOptions& opt = {}) {
    require_class_member(g, p2_plus_p4(), opt.check_class, "(P2+P4)");
    detail::P2P4P4Solver solver(g, u, v, opt);
    auto w = solver.solve();
    if (!w) return std::nullopt;
    return witness_to_solution(g, u, v, *w);
}

// P5-Suitability for (P2+P4)-free graphs.
inline std::optional<WitnessStructure> p5_suitability_p2p4(const Graph& g_in, VertexId u, VertexId v,
                                                           const SolveOptions& opt = {});

// P6-Suitability for (P2+P4)-free graphs.
inline std::optional<WitnessStructure> p6_suitability_p2p4(const Graph& g_in, VertexId u, VertexId v,
                                                           const SolveOptions& opt = {});

inline std::optional<WitnessStructure> p5_suitability_p2p4(const Graph& g_in, VertexId u, VertexId v,
                                                           const SolveOptions& opt) {
    require_class_member(g_in, p2_plus_p4(), opt.check_class, "(P2+P4)");
    Graph g = g_in.rebased();
    auto d = distance(g, u, v);
    if (!d || *d < 4) return std::nullopt;
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));
    d = distance(g, u, v);
    if (*d > 4) {
        // chop one shortest-path edge at a time until the pair is at
        // distance four; some branch preserves the answer
        for (const auto& inst : reduce_distance(g, u, v, 4)) {
            if (opt.trace) opt.trace->emit(0, inst.label);
            auto w = p5_suitability_p2p4(inst.g, u, v, opt);
            if (w) {
                WitnessStructure lifted = lift_witness(inst.g, *w);
                auto check = verify_witness(g_in, path_graph(5), lifted);
                if (!check.ok) fail(ErrorKind::Internal, "reduced witness invalid: " + check.violation);
                return lifted;
            }
        }
        return std::nullopt;
    }

    VertexSet nu = g.neighbors(u);
    std::optional<WitnessStructure> out;
    if (nu.size() == 1) {
        auto smaller = detail::reduce_to_smaller_k(g, u, v, {});
        if (!smaller) return std::nullopt;
        if (opt.trace) opt.trace->emit(0, "peel u");
        auto child_sol = p4_suitability_p2p4(smaller->g, smaller->new_end, v, opt);
        if (!child_sol) return std::nullopt;
        WitnessStructure child = solution_to_witness(smaller->g, smaller->new_end, v, *child_sol);
        out = detail::prepend_end_bag(smaller->g, u, child);
    } else {
        // the middle layer is pinned to the centre bag and excluded from the
        // connector candidates
        VertexSet zset;
        auto du = bfs_distances(g, u);
        auto dv = bfs_distances(g, v);
        for (VertexId z : t_set(g, u, v))
            if (du.count(z) && dv.count(z) && du[z] == 2 && dv[z] == 2) zset.push_back(z);
        VertexSet candidates = set_difference(t_set(g, u, v), sorted_unique(zset));
        out = detail::descend_via_connector(g, u, v, candidates, opt,
                                            [&](const Graph& g2, VertexId u2, VertexId v2)
                                                -> std::optional<WitnessStructure> {
                                                auto sol = p4_suitability_p2p4(g2, u2, v2, opt);
                                                if (!sol) return std::nullopt;
                                                return solution_to_witness(g2, u2, v2, *sol);
                                            });
    }
    if (!out) return std::nullopt;
    auto check = verify_witness(g_in, path_graph(5), *out);
    if (!check.ok) fail(ErrorKind::Internal, "lifted witness invalid: " + check.violation);
    return out;
}

inline std::optional<WitnessStructure> p6_suitability_p2p4(const Graph& g_in, VertexId u, VertexId v,
                                                           const SolveOptions& opt) {
    require_class_member(g_in, p2_plus_p4(), opt.check_class, "(P2+P4)");
    Graph g = g_in.rebased();
    auto d = distance(g, u, v);
    if (!d || *d < 5) return std::nullopt;
    g = contract_set(g, g.neighbors(u));
    g = contract_set(g, g.neighbors(v));

    VertexSet nu = g.neighbors(u);
    std::optional<WitnessStructure> out;
    if (nu.size() == 1) {
        auto smaller = detail::reduce_to_smaller_k(g, u, v, {});
        if (!smaller) return std::nullopt;
        if (opt.trace) opt.trace->emit(0, "peel u");
        auto child = p5_suitability_p2p4(smaller->g, smaller->new_end, v, opt);
        if (!child) return std::nullopt;
        out = detail::prepend_end_bag(smaller->g, u, *child);
    } else {
        out = detail::descend_via_connector(g, u, v, t_set(g, u, v), opt,
                                            [&](const Graph& g2, VertexId u2, VertexId v2) {
                                                return p5_suitability_p2p4(g2, u2, v2, opt);
                                            });
    }
    if (!out) return std::nullopt;
    auto check = verify_witness(g_in, path_graph(6), *out);
    if (!check.ok) fail(ErrorKind::Internal, "lifted witness invalid: " + check.violation);
    return out;
}

} // namespace lpc

#endif
