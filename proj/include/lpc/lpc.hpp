#ifndef LPC_LPC_HPP
#define LPC_LPC_HPP

#include <optional>
#include <string>

#include "lpc/graph.hpp"
#include "lpc/patterns.hpp"
#include "lpc/solver_p1p2p3.hpp"
#include "lpc/solver_p1p5.hpp"
#include "lpc/solver_p2p4.hpp"
#include "lpc/solver_sp1p4.hpp"
#include "lpc/suitability.hpp"
#include "lpc/witness.hpp"

namespace lpc {

// The four hereditary classes with polynomial Longest Path Contractibility.
struct GraphClass {
    enum class Kind { P2P4, P1P2P3, P1P5, SP1P4 } kind;
    int s = 0; // only for SP1P4

    static GraphClass p2p4() { return {Kind::P2P4, 0}; }
    static GraphClass p1p2p3() { return {Kind::P1P2P3, 0}; }
    static GraphClass p1p5() { return {Kind::P1P5, 0}; }
    static GraphClass sp1p4(int s) { return {Kind::SP1P4, s}; }

    PatternGraph forbidden() const {
        switch (kind) {
            case Kind::P2P4: return p2_plus_p4();
            case Kind::P1P2P3: return p1_plus_p2_plus_p3();
            case Kind::P1P5: return p1_plus_p5();
            case Kind::SP1P4: return sp1_plus_p4(s);
        }
        fail(ErrorKind::Internal, "unreachable");
    }

    // No member contains a path this long, so no member contracts to one.
    int max_k() const {
        switch (kind) {
            case Kind::P2P4: return 6;
            case Kind::P1P2P3: return 7;
            case Kind::P1P5: return 6;
            case Kind::SP1P4: return 2 * s + 4;
        }
        fail(ErrorKind::Internal, "unreachable");
    }

    std::string name() const {
        switch (kind) {
            case Kind::P2P4: return "p2p4";
            case Kind::P1P2P3: return "p1p2p3";
            case Kind::P1P5: return "p1p5";
            case Kind::SP1P4: return "sp1p4(s=" + std::to_string(s) + ")";
        }
        fail(ErrorKind::Internal, "unreachable");
    }
};

inline GraphClass graph_class_by_name(const std::string& name, int s = 0) {
    if (name == "p2p4") return GraphClass::p2p4();
    if (name == "p1p2p3") return GraphClass::p1p2p3();
    if (name == "p1p5") return GraphClass::p1p5();
    if (name == "sp1p4") return GraphClass::sp1p4(s);
    fail(ErrorKind::ParseError, "unknown class '" + name + "'");
}

struct LpcAnswer {
    int k = 0;
    WitnessStructure witness;
};

// Dispatch of P_k-Suitability to the class solver. Absence means no.
inline std::optional<WitnessStructure> pk_suitability(const Graph& g, VertexId u, VertexId v, int k,
                                                      const GraphClass& cls,
                                                      const SolveOptions& opt = {}) {
    if (k < 4 || k > cls.max_k()) return std::nullopt;
    switch (cls.kind) {
        case GraphClass::Kind::P2P4: {
            if (k == 4) {
                auto sol = p4_suitability_p2p4(g, u, v, opt);
                if (!sol) return std::nullopt;
                return solution_to_witness(g, u, v, *sol);
            }
            if (k == 5) return p5_suitability_p2p4(g, u, v, opt);
            return p6_suitability_p2p4(g, u, v, opt);
        }
        case GraphClass::Kind::P1P2P3: {
            if (k == 4) {
                auto sol = p4_suitability_p1p2p3(g, u, v, opt);
                if (!sol) return std::nullopt;
                return solution_to_witness(g, u, v, *sol);
            }
            if (k == 5) return p5_suitability_p1p2p3(g, u, v, opt);
            if (k == 6) return p6_suitability_p1p2p3(g, u, v, opt);
            return p7_suitability_p1p2p3(g, u, v, opt);
        }
        case GraphClass::Kind::P1P5: {
            if (k == 4) {
                auto sol = p4_suitability_p1p5(g, u, v, opt);
                if (!sol) return std::nullopt;
                return solution_to_witness(g, u, v, *sol);
            }
            if (k == 5) return p5_suitability_p1p5(g, u, v, opt);
            return p6_suitability_p1p5(g, u, v, opt);
        }
        case GraphClass::Kind::SP1P4:
            return pk_suitability_sp1p4(g, u, v, k, cls.s, opt);
    }
    fail(ErrorKind::Internal, "unreachable");
}

namespace detail {

// P2-witness of a connected graph: split off a non-cut vertex.
inline WitnessStructure p2_witness(const Graph& g) {
    for (VertexId x : g.vertices()) {
        Graph rest = remove_vertices(g, {x});
        if (rest.num_vertices() > 0 && is_connected(rest)) {
            WitnessStructure w;
            w.bags[0] = {x};
            w.bags[1] = rest.vertices();
            return w;
        }
    }
    fail(ErrorKind::Internal, "connected graph without a non-cut vertex");
}

} // namespace detail

// Longest path the graph contracts to, searched downward through the class's
// suitability solvers over all non-adjacent pairs.
inline LpcAnswer longest_path_contractibility(const Graph& g, const GraphClass& cls,
                                              const SolveOptions& opt = {}) {
    if (!is_connected(g)) fail(ErrorKind::NotConnected, "need a connected graph");
    if (opt.check_class && !is_h_free(g, {cls.forbidden()}))
        fail(ErrorKind::NotInClass, "graph is not " + cls.name() + "-free");
    SolveOptions inner = opt;
    inner.check_class = false; // membership holds hereditarily under contraction

    VertexSet vs = g.vertices();
    for (int k = std::min(cls.max_k(), g.num_vertices()); k >= 4; --k) {
        for (size_t i = 0; i < vs.size(); ++i) {
            for (size_t j = i + 1; j < vs.size(); ++j) {
                if (g.has_edge(vs[i], vs[j])) continue;
                auto w = pk_suitability(g, vs[i], vs[j], k, cls, inner);
                if (w) return {k, *w};
            }
        }
    }
    if (g.num_vertices() >= 3) {
        for (size_t i = 0; i < vs.size(); ++i) {
            for (size_t j = i + 1; j < vs.size(); ++j) {
                if (g.has_edge(vs[i], vs[j])) continue;
                if (p3_suitability(g, vs[i], vs[j])) {
                    WitnessStructure w;
                    w.bags[0] = {vs[i]};
                    w.bags[1] = set_difference(vs, {vs[i], vs[j]});
                    w.bags[2] = {vs[j]};
                    return {3, w};
                }
            }
        }
    }
    if (g.num_vertices() >= 2) return {2, detail::p2_witness(g)};
    WitnessStructure w;
    w.bags[0] = vs;
    return {1, w};
}

} // namespace lpc

#endif
