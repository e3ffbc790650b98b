#ifndef LPC_CLASSIFY_HPP
#define LPC_CLASSIFY_HPP

#include <string>

#include "lpc/graph.hpp"
#include "lpc/induced.hpp"
#include "lpc/patterns.hpp"
#include "lpc/structure.hpp"

namespace lpc {

enum class Problem { LIP, LPC };
enum class Status { Polynomial, NpComplete };

struct Verdict {
    Problem problem;
    Status status;
    std::string reason;
};

inline std::string status_short(Status s) { return s == Status::Polynomial ? "P" : "NPc"; }

// Longest Induced Path on H-free graphs: polynomial exactly for linear
// forests; cycles give the girth route, degree-3 forests the line-graph one.
inline Verdict classify_lip(const PatternGraph& h) {
    if (is_linear_forest(h)) return {Problem::LIP, Status::Polynomial, "linear forest"};
    if (!is_acyclic(h))
        return {Problem::LIP, Status::NpComplete, "contains a cycle; graphs of large girth are H-free"};
    return {Problem::LIP, Status::NpComplete,
            "forest with a vertex of degree at least 3; line graphs are H-free"};
}

namespace detail {

inline bool lpc_polynomial_side(const PatternGraph& h) {
    if (contains_induced(p2_plus_p4(), h)) return true;
    if (contains_induced(p1_plus_p2_plus_p3(), h)) return true;
    if (contains_induced(p1_plus_p5(), h)) return true;
    // membership in sP1+P4 is monotone in s, so |V(h)| isolated vertices
    // are always enough
    if (contains_induced(sp1_plus_p4(h.num_vertices()), h)) return true;
    return false;
}

// Case analysis over linear forests that miss all four polynomial families.
inline std::string lpc_hard_linear_forest_reason(const PatternGraph& h) {
    int comps = static_cast<int>(connected_components(h).size());
    std::vector<int> sizes;
    for (const auto& c : connected_components(h)) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    std::string shape;
    for (size_t i = 0; i < sizes.size(); ++i)
        shape += (i ? "+" : "") + std::string("P") + std::to_string(sizes[i]);
    if (comps >= 3) return "Case 1: at least 3 components (" + shape + ")";
    if (comps == 2) return "Case 2: " + shape + " with s=" + std::to_string(sizes.back());
    return "Case 3: single path " + shape;
}

} // namespace detail

// Longest Path Contractibility on H-free graphs: polynomial exactly when H
// embeds in P2+P4, P1+P2+P3, P1+P5 or sP1+P4.
inline Verdict classify_lpc(const PatternGraph& h) {
    if (!is_acyclic(h))
        return {Problem::LPC, Status::NpComplete, "contains a cycle; large-girth construction applies"};
    if (!is_linear_forest(h))
        return {Problem::LPC, Status::NpComplete,
                "forest with a vertex of degree at least 3; claw-free construction applies"};
    if (detail::lpc_polynomial_side(h)) {
        std::string which;
        if (contains_induced(p2_plus_p4(), h)) which = "P2+P4";
        else if (contains_induced(p1_plus_p2_plus_p3(), h)) which = "P1+P2+P3";
        else if (contains_induced(p1_plus_p5(), h)) which = "P1+P5";
        else which = "sP1+P4";
        return {Problem::LPC, Status::Polynomial, "induced subgraph of " + which};
    }
    return {Problem::LPC, Status::NpComplete, detail::lpc_hard_linear_forest_reason(h)};
}

} // namespace lpc

#endif
