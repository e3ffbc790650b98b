#ifndef LPC_WITNESS_HPP
#define LPC_WITNESS_HPP

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lpc/graph.hpp"
#include "lpc/patterns.hpp"

namespace lpc {

// Partition of a host graph's vertices into labelled bags, one per pattern
// vertex, realizing the pattern as a contraction: each bag is connected
// and bags are adjacent exactly when their pattern vertices are.
struct WitnessStructure {
    std::map<VertexId, VertexSet> bags; // pattern vertex -> host vertices

    const VertexSet& bag(VertexId pattern_vertex) const {
        auto it = bags.find(pattern_vertex);
        if (it == bags.end()) fail(ErrorKind::MalformedWitness, "missing bag");
        return it->second;
    }
};

struct WitnessCheck {
    bool ok = true;
    std::string violation; // first violated condition, empty when ok
};

namespace detail {

inline std::string set_to_string(const VertexSet& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

inline bool sets_adjacent(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (VertexId v : a)
        for (VertexId w : g.neighbors(v))
            if (set_contains(b, w)) return true;
    return false;
}

} // namespace detail

// Checks conditions in order: every bag connected, bags partition V(g),
// bag adjacency mirrors pattern adjacency. Structurally broken input
// (empty bag, unknown vertex, bag set not matching V(h)) is an error.
inline WitnessCheck verify_witness(const Graph& g, const PatternGraph& h, const WitnessStructure& w) {
    for (VertexId x : h.vertices())
        if (!w.bags.count(x))
            fail(ErrorKind::MalformedWitness, "no bag for pattern vertex " + std::to_string(x));
    if (w.bags.size() != static_cast<size_t>(h.num_vertices()))
        fail(ErrorKind::MalformedWitness, "bag for unknown pattern vertex");
    for (const auto& [x, bag] : w.bags) {
        if (bag.empty()) fail(ErrorKind::MalformedWitness, "empty bag " + std::to_string(x));
        for (VertexId v : bag)
            if (!g.has_vertex(v))
                fail(ErrorKind::MalformedWitness, "unknown host vertex " + std::to_string(v));
        if (sorted_unique(bag) != bag) fail(ErrorKind::MalformedWitness, "bag not a sorted set");
    }

    WitnessCheck out;
    for (const auto& [x, bag] : w.bags) {
        if (!is_connected(induced_subgraph(g, bag))) {
            out.ok = false;
            out.violation = "bag " + std::to_string(x) + " = " + detail::set_to_string(bag) + " is not connected";
            return out;
        }
    }
    VertexSet all;
    size_t total = 0;
    for (const auto& [x, bag] : w.bags) {
        total += bag.size();
        all = set_union(all, bag);
    }
    if (total != all.size()) {
        out.ok = false;
        out.violation = "bags are not pairwise disjoint";
        return out;
    }
    if (all != g.vertices()) {
        out.ok = false;
        out.violation = "bags do not cover the host vertex set";
        return out;
    }
    auto pv = h.vertices();
    for (size_t i = 0; i < pv.size(); ++i)
        for (size_t j = i + 1; j < pv.size(); ++j) {
            bool want = h.has_edge(pv[i], pv[j]);
            bool have = detail::sets_adjacent(g, w.bag(pv[i]), w.bag(pv[j]));
            if (want != have) {
                out.ok = false;
                out.violation = "bags " + std::to_string(pv[i]) + "," + std::to_string(pv[j]) +
                                (have ? " adjacent but pattern vertices are not"
                                      : " not adjacent but pattern vertices are");
                return out;
            }
        }
    return out;
}

// Expands each bag of a witness on a contraction-derived graph through the
// origin maps back to the graph it was derived from.
inline WitnessStructure lift_witness(const Graph& derived, const WitnessStructure& w) {
    WitnessStructure out;
    for (const auto& [x, bag] : w.bags) {
        VertexSet lifted;
        for (VertexId v : bag) lifted = set_union(lifted, derived.origin(v));
        out.bags[x] = std::move(lifted);
    }
    return out;
}

} // namespace lpc

#endif
