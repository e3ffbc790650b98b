#ifndef LPC_PATTERNS_HPP
#define LPC_PATTERNS_HPP

#include <string>
#include <vector>

#include "lpc/graph.hpp"

namespace lpc {

// Small graphs used as forbidden patterns H. They are plain Graph values;
// the alias only documents intent at call sites.
using PatternGraph = Graph;

inline Graph path_graph(int k) {
    Graph g(k);
    for (VertexId v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int k) {
    if (k < 3) fail(ErrorKind::Internal, "cycle needs at least 3 vertices");
    Graph g = path_graph(k);
    g.add_edge(0, k - 1);
    return g;
}

inline Graph complete_graph(int n) {
    Graph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite_graph(int a, int b) {
    Graph g(a + b);
    for (VertexId u = 0; u < a; ++u)
        for (VertexId v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

inline Graph claw() { return complete_bipartite_graph(1, 3); }

// Disjoint union with dense relabelling: a's vertices first, then b's.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out;
    std::map<VertexId, VertexId> ra, rb;
    VertexId next = 0;
    for (VertexId v : a.vertices()) ra[v] = next++;
    for (VertexId v : b.vertices()) rb[v] = next++;
    for (VertexId v = 0; v < next; ++v) out.add_vertex(v);
    for (const auto& [u, v] : a.edge_list()) out.add_edge(ra[u], ra[v]);
    for (const auto& [u, v] : b.edge_list()) out.add_edge(rb[u], rb[v]);
    return out;
}

// Disjoint union of paths with the given vertex counts, e.g. {2,4} = P2+P4.
inline Graph linear_forest_graph(const std::vector<int>& path_sizes) {
    Graph out(0);
    for (int k : path_sizes) out = disjoint_union(out, path_graph(k));
    return out;
}

inline Graph p2_plus_p4() { return linear_forest_graph({2, 4}); }
inline Graph p1_plus_p2_plus_p3() { return linear_forest_graph({1, 2, 3}); }
inline Graph p1_plus_p5() { return linear_forest_graph({1, 5}); }

inline Graph sp1_plus_p4(int s) {
    std::vector<int> sizes(s, 1);
    sizes.push_back(4);
    return linear_forest_graph(sizes);
}

inline Graph k3_plus_p1() { return disjoint_union(complete_graph(3), path_graph(1)); }

// Parses "P<k>" and "C<k>" pattern names as used in witness files.
inline Graph pattern_by_name(const std::string& name) {
    if (name.size() < 2 || (name[0] != 'P' && name[0] != 'C'))
        fail(ErrorKind::ParseError, "unknown pattern name '" + name + "'");
    int k = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            fail(ErrorKind::ParseError, "unknown pattern name '" + name + "'");
        k = k * 10 + (name[i] - '0');
    }
    if (k <= 0) fail(ErrorKind::ParseError, "unknown pattern name '" + name + "'");
    return name[0] == 'P' ? path_graph(k) : cycle_graph(k);
}

} // namespace lpc

#endif
