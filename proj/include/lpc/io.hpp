#ifndef LPC_IO_HPP
#define LPC_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lpc/graph.hpp"
#include "lpc/hardness.hpp"
#include "lpc/patterns.hpp"
#include "lpc/witness.hpp"

namespace lpc {

namespace detail {

// Next data line: comments start with '#', blank lines are skipped.
inline bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        size_t i = line.find_first_not_of(" \t\r");
        if (i == std::string::npos) continue;
        if (line[i] == '#') continue;
        return true;
    }
    return false;
}

} // namespace detail

// Text graph format: "n m" then m lines "u v" with 0-based indices.
inline Graph read_graph(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) fail(ErrorKind::ParseError, "missing graph header");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0) fail(ErrorKind::ParseError, "bad graph header '" + line + "'");
    Graph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        if (!detail::next_data_line(in, line)) fail(ErrorKind::ParseError, "expected more edges");
        std::istringstream es(line);
        long long u = -1, v = -1;
        if (!(es >> u >> v)) fail(ErrorKind::ParseError, "bad edge line '" + line + "'");
        if (u < 0 || u >= n || v < 0 || v >= n) fail(ErrorKind::ParseError, "edge index out of range");
        if (u == v) fail(ErrorKind::ParseError, "self-loop");
        if (g.has_edge(static_cast<VertexId>(u), static_cast<VertexId>(v)))
            fail(ErrorKind::ParseError, "duplicate edge");
        g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return g;
}

inline Graph read_graph_string(const std::string& s) {
    std::istringstream in(s);
    return read_graph(in);
}

// Writer emits edges sorted lexicographically; vertex ids are renumbered
// densely in sorted order (the identity on freshly built graphs), which makes
// generator output round-trip bit-exactly.
inline void write_graph(std::ostream& out, const Graph& g) {
    VertexSet vs = g.vertices();
    std::map<VertexId, int> dense;
    for (size_t i = 0; i < vs.size(); ++i) dense[vs[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edge_list()) {
        int a = dense[u], b = dense[v];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges.begin(), edges.end());
    out << vs.size() << " " << edges.size() << "\n";
    for (const auto& [u, v] : edges) out << u << " " << v << "\n";
}

inline std::string write_graph_string(const Graph& g) {
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

// Hypergraph format: "m n" then n lines "k e_1 ... e_k" (0-based elements).
inline Hypergraph read_hypergraph(std::istream& in) {
    std::string line;
    if (!detail::next_data_line(in, line)) fail(ErrorKind::ParseError, "missing hypergraph header");
    std::istringstream head(line);
    long long m = -1, n = -1;
    if (!(head >> m >> n) || m <= 0 || n < 0) fail(ErrorKind::ParseError, "bad hypergraph header");
    Hypergraph h;
    h.m = static_cast<int>(m);
    for (long long i = 0; i < n; ++i) {
        if (!detail::next_data_line(in, line)) fail(ErrorKind::ParseError, "expected more hyperedges");
        std::istringstream es(line);
        long long k = -1;
        if (!(es >> k) || k <= 0) fail(ErrorKind::ParseError, "bad hyperedge size");
        VertexSet s;
        for (long long j = 0; j < k; ++j) {
            long long e = -1;
            if (!(es >> e) || e < 0 || e >= m) fail(ErrorKind::ParseError, "element index out of range");
            s.push_back(static_cast<int>(e));
        }
        h.hyperedges.push_back(sorted_unique(s));
    }
    h.validate();
    return h;
}

inline void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << h.m << " " << h.hyperedges.size() << "\n";
    for (const auto& s : h.hyperedges) {
        out << s.size();
        for (int e : s) out << " " << e;
        out << "\n";
    }
}

// Witness JSON: {"pattern":"P4","bags":[[ids],...]} with bags in
// pattern-path order.
inline nlohmann::json witness_to_json(const std::string& pattern_name, const WitnessStructure& w) {
    nlohmann::json bags = nlohmann::json::array();
    for (const auto& [x, bag] : w.bags) bags.push_back(bag);
    return nlohmann::json{{"pattern", pattern_name}, {"bags", bags}};
}

struct NamedWitness {
    std::string pattern_name;
    WitnessStructure witness;
};

inline NamedWitness witness_from_json(const nlohmann::json& j) {
    if (!j.contains("pattern") || !j.contains("bags")) fail(ErrorKind::ParseError, "witness JSON needs pattern and bags");
    NamedWitness out;
    out.pattern_name = j["pattern"].get<std::string>();
    Graph pattern = pattern_by_name(out.pattern_name);
    const auto& bags = j["bags"];
    if (!bags.is_array() || bags.size() != static_cast<size_t>(pattern.num_vertices()))
        fail(ErrorKind::ParseError, "bag count does not match pattern");
    VertexId x = 0;
    for (const auto& bag : bags) {
        VertexSet s;
        for (const auto& v : bag) s.push_back(v.get<VertexId>());
        out.witness.bags[x++] = sorted_unique(s);
    }
    return out;
}

inline void write_roles(std::ostream& out, const RoleMap& roles) {
    for (const auto& [v, role] : roles) out << v << " " << role << "\n";
}

} // namespace lpc

#endif
