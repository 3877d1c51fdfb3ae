#include "wsmkit/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace wsmkit {

namespace {

bool blank_or_comment(const std::string& line, char comment_char) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == comment_char;
    }
    return true;
}

} // namespace

graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line, '#')) continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n >> m) || n < 0 || m < 0)
                throw parse_error("expected header \"n m\"", lineno);
            continue;
        }
        long u, v;
        if (!(ls >> u >> v)) throw parse_error("expected edge \"u v\"", lineno);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("vertex out of range 0.." + std::to_string(n - 1), lineno);
        if (u == v) throw parse_error("self-loop", lineno);
        edges.emplace_back(int(u), int(v));
    }
    if (n < 0) throw parse_error("missing header \"n m\"", lineno + 1);
    if (long(edges.size()) != m)
        throw parse_error("header announced " + std::to_string(m) + " edges, found " +
                              std::to_string(edges.size()),
                          lineno + 1);
    return graph::from_edges(int(n), edges);
}

graph parse_dimacs(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank_or_comment(line, 'c')) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col"))
                throw parse_error("expected \"p edge n m\"", lineno);
        } else if (tag == "e") {
            if (n < 0) throw parse_error("edge before \"p\" header", lineno);
            long u, v;
            if (!(ls >> u >> v)) throw parse_error("expected \"e u v\"", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw parse_error("vertex out of range 1.." + std::to_string(n), lineno);
            if (u == v) throw parse_error("self-loop", lineno);
            edges.emplace_back(int(u - 1), int(v - 1));
        } else {
            throw parse_error("unknown line tag \"" + tag + "\"", lineno);
        }
    }
    if (n < 0) throw parse_error("missing \"p edge\" header", lineno + 1);
    return graph::from_edges(int(n), edges);
}

graph parse_graph(std::istream& in, graph_format fmt) {
    if (fmt == graph_format::edge_list) return parse_edge_list(in);
    if (fmt == graph_format::dimacs) return parse_dimacs(in);
    // auto-detect: buffer the stream, look at the first meaningful character
    std::stringstream buf;
    buf << in.rdbuf();
    std::string content = buf.str();
    for (char c : content) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        std::istringstream replay(content);
        if (c == 'p' || c == 'c' || c == 'e') return parse_dimacs(replay);
        return parse_edge_list(replay);
    }
    throw parse_error("empty input", 1);
}

graph load_graph(const std::string& path, graph_format fmt) {
    std::ifstream in(path);
    if (!in) throw argument_error("cannot open input file: " + path);
    if (fmt == graph_format::auto_detect) {
        auto dot = path.rfind('.');
        if (dot != std::string::npos) {
            std::string ext = path.substr(dot + 1);
            if (ext == "dimacs" || ext == "col") fmt = graph_format::dimacs;
        }
    }
    return parse_graph(in, fmt);
}

std::string emit_edge_list(const graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << g.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << u << " " << v << "\n";
    return out.str();
}

std::string emit_dimacs(const graph& g) {
    std::ostringstream out;
    auto edges = g.edges();
    out << "p edge " << g.n() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) out << "e " << (u + 1) << " " << (v + 1) << "\n";
    return out.str();
}

std::string emit_dot(const graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace wsmkit
