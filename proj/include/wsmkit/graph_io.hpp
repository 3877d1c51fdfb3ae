#pragma once

#include <iosfwd>
#include <string>

#include "wsmkit/graph.hpp"

namespace wsmkit {

enum class graph_format { auto_detect, edge_list, dimacs };

// Edge-list text format: first non-comment line "n m", then m lines "u v"
// (0-based). Lines that are blank or start with '#' are ignored.
graph parse_edge_list(std::istream& in);

// DIMACS: "c" comments, one "p edge n m" header, "e u v" lines (1-based).
graph parse_dimacs(std::istream& in);

// Load from a file; auto-detection looks at the first meaningful character
// ('p'/'c'/'e' => DIMACS) and at a .dimacs/.col extension.
graph load_graph(const std::string& path, graph_format fmt = graph_format::auto_detect);
graph parse_graph(std::istream& in, graph_format fmt);

std::string emit_edge_list(const graph& g);
std::string emit_dimacs(const graph& g);
std::string emit_dot(const graph& g);

} // namespace wsmkit
