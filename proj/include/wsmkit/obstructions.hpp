#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsmkit/graph.hpp"

namespace wsmkit {

// A hereditary graph class given by its finite list of forbidden induced
// subgraphs: a graph belongs to the class iff no obstruction embeds into it
// as an induced subgraph.
struct obstruction_set {
    std::string name;
    std::vector<graph> obstructions;
};

// One concrete occurrence of an obstruction inside a host graph.
struct obstruction_hit {
    int index = -1;             // position in the obstruction list
    std::vector<int> embedding; // image of obstruction vertex i in the host
    vertex_set vertices;        // the same image as a set
};

// First occurrence in fixed order: obstructions scanned in list order, and
// for each the lexicographically first embedding. nullopt when the graph is
// free of all obstructions.
std::optional<obstruction_hit> find_obstruction(const graph& g, const obstruction_set& f);
bool is_f_free(const graph& g, const obstruction_set& f);

// Built-in classes.
obstruction_set split_graph_obstructions();   // {2K_2, C_4, C_5}
obstruction_set triangle_free_obstructions(); // {K_3}
obstruction_set p5_free_obstructions();       // {P_5}
// Graphs of maximum degree <= d: all non-isomorphic (d+2)-vertex graphs that
// contain a dominating (universal) vertex, i.e. the supergraphs of K_{1,d+1}.
obstruction_set max_degree_obstructions(int d);

// Name lookup used by the command line: the fixed names above plus the
// parametric family "max-degree-<d>". nullopt for unknown names.
std::optional<obstruction_set> obstruction_set_by_name(const std::string& name);
const std::vector<std::string>& builtin_obstruction_set_names();

// JSON: {"name": ..., "obstructions": [{"n": ..., "edges": [[u,v],...]},...]}
nlohmann::ordered_json obstruction_set_to_json(const obstruction_set& f);
obstruction_set obstruction_set_from_json(const nlohmann::ordered_json& j);

} // namespace wsmkit
