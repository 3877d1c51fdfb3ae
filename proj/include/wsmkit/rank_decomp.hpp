#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wsmkit/gf2.hpp"
#include "wsmkit/graph.hpp"

namespace wsmkit {

// Unrooted decomposition tree for a graph on n vertices: every graph vertex
// corresponds to exactly one leaf (degree-1 node), every other node has degree
// exactly 3. Nodes are dense ids 0..node_count-1. Degenerate conventions:
// n = 0 -> empty tree; n = 1 -> a single leaf node and no edges.
struct rank_decomposition {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaf_of_vertex; // vertex -> leaf node id (a bijection onto leaves)
};

struct width_report {
    int width = 0;
    // Index into rank_decomposition::edges of an edge achieving the width;
    // smallest index on ties, -1 when the tree has no edges.
    int widest_edge = -1;
};

// Validates the tree shape (leaf bijection, internal degrees exactly 3,
// connectivity, edge count) and evaluates the width: the maximum over tree
// edges of the cut-rank of the leaf bipartition induced by removing the edge.
// Throws structural_error when the decomposition does not fit the graph.
width_report decomposition_width(const graph& g, const rank_decomposition& rd);

inline constexpr int default_rankwidth_cap = 18;

// Decides rank-width <= k exactly; when true, returns a witness decomposition
// of width <= k. Subset dynamic program: a vertex set is k-feasible when its
// cut-rank is <= k and it is a singleton or splits into two k-feasible parts;
// rw(g) <= k iff the full vertex set is k-feasible. The witness always uses
// the numerically smallest feasible first part (sets read as bit masks), so
// results are deterministic. Graphs with more than max_exact_n vertices are
// rejected with cap_exceeded.
std::optional<rank_decomposition> rankwidth_at_most(const graph& g, int k,
                                                    int max_exact_n = default_rankwidth_cap);

struct rankwidth_result {
    int width = 0;
    rank_decomposition decomposition; // witness of width exactly `width`
};

// Exact rank-width: the smallest k with rankwidth_at_most(g, k). Disconnected
// graphs take the maximum over components; their component trees are linked
// through subdivision points so all internal degrees stay 3 (cross-component
// cuts have rank 0, so the joined width is the component maximum).
rankwidth_result rankwidth(const graph& g, int max_exact_n = default_rankwidth_cap);

// JSON object {"edges": [[a,b],...], "leaf_map": {"vertex": leafNode, ...}}.
nlohmann::ordered_json rank_decomposition_to_json(const rank_decomposition& rd);
rank_decomposition rank_decomposition_from_json(const nlohmann::ordered_json& j);

std::string rank_decomposition_to_dot(const rank_decomposition& rd);

} // namespace wsmkit
