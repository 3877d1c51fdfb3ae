#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsmkit/graph.hpp"

namespace wsmkit {

// ---- splits and split-modules ----------------------------------------------

// A split of a connected graph: bipartition {a, b} whose cross edges form a
// complete bipartite graph between the two frontiers. frontier_a = N(b) (the
// a-vertices with neighbors in b), frontier_b = N(a). Trivial splits (a side
// of size <= 1) are splits too; non-trivial needs both sides >= 2.
struct split {
    vertex_set a, b;
    vertex_set frontier_a, frontier_b;
    bool non_trivial() const { return a.count() >= 2 && b.count() >= 2; }
};

// A split-module: one side of a split of some connected component, plus the
// conventional members: the empty set, every whole component, and the full
// vertex set (component = -1 when the set spans several components, i.e. for
// the full vertex set of a disconnected graph, and for the empty set).
struct split_module {
    vertex_set vertices;
    int component = -1; // index into connected_components(g)
    vertex_set frontier; // members with neighbors outside the module
};

// Checks the split condition for a against its complement. Requires g
// connected (precondition_violation otherwise) and a a nonempty proper subset
// (argument_error otherwise).
std::optional<split> is_split(const graph& g, const vertex_set& a);

// Split-module test; g may be disconnected, a may be anything.
std::optional<split_module> is_split_module(const graph& g, const vertex_set& a);

// Finds some non-trivial split of a connected graph, or none when every split
// is trivial (the graph is prime, or too small). Search: for each hypothesized
// cross-frontier edge (u, w) — u inside the candidate side, w outside — a pair
// (x, y) is in conflict when x inside / y outside would violate the complete-
// bipartite cross-edge rule; conflicts form a static digraph, so the minimal
// valid side containing a seed set is plain reachability. Seeds {u, z} over
// all z cover every non-trivial split. Deterministic: first hit in (u, w, z)
// scan order.
std::optional<vertex_set> find_nontrivial_split(const graph& g);

// ---- split trees (graph-labeled trees) --------------------------------------

enum class node_kind { prime, clique, star };
const char* to_string(node_kind k);

// One endpoint of a tree edge: either a marker of an internal node or a leaf
// (a graph vertex). Default-constructed port = no edge (lone leaf).
struct tree_port {
    int node = -1;
    int marker = -1;
    int leaf = -1;
    bool is_leaf() const { return leaf >= 0; }
    bool is_none() const { return node < 0 && leaf < 0; }
    bool operator==(const tree_port& o) const {
        return node == o.node && marker == o.marker && leaf == o.leaf;
    }
};

// Internal node: a label graph on its markers 0..label.n()-1; each marker is
// the endpoint of exactly one incident tree edge (attach[m] = the far end).
struct split_tree_node {
    node_kind kind = node_kind::prime;
    graph label;
    int center = -1; // star only: marker index of the center
    std::vector<tree_port> attach;
    int degree() const { return label.n(); }
};

// A split-tree forest: one tree per connected component of the host graph.
// Leaves are the graph vertices. Components with one vertex are a lone leaf;
// components with two vertices are two leaves joined directly by a tree edge;
// larger components have internal nodes of degree >= 3.
struct split_tree {
    int n = 0;
    std::vector<split_tree_node> nodes;
    std::vector<tree_port> leaf_attach;
};

// Structural checks: wiring symmetric and complete, labels connected with
// degree >= 3, kinds consistent with label shape, star centers valid, and the
// tree relation acyclic. Throws structural_error.
void validate_split_tree(const split_tree& t);

// Unique reduced split tree of g (forest for disconnected g): recursive
// decomposition along non-trivial splits down to split-free quotients, then
// exhaustive node-joins of adjacent clique/clique pairs and star/star pairs
// joined center-to-leaf.
split_tree build_split_tree(const graph& g);

// Graph on the leaves with edges between leaf pairs linked by a path that
// alternates tree edges and label edges (starting and ending with tree edges).
graph accessibility_graph(const split_tree& t);

// No node-join would keep every label degenerate-or-prime minimal: adjacent
// clique/clique pairs and center-to-leaf star/star pairs are absent.
bool is_reduced(const split_tree& t);

// Merges two tree-adjacent internal nodes: their shared markers disappear and
// all label edges between the neighborhoods of the two vanished markers are
// added. Preserves the accessibility graph. The merged node takes the last id.
split_tree node_join(const split_tree& t, int node_x, int node_y);

// Inverse of node_join on a degenerate (clique or star) node: part_markers
// (>= 2 markers, leaving >= 2 behind) move to a fresh node; fresh marker pair
// forms the connecting tree edge. Cliques split into cliques; for stars the
// center stays on its side and the far side gets its fresh marker as center.
// The two new nodes take the last ids (part side first).
split_tree node_split(const split_tree& t, int node, const std::vector<int>& part_markers);

// Graph vertices whose leaves lie beyond the tree edge at the given marker,
// seen from the node.
vertex_set leaves_beyond(const split_tree& t, int node, int marker);

// All inclusion-minimal split-modules containing both v and w: walk the tree
// path between the two leaves; every internal node on the path contributes
// the component minus the leaves hanging off its non-path markers (degenerate
// nodes: all non-path markers at once; prime nodes: one candidate per
// non-path marker). When the path has no internal node the whole component is
// the unique minimal module. Sorted by (size, lexicographic).
std::vector<split_module> minimal_split_modules_containing(const graph& g, int v, int w);
std::vector<split_module> minimal_split_modules_containing(const graph& g, const split_tree& t,
                                                           int v, int w);

// Canonical presentation: markers of every node ordered by the smallest leaf
// beyond them, nodes ordered by their sorted lists of beyond-leaf sets.
split_tree canonical_split_tree(const split_tree& t);

// JSON: {"n": ..., "nodes": [{kind, center?, label: {n, edges}, edge_map:
// [{leaf} | {node, marker}]}], "leaf_links": [[u,v],...]} in canonical order.
nlohmann::ordered_json split_tree_to_json(const split_tree& t);
split_tree split_tree_from_json(const nlohmann::ordered_json& j);

// DOT: one subgraph cluster per internal node (label edges dashed inside),
// solid tree edges between clusters and leaves.
std::string split_tree_to_dot(const split_tree& t);

} // namespace wsmkit
