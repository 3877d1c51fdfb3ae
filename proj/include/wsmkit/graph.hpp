#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wsmkit/bitset.hpp"
#include "wsmkit/errors.hpp"

namespace wsmkit {

using vertex_set = bitset;

// Simple undirected graph on dense vertex indices 0..n-1 with bitset adjacency
// rows. Graphs are immutable after construction: operations that shrink or
// transform a graph return a new one (plus an index map where relevant), which
// keeps oracle comparisons and recursive decompositions straightforward.
class graph {
  public:
    graph() = default;
    explicit graph(int n) : n_(n), adj_(n, bitset(n)) {}

    static graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return adj_[u].test(v); }
    const vertex_set& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    vertex_set vertices() const { return bitset::full(n_); }

    // Edges as (u,v) pairs with u < v, ordered lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const graph& o) const { return !(*this == o); }

  private:
    void add_edge(int u, int v);

    int n_ = 0;
    std::vector<bitset> adj_;
};

// N(a): all neighbors of members of a, excluding a itself.
vertex_set neighbors_of_set(const graph& g, const vertex_set& a);

// Subgraph induced on a, with vertices renumbered densely in increasing order.
// index_map[new] = old; the inverse is injective by construction.
struct induced_result {
    graph g;
    std::vector<int> index_map; // new index -> old index
};
induced_result induced_subgraph(const graph& g, const vertex_set& a);

// Convenience: g - x, i.e. the subgraph induced on V \ x.
induced_result delete_vertices(const graph& g, const vertex_set& x);

// Maximal connected vertex sets, ordered by smallest contained vertex.
std::vector<vertex_set> connected_components(const graph& g);

bool is_connected(const graph& g);

// Induced-subgraph search: an injective map m with
//   uv in E(h)  <=>  m(u)m(v) in E(g)   for all u != v.
// Exhaustive backtracking in vertex-index order; intended for small h
// (forbidden induced subgraphs are fixed-size).
std::optional<std::vector<int>> contains_induced(const graph& g, const graph& h);

graph complement(const graph& g);

// Small fixed graphs used throughout tests and built-in obstruction sets.
graph make_path(int n);
graph make_cycle(int n);
graph make_clique(int n);
graph make_star(int leaves); // vertex 0 is the center
graph make_edgeless(int n);

} // namespace wsmkit
