#include "wsmkit/graph.hpp"

#include <algorithm>
#include <string>

namespace wsmkit {

void graph::add_edge(int u, int v) {
    if (u == v) throw structural_error("self-loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
}

graph graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw structural_error("edge endpoint out of range: " + std::to_string(u) + " " +
                                   std::to_string(v));
        g.add_edge(u, v);
    }
    return g;
}

int graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].count();
    return twice / 2;
}

std::vector<std::pair<int, int>> graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u].to_vector())
            if (u < v) out.emplace_back(u, v);
    return out;
}

vertex_set neighbors_of_set(const graph& g, const vertex_set& a) {
    bitset nb(g.n());
    for (int v : a.to_vector()) nb |= g.neighbors(v);
    return nb - a;
}

induced_result induced_subgraph(const graph& g, const vertex_set& a) {
    std::vector<int> map = a.to_vector();
    std::vector<int> inv(g.n(), -1);
    for (size_t i = 0; i < map.size(); ++i) inv[map[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < map.size(); ++i)
        for (int w : (g.neighbors(map[i]) & a).to_vector())
            if (inv[w] > int(i)) edges.emplace_back(int(i), inv[w]);
    return {graph::from_edges(int(map.size()), edges), std::move(map)};
}

induced_result delete_vertices(const graph& g, const vertex_set& x) {
    return induced_subgraph(g, g.vertices() - x);
}

std::vector<vertex_set> connected_components(const graph& g) {
    std::vector<vertex_set> comps;
    bitset seen(g.n());
    for (int s = 0; s < g.n(); ++s) {
        if (seen.test(s)) continue;
        bitset comp(g.n());
        comp.set(s);
        bitset frontier = comp;
        while (frontier.any()) {
            bitset next(g.n());
            for (int v : frontier.to_vector()) next |= g.neighbors(v);
            next -= comp;
            comp |= next;
            frontier = next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const graph& g) {
    return g.n() <= 1 || connected_components(g).size() == 1;
}

namespace {

bool extend_embedding(const graph& g, const graph& h, std::vector<int>& map, bitset& used, int next) {
    if (next == h.n()) return true;
    for (int cand = 0; cand < g.n(); ++cand) {
        if (used.test(cand)) continue;
        bool ok = true;
        for (int prev = 0; prev < next; ++prev) {
            if (h.has_edge(prev, next) != g.has_edge(map[prev], cand)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[next] = cand;
        used.set(cand);
        if (extend_embedding(g, h, map, used, next + 1)) return true;
        used.reset(cand);
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> contains_induced(const graph& g, const graph& h) {
    if (h.n() == 0) return std::vector<int>{};
    if (h.n() > g.n()) return std::nullopt;
    std::vector<int> map(h.n(), -1);
    bitset used(g.n());
    if (extend_embedding(g, h, map, used, 0)) return map;
    return std::nullopt;
}

graph complement(const graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return graph::from_edges(g.n(), edges);
}

graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return graph::from_edges(n, edges);
}

graph make_cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (n >= 3) edges.emplace_back(n - 1, 0);
    return graph::from_edges(n, edges);
}

graph make_clique(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return graph::from_edges(n, edges);
}

graph make_star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return graph::from_edges(leaves + 1, edges);
}

graph make_edgeless(int n) { return graph(n); }

} // namespace wsmkit
