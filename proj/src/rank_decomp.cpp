#include "wsmkit/rank_decomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

#include "wsmkit/errors.hpp"

namespace wsmkit {

namespace {

// Tree of one connected component in local ids: leaves are 0..nloc-1 (the
// component-local vertex ids), internal nodes follow in creation order.
struct local_tree {
    int node_count = 0;
    std::vector<std::pair<int, int>> edges;
};

// Subset DP machinery for one connected component (n <= 18, so vertex sets
// fit in uint32_t masks). The cut-rank memo persists across k values.
struct component_dp {
    int n;
    uint32_t full;
    std::vector<uint32_t> adj;
    std::vector<int8_t> cut_rank_memo;

    explicit component_dp(const graph& g)
        : n(g.n()), full((uint32_t(1) << n) - 1), adj(n, 0),
          cut_rank_memo(size_t(1) << n, -1) {
        for (int v = 0; v < n; ++v) adj[v] = uint32_t(g.neighbors(v).as_mask());
    }

    int cut_rank_of(uint32_t s) {
        int8_t& memo = cut_rank_memo[s];
        if (memo >= 0) return memo;
        const uint32_t outside = full & ~s;
        uint32_t rows[32];
        int nrows = 0;
        for (uint32_t t = s; t; t &= t - 1) {
            uint32_t r = adj[std::countr_zero(t)] & outside;
            if (r) rows[nrows++] = r;
        }
        int rank = 0;
        for (int i = 0; i < nrows; ++i) {
            if (!rows[i]) continue;
            uint32_t low = rows[i] & (~rows[i] + 1);
            ++rank;
            for (int j = i + 1; j < nrows; ++j)
                if (rows[j] & low) rows[j] ^= rows[i];
        }
        memo = int8_t(rank);
        return rank;
    }

    // Feasibility table for the bound k. A set is feasible when its cut-rank
    // is <= k and it is a singleton or splits into two feasible parts. The
    // stored choice is the numerically smallest feasible first part of each
    // feasible set. Empty optional when the full set is infeasible (rw > k).
    std::optional<std::vector<uint32_t>> split_choices(int k) {
        std::vector<uint8_t> feasible(size_t(1) << n, 0);
        std::vector<uint32_t> choice(size_t(1) << n, 0);
        for (uint32_t s = 1; s <= full; ++s) {
            if (cut_rank_of(s) > k) continue; // prune: never usable as a part
            if ((s & (s - 1)) == 0) {
                feasible[s] = 1;
                continue;
            }
            // Proper nonempty submasks in increasing numeric order.
            for (uint32_t m = (~s + 1) & s; m != s; m = ((m | ~s) + 1) & s) {
                if (feasible[m] && feasible[s ^ m]) {
                    feasible[s] = 1;
                    choice[s] = m;
                    break;
                }
            }
        }
        if (!feasible[full]) return std::nullopt;
        return choice;
    }
};

// Turns the stored split choices into an unrooted tree. The top split yields
// two subtrees joined by a direct edge (no degree-2 root); every deeper split
// yields an internal node of degree 3.
local_tree extract_tree(const std::vector<uint32_t>& choice, int nloc) {
    local_tree t;
    t.node_count = nloc;
    if (nloc <= 1) return t;
    auto build = [&](auto&& self, uint32_t s) -> int {
        if ((s & (s - 1)) == 0) return std::countr_zero(s);
        uint32_t m = choice[s];
        int a = self(self, m);
        int b = self(self, s ^ m);
        int x = t.node_count++;
        t.edges.emplace_back(x, a);
        t.edges.emplace_back(x, b);
        return x;
    };
    const uint32_t full = (uint32_t(1) << nloc) - 1;
    uint32_t m = choice[full];
    int a = build(build, m);
    int b = build(build, full ^ m);
    t.edges.emplace_back(a, b);
    return t;
}

// Assembles per-component trees into one decomposition. Leaf node ids equal
// the global vertex ids; internal ids follow component by component; trees
// are then chained through freshly subdivided edges (subdivision points take
// the final ids), keeping every internal degree at exactly 3.
rank_decomposition assemble(const graph& g, const std::vector<local_tree>& trees,
                            const std::vector<std::vector<int>>& index_maps) {
    rank_decomposition rd;
    const int n = g.n();
    rd.node_count = n;
    rd.leaf_of_vertex.resize(n);
    for (int v = 0; v < n; ++v) rd.leaf_of_vertex[v] = v;

    std::vector<std::vector<std::pair<int, int>>> comp_edges(trees.size());
    for (size_t c = 0; c < trees.size(); ++c) {
        const auto& im = index_maps[c];
        const int nloc = int(im.size());
        const int base = rd.node_count;
        rd.node_count += trees[c].node_count - nloc;
        auto remap = [&](int local) { return local < nloc ? im[local] : base + (local - nloc); };
        for (auto [a, b] : trees[c].edges) comp_edges[c].emplace_back(remap(a), remap(b));
    }

    std::vector<std::pair<int, int>> acc;
    int acc_solo = -1; // the lone leaf when the accumulated tree has no edges yet
    if (!trees.empty()) {
        acc = std::move(comp_edges[0]);
        if (acc.empty()) acc_solo = index_maps[0][0];
    }
    auto subdivide_front = [&](std::vector<std::pair<int, int>>& edges) {
        int s = rd.node_count++;
        auto [x, y] = edges.front();
        edges.front() = {x, s};
        edges.emplace_back(s, y);
        return s;
    };
    for (size_t c = 1; c < trees.size(); ++c) {
        auto& nxt = comp_edges[c];
        const int nxt_solo = nxt.empty() ? index_maps[c][0] : -1;
        if (acc_solo >= 0 && nxt_solo >= 0) {
            acc = {{acc_solo, nxt_solo}};
        } else if (acc_solo >= 0) {
            int s = subdivide_front(nxt);
            acc = std::move(nxt);
            acc.emplace_back(s, acc_solo);
        } else if (nxt_solo >= 0) {
            int s = subdivide_front(acc);
            acc.emplace_back(s, nxt_solo);
        } else {
            int sa = subdivide_front(acc);
            int sb = subdivide_front(nxt);
            acc.insert(acc.end(), nxt.begin(), nxt.end());
            acc.emplace_back(sa, sb);
        }
        acc_solo = -1;
    }

    for (auto& [a, b] : acc)
        if (a > b) std::swap(a, b);
    std::sort(acc.begin(), acc.end());
    rd.edges = std::move(acc);
    return rd;
}

void check_cap(const graph& g, int max_exact_n) {
    if (g.n() > max_exact_n) {
        throw cap_exceeded("graph has " + std::to_string(g.n()) +
                           " vertices; exact rank-width cap is " + std::to_string(max_exact_n));
    }
}

} // namespace

width_report decomposition_width(const graph& g, const rank_decomposition& rd) {
    const int n = g.n();
    if (int(rd.leaf_of_vertex.size()) != n) {
        throw structural_error("decomposition maps " + std::to_string(rd.leaf_of_vertex.size()) +
                               " vertices but the graph has " + std::to_string(n));
    }
    std::vector<int> vertex_of_node(rd.node_count, -1);
    for (int v = 0; v < n; ++v) {
        int leaf = rd.leaf_of_vertex[v];
        if (leaf < 0 || leaf >= rd.node_count)
            throw structural_error("leaf node id out of range for vertex " + std::to_string(v));
        if (vertex_of_node[leaf] != -1)
            throw structural_error("two vertices map to leaf node " + std::to_string(leaf));
        vertex_of_node[leaf] = v;
    }
    if (int(rd.edges.size()) != std::max(0, rd.node_count - 1))
        throw structural_error("node/edge counts do not form a tree");

    std::vector<std::vector<std::pair<int, int>>> adj(rd.node_count); // (neighbor, edge index)
    for (size_t i = 0; i < rd.edges.size(); ++i) {
        auto [a, b] = rd.edges[i];
        if (a < 0 || a >= rd.node_count || b < 0 || b >= rd.node_count || a == b)
            throw structural_error("invalid tree edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
        adj[a].emplace_back(b, int(i));
        adj[b].emplace_back(a, int(i));
    }
    for (int x = 0; x < rd.node_count; ++x) {
        const size_t deg = adj[x].size();
        const bool is_leaf = vertex_of_node[x] != -1;
        if (is_leaf && deg > 1)
            throw structural_error("leaf node " + std::to_string(x) + " has degree " + std::to_string(deg));
        if (is_leaf && deg == 0 && rd.node_count > 1)
            throw structural_error("leaf node " + std::to_string(x) + " is disconnected");
        if (!is_leaf && deg != 3)
            throw structural_error("internal node " + std::to_string(x) + " has degree " +
                                   std::to_string(deg) + " (must be 3)");
    }
    if (rd.node_count == 0 || rd.edges.empty()) return {0, -1};

    // Iterative DFS from node 0: connectivity check plus, for every edge, the
    // set of graph vertices on the child side. Edge count == node_count - 1
    // and full reachability together certify a tree.
    std::vector<vertex_set> below(rd.edges.size(), vertex_set(n));
    std::vector<int> parent_edge(rd.node_count, -1), order;
    std::vector<char> seen(rd.node_count, 0);
    order.reserve(rd.node_count);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        order.push_back(x);
        for (auto [y, e] : adj[x]) {
            if (seen[y]) continue;
            seen[y] = 1;
            parent_edge[y] = e;
            stack.push_back(y);
        }
    }
    if (int(order.size()) != rd.node_count)
        throw structural_error("decomposition tree is not connected");
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int x = *it;
        int pe = parent_edge[x];
        if (pe < 0) continue;
        if (vertex_of_node[x] != -1) below[pe].set(vertex_of_node[x]);
        for (auto [y, e] : adj[x])
            if (e != pe && parent_edge[y] == e) below[pe] |= below[e];
    }

    width_report report{0, 0};
    for (size_t i = 0; i < rd.edges.size(); ++i) {
        int w = cut_rank(g, below[i]);
        if (w > report.width) {
            report.width = w;
            report.widest_edge = int(i);
        }
    }
    return report;
}

std::optional<rank_decomposition> rankwidth_at_most(const graph& g, int k, int max_exact_n) {
    if (k < 0) throw argument_error("rank-width bound k must be nonnegative");
    check_cap(g, max_exact_n);
    std::vector<local_tree> trees;
    std::vector<std::vector<int>> maps;
    for (const auto& cset : connected_components(g)) {
        auto [cg, im] = induced_subgraph(g, cset);
        if (cg.n() == 1) {
            trees.push_back({1, {}});
        } else {
            component_dp dp(cg);
            auto choice = dp.split_choices(k);
            if (!choice) return std::nullopt;
            trees.push_back(extract_tree(*choice, cg.n()));
        }
        maps.push_back(std::move(im));
    }
    return assemble(g, trees, maps);
}

rankwidth_result rankwidth(const graph& g, int max_exact_n) {
    check_cap(g, max_exact_n);
    std::vector<local_tree> trees;
    std::vector<std::vector<int>> maps;
    int width = 0;
    for (const auto& cset : connected_components(g)) {
        auto [cg, im] = induced_subgraph(g, cset);
        if (cg.n() == 1) {
            trees.push_back({1, {}});
        } else {
            component_dp dp(cg);
            bool done = false;
            for (int k = 0; k <= cg.n() && !done; ++k) {
                if (auto choice = dp.split_choices(k)) {
                    trees.push_back(extract_tree(*choice, cg.n()));
                    width = std::max(width, k);
                    done = true;
                }
            }
            if (!done) throw structural_error("rank-width search failed to terminate");
        }
        maps.push_back(std::move(im));
    }
    return {width, assemble(g, trees, maps)};
}

nlohmann::ordered_json rank_decomposition_to_json(const rank_decomposition& rd) {
    nlohmann::ordered_json j;
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [a, b] : rd.edges) j["edges"].push_back({a, b});
    j["leaf_map"] = nlohmann::ordered_json::object();
    for (size_t v = 0; v < rd.leaf_of_vertex.size(); ++v)
        j["leaf_map"][std::to_string(v)] = rd.leaf_of_vertex[v];
    return j;
}

rank_decomposition rank_decomposition_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("edges") || !j.contains("leaf_map"))
        throw structural_error("decomposition JSON must carry \"edges\" and \"leaf_map\"");
    rank_decomposition rd;
    int max_id = -1;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw structural_error("decomposition edges must be integer pairs");
        int a = e[0].get<int>(), b = e[1].get<int>();
        rd.edges.emplace_back(a, b);
        max_id = std::max({max_id, a, b});
    }
    const auto& lm = j.at("leaf_map");
    if (!lm.is_object()) throw structural_error("leaf_map must be an object");
    std::vector<std::pair<int, int>> pairs;
    for (auto it = lm.begin(); it != lm.end(); ++it) {
        int v;
        try {
            size_t pos = 0;
            v = std::stoi(it.key(), &pos);
            if (pos != it.key().size()) throw std::invalid_argument(it.key());
        } catch (const std::exception&) {
            throw structural_error("leaf_map key is not a vertex id: " + it.key());
        }
        if (v < 0 || !it.value().is_number_integer())
            throw structural_error("leaf_map entry for vertex " + it.key() + " is invalid");
        int node = it.value().get<int>();
        pairs.emplace_back(v, node);
        max_id = std::max(max_id, node);
    }
    rd.leaf_of_vertex.assign(pairs.size(), -1);
    for (auto [v, node] : pairs) {
        if (v >= int(pairs.size()) || rd.leaf_of_vertex[v] != -1)
            throw structural_error("leaf_map keys must cover each vertex exactly once");
        rd.leaf_of_vertex[v] = node;
    }
    rd.node_count = max_id + 1;
    return rd;
}

std::string rank_decomposition_to_dot(const rank_decomposition& rd) {
    std::vector<int> vertex_of_node(rd.node_count, -1);
    for (size_t v = 0; v < rd.leaf_of_vertex.size(); ++v) {
        int leaf = rd.leaf_of_vertex[v];
        if (leaf >= 0 && leaf < rd.node_count) vertex_of_node[leaf] = int(v);
    }
    std::ostringstream out;
    out << "graph rank_decomposition {\n";
    for (int x = 0; x < rd.node_count; ++x) {
        if (vertex_of_node[x] >= 0)
            out << "  t" << x << " [shape=circle, label=\"" << vertex_of_node[x] << "\"];\n";
        else
            out << "  t" << x << " [shape=point];\n";
    }
    for (auto [a, b] : rd.edges) out << "  t" << a << " -- t" << b << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace wsmkit
