#include "wsmkit/split_decomp.hpp"

#include <algorithm>
#include <sstream>

#include "wsmkit/errors.hpp"

namespace wsmkit {

namespace {

// kind + star center (label-local); -1 center for non-stars.
std::pair<node_kind, int> classify_label(const graph& lg) {
    const int d = lg.n();
    if (lg.edge_count() == d * (d - 1) / 2) return {node_kind::clique, -1};
    if (lg.edge_count() == d - 1) {
        for (int v = 0; v < d; ++v)
            if (lg.degree(v) == d - 1) return {node_kind::star, v};
    }
    return {node_kind::prime, -1};
}

int marker_toward(const split_tree& t, int x, int y) {
    const auto& node = t.nodes[x];
    for (int m = 0; m < node.degree(); ++m)
        if (node.attach[m].node == y) return m;
    return -1;
}

} // namespace

const char* to_string(node_kind k) {
    switch (k) {
        case node_kind::prime: return "prime";
        case node_kind::clique: return "clique";
        case node_kind::star: return "star";
    }
    return "?";
}

// ---- splits and split-modules ----------------------------------------------

std::optional<split> is_split(const graph& g, const vertex_set& a) {
    if (!is_connected(g)) throw precondition_violation("is_split requires a connected graph");
    if (a.size() != g.n()) throw argument_error("vertex set does not match the graph");
    const int cnt = a.count();
    if (cnt == 0 || cnt == g.n())
        throw argument_error("is_split needs a nonempty proper subset");
    split s;
    s.a = a;
    s.b = g.vertices() - a;
    s.frontier_b = neighbors_of_set(g, s.a); // inside b
    s.frontier_a = neighbors_of_set(g, s.b); // inside a
    std::optional<vertex_set> shared;
    for (int v : s.frontier_a.to_vector()) {
        vertex_set nb = g.neighbors(v) & s.b;
        if (!shared) {
            shared = nb;
        } else if (*shared != nb) {
            return std::nullopt;
        }
    }
    return s;
}

std::optional<split_module> is_split_module(const graph& g, const vertex_set& a) {
    const int n = g.n();
    if (a.size() != n) throw argument_error("vertex set does not match the graph");
    split_module m;
    m.vertices = a;
    m.frontier = vertex_set(n);
    if (a.count() == 0) return m;
    auto comps = connected_components(g);
    if (a.count() == n) {
        m.component = comps.size() == 1 ? 0 : -1;
        return m;
    }
    int ci = -1;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (a.intersects(comps[i])) {
            if (!a.is_subset_of(comps[i])) return std::nullopt; // spans components
            ci = int(i);
            break;
        }
    }
    m.component = ci;
    vertex_set rest = comps[ci] - a;
    if (rest.empty()) return m; // a whole component; empty frontier
    m.frontier = neighbors_of_set(g, rest); // members of a seen from outside
    std::optional<vertex_set> shared;
    for (int v : m.frontier.to_vector()) {
        vertex_set nb = g.neighbors(v) - a;
        if (!shared) {
            shared = nb;
        } else if (*shared != nb) {
            return std::nullopt;
        }
    }
    return m;
}

std::optional<vertex_set> find_nontrivial_split(const graph& g) {
    if (!is_connected(g))
        throw precondition_violation("find_nontrivial_split requires a connected graph");
    const int n = g.n();
    if (n < 4) return std::nullopt;

    // Reachability closure for hypothesis "u inside, w outside, u-w a
    // cross-frontier edge": x inside forces every conflicting y inside. When
    // x is adjacent to w the cross-edge rule pins x's outside neighborhood to
    // N(u), so conflicts are N(x) xor N(u); otherwise x may have no outside
    // neighbors at all, so conflicts are all of N(x).
    auto closure = [&](int u, int w, int z) {
        vertex_set inside = vertex_set::of(n, {u, z});
        std::vector<int> todo = {u, z};
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            vertex_set conf =
                g.has_edge(x, w) ? (g.neighbors(x) ^ g.neighbors(u)) : g.neighbors(x);
            conf -= inside;
            for (int y : conf.to_vector()) {
                inside.set(y);
                todo.push_back(y);
            }
        }
        return inside;
    };

    for (int u = 0; u < n; ++u) {
        for (int w : g.neighbors(u).to_vector()) {
            for (int z = 0; z < n; ++z) {
                if (z == u || z == w) continue;
                vertex_set a = closure(u, w, z);
                if (a.test(w) || a.count() > n - 2) continue;
                if (!is_split(g, a))
                    throw structural_error("internal error: split candidate failed verification");
                return a;
            }
        }
    }
    return std::nullopt;
}

// ---- split tree construction -------------------------------------------------

namespace {

struct tree_builder {
    split_tree t;
    std::vector<tree_port> pending; // slot -> port once the marker lands in a node

    int new_slot() {
        pending.push_back({});
        return int(pending.size()) - 1;
    }

    // tags: per vertex of q, a graph vertex id (>= 0) or -(slot+1) for a
    // marker vertex that will be wired to its opposite half later.
    void build_rec(const graph& q, const std::vector<int>& tags) {
        if (auto side = find_nontrivial_split(q)) {
            int slot_a = new_slot();
            int slot_b = new_slot();
            build_quotient(q, tags, *side, slot_a);
            build_quotient(q, tags, q.vertices() - *side, slot_b);
            const tree_port pa = pending[slot_a], pb = pending[slot_b];
            t.nodes[pa.node].attach[pa.marker] = pb;
            t.nodes[pb.node].attach[pb.marker] = pa;
            return;
        }
        // No non-trivial split: q becomes one internal node labeled by q.
        const int x = int(t.nodes.size());
        split_tree_node node;
        node.label = q;
        auto [kind, center] = classify_label(q);
        node.kind = kind;
        node.center = center;
        node.attach.resize(q.n());
        t.nodes.push_back(std::move(node));
        for (int i = 0; i < q.n(); ++i) {
            if (tags[i] >= 0) {
                t.nodes[x].attach[i] = tree_port{-1, -1, tags[i]};
                t.leaf_attach[tags[i]] = tree_port{x, i, -1};
            } else {
                pending[-(tags[i] + 1)] = tree_port{x, i, -1};
            }
        }
    }

    // Quotient of one split side: the induced side plus a marker vertex
    // adjacent to the side's frontier.
    void build_quotient(const graph& q, const std::vector<int>& tags, const vertex_set& side,
                        int slot) {
        auto [sub, imap] = induced_subgraph(q, side);
        vertex_set frontier = neighbors_of_set(q, q.vertices() - side); // inside side
        auto edges = sub.edges();
        const int mk = sub.n();
        for (int i = 0; i < mk; ++i)
            if (frontier.test(imap[i])) edges.emplace_back(i, mk);
        graph qa = graph::from_edges(mk + 1, edges);
        std::vector<int> tags_a(mk + 1);
        for (int i = 0; i < mk; ++i) tags_a[i] = tags[imap[i]];
        tags_a[mk] = -(slot + 1);
        build_rec(qa, tags_a);
    }
};

bool joinable_pair(const split_tree& t, int x, int y) {
    const auto& nx = t.nodes[x];
    const auto& ny = t.nodes[y];
    if (nx.kind == node_kind::clique && ny.kind == node_kind::clique) return true;
    if (nx.kind == node_kind::star && ny.kind == node_kind::star) {
        const bool cx = marker_toward(t, x, y) == nx.center;
        const bool cy = marker_toward(t, y, x) == ny.center;
        return cx != cy; // center-to-leaf only
    }
    return false;
}

void reduce(split_tree& t) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int x = 0; x < int(t.nodes.size()) && !changed; ++x) {
            for (int m = 0; m < t.nodes[x].degree() && !changed; ++m) {
                const int y = t.nodes[x].attach[m].node;
                if (y >= 0 && joinable_pair(t, x, y)) {
                    t = node_join(t, x, y);
                    changed = true;
                }
            }
        }
    }
}

} // namespace

split_tree build_split_tree(const graph& g) {
    tree_builder b;
    b.t.n = g.n();
    b.t.leaf_attach.resize(g.n());
    for (const auto& comp : connected_components(g)) {
        const int cn = comp.count();
        if (cn == 1) continue; // lone leaf
        if (cn == 2) {
            auto vs = comp.to_vector();
            b.t.leaf_attach[vs[0]] = tree_port{-1, -1, vs[1]};
            b.t.leaf_attach[vs[1]] = tree_port{-1, -1, vs[0]};
            continue;
        }
        auto [cg, imap] = induced_subgraph(g, comp);
        b.build_rec(cg, imap);
    }
    reduce(b.t);
    return b.t;
}

// ---- structural validation ----------------------------------------------------

void validate_split_tree(const split_tree& t) {
    const int nn = int(t.nodes.size());
    if (int(t.leaf_attach.size()) != t.n)
        throw structural_error("leaf attachment table does not match vertex count");
    auto check_port = [&](const tree_port& p, const tree_port& back, const std::string& where) {
        if (p.is_leaf()) {
            if (p.leaf >= t.n) throw structural_error(where + ": leaf id out of range");
            if (!(t.leaf_attach[p.leaf] == back))
                throw structural_error(where + ": asymmetric wiring to leaf " + std::to_string(p.leaf));
        } else {
            if (p.node < 0 || p.node >= nn || p.marker < 0 ||
                p.marker >= t.nodes[p.node].degree())
                throw structural_error(where + ": port out of range");
            if (!(t.nodes[p.node].attach[p.marker] == back))
                throw structural_error(where + ": asymmetric wiring");
        }
    };
    for (int x = 0; x < nn; ++x) {
        const auto& node = t.nodes[x];
        const int d = node.degree();
        const std::string where = "node " + std::to_string(x);
        if (d < 3) throw structural_error(where + ": internal nodes need degree >= 3");
        if (int(node.attach.size()) != d)
            throw structural_error(where + ": marker/attachment count mismatch");
        if (!is_connected(node.label)) throw structural_error(where + ": label not connected");
        auto [kind, center] = classify_label(node.label);
        if (kind != node.kind)
            throw structural_error(where + ": kind tag does not match the label graph");
        const int want_center = (kind == node_kind::star) ? center : -1;
        if (node.center != want_center) throw structural_error(where + ": bad star center");
        for (int m = 0; m < d; ++m) {
            const tree_port& p = node.attach[m];
            if (p.is_none()) throw structural_error(where + ": marker without a tree edge");
            if (p.node == x) throw structural_error(where + ": marker wired to its own node");
            check_port(p, tree_port{x, m, -1}, where);
        }
    }
    for (int v = 0; v < t.n; ++v) {
        const tree_port& p = t.leaf_attach[v];
        if (p.is_none()) continue;
        if (p.is_leaf() && p.leaf == v) throw structural_error("leaf wired to itself");
        check_port(p, tree_port{-1, -1, v}, "leaf " + std::to_string(v));
    }
    // Forest check over entities (internal nodes, then leaves).
    const int ents = nn + t.n;
    std::vector<std::vector<int>> adj(ents);
    long long edge_ends = 0;
    auto ent_of = [&](const tree_port& p) { return p.is_leaf() ? nn + p.leaf : p.node; };
    for (int x = 0; x < nn; ++x)
        for (const auto& p : t.nodes[x].attach) {
            adj[x].push_back(ent_of(p));
            ++edge_ends;
        }
    for (int v = 0; v < t.n; ++v)
        if (!t.leaf_attach[v].is_none()) {
            adj[nn + v].push_back(ent_of(t.leaf_attach[v]));
            ++edge_ends;
        }
    int comps = 0;
    std::vector<char> seen(ents, 0);
    for (int s = 0; s < ents; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int e = stack.back();
            stack.pop_back();
            for (int f : adj[e])
                if (!seen[f]) {
                    seen[f] = 1;
                    stack.push_back(f);
                }
        }
    }
    if (edge_ends / 2 != ents - comps) throw structural_error("split tree contains a cycle");
}

// ---- accessibility -------------------------------------------------------------

graph accessibility_graph(const split_tree& t) {
    validate_split_tree(t);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < t.n; ++v) {
        const tree_port start = t.leaf_attach[v];
        if (start.is_none()) continue;
        if (start.is_leaf()) {
            if (start.leaf > v) edges.emplace_back(v, start.leaf);
            continue;
        }
        // BFS over markers reached through tree edges; each label-edge hop
        // followed by a tree-edge hop extends an alternating path.
        std::vector<std::vector<char>> seen(t.nodes.size());
        for (size_t x = 0; x < t.nodes.size(); ++x) seen[x].assign(t.nodes[x].degree(), 0);
        std::vector<tree_port> stack = {start};
        seen[start.node][start.marker] = 1;
        while (!stack.empty()) {
            const tree_port p = stack.back();
            stack.pop_back();
            const auto& node = t.nodes[p.node];
            for (int j : node.label.neighbors(p.marker).to_vector()) {
                const tree_port q = node.attach[j];
                if (q.is_leaf()) {
                    if (q.leaf > v) edges.emplace_back(v, q.leaf);
                } else if (!seen[q.node][q.marker]) {
                    seen[q.node][q.marker] = 1;
                    stack.push_back(q);
                }
            }
        }
    }
    return graph::from_edges(t.n, edges);
}

bool is_reduced(const split_tree& t) {
    for (int x = 0; x < int(t.nodes.size()); ++x)
        for (int m = 0; m < t.nodes[x].degree(); ++m) {
            const int y = t.nodes[x].attach[m].node;
            if (y > x && joinable_pair(t, x, y)) return false;
        }
    return true;
}

// ---- node-join / node-split ------------------------------------------------------

split_tree node_join(const split_tree& t, int node_x, int node_y) {
    const int nn = int(t.nodes.size());
    if (node_x < 0 || node_x >= nn || node_y < 0 || node_y >= nn || node_x == node_y)
        throw argument_error("node_join needs two distinct internal nodes");
    const int q = marker_toward(t, node_x, node_y);
    const int qp = marker_toward(t, node_y, node_x);
    if (q < 0 || qp < 0) throw argument_error("node_join needs tree-adjacent nodes");

    const auto& nx = t.nodes[node_x];
    const auto& ny = t.nodes[node_y];
    const int dx = nx.degree(), dy = ny.degree();
    // Kept markers keep their relative order: x's first, then y's.
    std::vector<int> xm(dx, -1), ym(dy, -1);
    int next = 0;
    for (int m = 0; m < dx; ++m)
        if (m != q) xm[m] = next++;
    for (int m = 0; m < dy; ++m)
        if (m != qp) ym[m] = next++;

    std::vector<std::pair<int, int>> ledges;
    for (auto [a, b] : nx.label.edges())
        if (a != q && b != q) ledges.emplace_back(xm[a], xm[b]);
    for (auto [a, b] : ny.label.edges())
        if (a != qp && b != qp) ledges.emplace_back(ym[a], ym[b]);
    for (int a : nx.label.neighbors(q).to_vector())
        for (int b : ny.label.neighbors(qp).to_vector()) ledges.emplace_back(xm[a], ym[b]);

    split_tree_node z;
    z.label = graph::from_edges(next, ledges);
    auto [kind, center] = classify_label(z.label);
    z.kind = kind;
    z.center = center;
    z.attach.resize(next);
    for (int m = 0; m < dx; ++m)
        if (m != q) z.attach[xm[m]] = nx.attach[m];
    for (int m = 0; m < dy; ++m)
        if (m != qp) z.attach[ym[m]] = ny.attach[m];

    // New node list: everything but x and y in order, the merged node last.
    // Every port still carries old ids at this point; remap all of them once.
    split_tree out;
    out.n = t.n;
    out.leaf_attach = t.leaf_attach;
    std::vector<int> id_map(nn, -1);
    for (int i = 0; i < nn; ++i) {
        if (i == node_x || i == node_y) continue;
        id_map[i] = int(out.nodes.size());
        out.nodes.push_back(t.nodes[i]);
    }
    const int zid = int(out.nodes.size());
    out.nodes.push_back(std::move(z));
    auto remap = [&](tree_port& p) {
        if (p.node == node_x) {
            p = tree_port{zid, xm[p.marker], -1};
        } else if (p.node == node_y) {
            p = tree_port{zid, ym[p.marker], -1};
        } else if (p.node >= 0) {
            p.node = id_map[p.node];
        }
    };
    for (auto& node : out.nodes)
        for (auto& p : node.attach) remap(p);
    for (auto& p : out.leaf_attach) remap(p);
    return out;
}

split_tree node_split(const split_tree& t, int node, const std::vector<int>& part_markers) {
    const int nn = int(t.nodes.size());
    if (node < 0 || node >= nn) throw argument_error("node_split: no such node");
    const auto& nx = t.nodes[node];
    if (nx.kind == node_kind::prime)
        throw argument_error("node_split applies to clique or star nodes only");
    const int d = nx.degree();
    std::vector<char> in_part(d, 0);
    for (int m : part_markers) {
        if (m < 0 || m >= d || in_part[m])
            throw argument_error("node_split: invalid marker in partition");
        in_part[m] = 1;
    }
    std::vector<int> part, rest;
    for (int m = 0; m < d; ++m) (in_part[m] ? part : rest).push_back(m);
    if (part.size() < 2 || rest.size() < 2)
        throw argument_error("node_split: both sides need at least 2 markers");

    // The fresh marker takes the last label position on each side. Cliques
    // split into cliques; a star keeps its center on one side while the far
    // side's fresh marker becomes that side's center.
    auto make_side = [&](const std::vector<int>& keep) {
        const int dd = int(keep.size()) + 1;
        std::vector<std::pair<int, int>> ledges;
        int center = -1;
        if (nx.kind == node_kind::clique) {
            for (int i = 0; i < dd; ++i)
                for (int j = i + 1; j < dd; ++j) ledges.emplace_back(i, j);
        } else {
            center = dd - 1; // fresh marker, unless the original center is here
            for (size_t i = 0; i < keep.size(); ++i)
                if (keep[i] == nx.center) center = int(i);
            for (int i = 0; i < dd; ++i)
                if (i != center) ledges.emplace_back(center, i);
        }
        split_tree_node side;
        side.label = graph::from_edges(dd, ledges);
        side.kind = nx.kind;
        side.center = center;
        side.attach.resize(dd); // fresh marker wired by the caller after remapping
        for (size_t i = 0; i < keep.size(); ++i) side.attach[i] = nx.attach[keep[i]];
        return side;
    };
    split_tree_node s1 = make_side(part);
    split_tree_node s2 = make_side(rest);

    split_tree out;
    out.n = t.n;
    out.leaf_attach = t.leaf_attach;
    std::vector<int> id_map(nn, -1);
    for (int i = 0; i < nn; ++i) {
        if (i == node) continue;
        id_map[i] = int(out.nodes.size());
        out.nodes.push_back(t.nodes[i]);
    }
    const int id1 = int(out.nodes.size());
    const int id2 = id1 + 1;
    out.nodes.push_back(std::move(s1));
    out.nodes.push_back(std::move(s2));

    std::vector<int> pos(d, -1), side_id(d, -1);
    for (size_t i = 0; i < part.size(); ++i) {
        pos[part[i]] = int(i);
        side_id[part[i]] = id1;
    }
    for (size_t i = 0; i < rest.size(); ++i) {
        pos[rest[i]] = int(i);
        side_id[rest[i]] = id2;
    }
    auto remap = [&](tree_port& p) {
        if (p.node == node) {
            p = tree_port{side_id[p.marker], pos[p.marker], -1};
        } else if (p.node >= 0) {
            p.node = id_map[p.node];
        }
    };
    for (auto& nd : out.nodes)
        for (auto& p : nd.attach)
            if (!p.is_none()) remap(p);
    for (auto& p : out.leaf_attach) remap(p);
    // Wire the fresh markers together only now, so the remap above cannot
    // mistake their brand-new ids for references to the old node.
    out.nodes[id1].attach[part.size()] = tree_port{id2, int(rest.size()), -1};
    out.nodes[id2].attach[rest.size()] = tree_port{id1, int(part.size()), -1};
    return out;
}

// ---- tree-path machinery ----------------------------------------------------------

vertex_set leaves_beyond(const split_tree& t, int node, int marker) {
    if (node < 0 || node >= int(t.nodes.size()) || marker < 0 ||
        marker >= t.nodes[node].degree())
        throw argument_error("leaves_beyond: no such marker");
    vertex_set out(t.n);
    std::vector<char> seen(t.nodes.size(), 0);
    seen[node] = 1;
    std::vector<tree_port> stack = {t.nodes[node].attach[marker]};
    while (!stack.empty()) {
        const tree_port p = stack.back();
        stack.pop_back();
        if (p.is_leaf()) {
            out.set(p.leaf);
            continue;
        }
        if (seen[p.node]) continue;
        seen[p.node] = 1;
        for (int m = 0; m < t.nodes[p.node].degree(); ++m)
            if (m != p.marker) stack.push_back(t.nodes[p.node].attach[m]);
    }
    return out;
}

namespace {

struct path_step {
    int node;
    int entry; // marker toward the first leaf
    int exit;  // marker toward the second leaf
};

// Unique tree path: internal nodes between the two leaves, in order, with the
// markers the path enters and leaves through.
bool walk_to_leaf(const split_tree& t, const tree_port& p, int target,
                  std::vector<path_step>& path) {
    if (p.is_leaf()) return p.leaf == target;
    const auto& node = t.nodes[p.node];
    for (int m = 0; m < node.degree(); ++m) {
        if (m == p.marker) continue;
        if (walk_to_leaf(t, node.attach[m], target, path)) {
            path.push_back({p.node, p.marker, m});
            return true;
        }
    }
    return false;
}

} // namespace

std::vector<split_module> minimal_split_modules_containing(const graph& g, const split_tree& t,
                                                           int v, int w) {
    if (t.n != g.n()) throw structural_error("split tree does not belong to this graph");
    if (v < 0 || v >= g.n() || w < 0 || w >= g.n() || v == w)
        throw argument_error("minimal_split_modules_containing needs two distinct vertices");
    auto comps = connected_components(g);
    int ci = -1;
    for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i].test(v)) ci = int(i);
    if (ci < 0 || !comps[ci].test(w))
        throw precondition_violation("vertices lie in different connected components");
    const vertex_set& comp = comps[ci];

    std::vector<path_step> path;
    const tree_port start = t.leaf_attach[v];
    if (start.is_none() || !walk_to_leaf(t, start, w, path))
        throw structural_error("split tree does not connect the two vertices");
    std::reverse(path.begin(), path.end());

    auto make_module = [&](const vertex_set& cand) {
        split_module m;
        m.vertices = cand;
        m.component = ci;
        m.frontier = neighbors_of_set(g, g.vertices() - cand);
        return m;
    };

    std::vector<split_module> out;
    if (path.empty()) {
        // Two leaves joined directly: the whole (two-vertex) component.
        out.push_back(make_module(comp));
        return out;
    }
    for (const auto& step : path) {
        const auto& node = t.nodes[step.node];
        if (node.kind == node_kind::prime) {
            // Each non-path marker cuts one branch off the component.
            for (int c = 0; c < node.degree(); ++c) {
                if (c == step.entry || c == step.exit) continue;
                out.push_back(make_module(comp - leaves_beyond(t, step.node, c)));
            }
        } else {
            // Degenerate nodes: carving the two path markers (conceptually a
            // node-split down to 3 markers) drops all other branches at once.
            vertex_set drop(t.n);
            for (int c = 0; c < node.degree(); ++c)
                if (c != step.entry && c != step.exit) drop |= leaves_beyond(t, step.node, c);
            out.push_back(make_module(comp - drop));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const split_module& a, const split_module& b) { return a.vertices < b.vertices; });
    return out;
}

std::vector<split_module> minimal_split_modules_containing(const graph& g, int v, int w) {
    return minimal_split_modules_containing(g, build_split_tree(g), v, w);
}

// ---- canonical form ------------------------------------------------------------------

split_tree canonical_split_tree(const split_tree& t) {
    validate_split_tree(t);
    const int nn = int(t.nodes.size());

    std::vector<std::vector<std::vector<int>>> beyond(nn);
    for (int x = 0; x < nn; ++x) {
        beyond[x].resize(t.nodes[x].degree());
        for (int m = 0; m < t.nodes[x].degree(); ++m)
            beyond[x][m] = leaves_beyond(t, x, m).to_vector();
    }
    // Markers ordered by the smallest leaf beyond them (branches are disjoint,
    // so the minima are distinct); nodes ordered by their sorted branch lists.
    std::vector<std::vector<int>> morder(nn);
    for (int x = 0; x < nn; ++x) {
        morder[x].resize(t.nodes[x].degree());
        for (int m = 0; m < t.nodes[x].degree(); ++m) morder[x][m] = m;
        std::sort(morder[x].begin(), morder[x].end(),
                  [&](int a, int b) { return beyond[x][a][0] < beyond[x][b][0]; });
    }
    std::vector<std::vector<std::vector<int>>> keys(nn);
    for (int x = 0; x < nn; ++x) {
        keys[x] = beyond[x];
        std::sort(keys[x].begin(), keys[x].end());
    }
    std::vector<int> norder(nn);
    for (int x = 0; x < nn; ++x) norder[x] = x;
    std::sort(norder.begin(), norder.end(), [&](int a, int b) { return keys[a] < keys[b]; });

    std::vector<int> id_map(nn, -1);
    for (int r = 0; r < nn; ++r) id_map[norder[r]] = r;
    std::vector<std::vector<int>> mpos(nn); // mpos[x][old marker] = new position
    for (int x = 0; x < nn; ++x) {
        mpos[x].resize(t.nodes[x].degree());
        for (int p = 0; p < t.nodes[x].degree(); ++p) mpos[x][morder[x][p]] = p;
    }

    auto remap_port = [&](const tree_port& p) {
        if (p.is_none() || p.is_leaf()) return p;
        return tree_port{id_map[p.node], mpos[p.node][p.marker], -1};
    };

    split_tree out;
    out.n = t.n;
    out.leaf_attach.resize(t.n);
    out.nodes.resize(nn);
    for (int r = 0; r < nn; ++r) {
        const int x = norder[r];
        const auto& old = t.nodes[x];
        split_tree_node node;
        std::vector<std::pair<int, int>> ledges;
        for (auto [a, b] : old.label.edges()) ledges.emplace_back(mpos[x][a], mpos[x][b]);
        node.label = graph::from_edges(old.degree(), ledges);
        node.kind = old.kind;
        node.center = old.center >= 0 ? mpos[x][old.center] : -1;
        node.attach.resize(old.degree());
        for (int m = 0; m < old.degree(); ++m) node.attach[mpos[x][m]] = remap_port(old.attach[m]);
        out.nodes[r] = std::move(node);
    }
    for (int v = 0; v < t.n; ++v) out.leaf_attach[v] = remap_port(t.leaf_attach[v]);
    return out;
}

// ---- serialization ---------------------------------------------------------------------

nlohmann::ordered_json split_tree_to_json(const split_tree& t) {
    const split_tree c = canonical_split_tree(t);
    nlohmann::ordered_json j;
    j["n"] = c.n;
    j["nodes"] = nlohmann::ordered_json::array();
    for (const auto& node : c.nodes) {
        nlohmann::ordered_json nj;
        nj["kind"] = to_string(node.kind);
        if (node.kind == node_kind::star) nj["center"] = node.center;
        nlohmann::ordered_json lab;
        lab["n"] = node.degree();
        lab["edges"] = nlohmann::ordered_json::array();
        for (auto [a, b] : node.label.edges()) lab["edges"].push_back({a, b});
        nj["label"] = std::move(lab);
        nj["edge_map"] = nlohmann::ordered_json::array();
        for (const auto& p : node.attach) {
            nlohmann::ordered_json pj;
            if (p.is_leaf()) {
                pj["leaf"] = p.leaf;
            } else {
                pj["node"] = p.node;
                pj["marker"] = p.marker;
            }
            nj["edge_map"].push_back(std::move(pj));
        }
        j["nodes"].push_back(std::move(nj));
    }
    j["leaf_links"] = nlohmann::ordered_json::array();
    for (int v = 0; v < c.n; ++v) {
        const auto& p = c.leaf_attach[v];
        if (p.is_leaf() && p.leaf > v) j["leaf_links"].push_back({v, p.leaf});
    }
    return j;
}

split_tree split_tree_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("nodes"))
        throw structural_error("split tree JSON must carry \"n\" and \"nodes\"");
    split_tree t;
    t.n = j.at("n").get<int>();
    if (t.n < 0) throw structural_error("negative vertex count");
    t.leaf_attach.resize(t.n);
    const auto& nodes = j.at("nodes");
    if (!nodes.is_array()) throw structural_error("\"nodes\" must be an array");
    for (const auto& nj : nodes) {
        split_tree_node node;
        const std::string kind = nj.at("kind").get<std::string>();
        if (kind == "prime") {
            node.kind = node_kind::prime;
        } else if (kind == "clique") {
            node.kind = node_kind::clique;
        } else if (kind == "star") {
            node.kind = node_kind::star;
        } else {
            throw structural_error("unknown node kind: " + kind);
        }
        const auto& lab = nj.at("label");
        std::vector<std::pair<int, int>> ledges;
        for (const auto& e : lab.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw structural_error("label edges must be pairs");
            ledges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        node.label = graph::from_edges(lab.at("n").get<int>(), ledges);
        node.center = nj.contains("center") ? nj.at("center").get<int>() : -1;
        const auto& em = nj.at("edge_map");
        if (!em.is_array() || int(em.size()) != node.label.n())
            throw structural_error("edge_map must list one entry per label vertex");
        for (const auto& pj : em) {
            tree_port p;
            if (pj.contains("leaf")) {
                p.leaf = pj.at("leaf").get<int>();
            } else {
                p.node = pj.at("node").get<int>();
                p.marker = pj.at("marker").get<int>();
            }
            node.attach.push_back(p);
        }
        t.nodes.push_back(std::move(node));
    }
    // Derive leaf attachments from node ports, then leaf-leaf links.
    for (int x = 0; x < int(t.nodes.size()); ++x)
        for (int m = 0; m < t.nodes[x].degree(); ++m) {
            const auto& p = t.nodes[x].attach[m];
            if (!p.is_leaf()) continue;
            if (p.leaf < 0 || p.leaf >= t.n) throw structural_error("leaf id out of range");
            if (!t.leaf_attach[p.leaf].is_none())
                throw structural_error("leaf " + std::to_string(p.leaf) + " attached twice");
            t.leaf_attach[p.leaf] = tree_port{x, m, -1};
        }
    if (j.contains("leaf_links")) {
        for (const auto& e : j.at("leaf_links")) {
            if (!e.is_array() || e.size() != 2)
                throw structural_error("leaf_links must be pairs");
            int a = e[0].get<int>(), b = e[1].get<int>();
            if (a < 0 || a >= t.n || b < 0 || b >= t.n || a == b)
                throw structural_error("invalid leaf link");
            if (!t.leaf_attach[a].is_none() || !t.leaf_attach[b].is_none())
                throw structural_error("leaf link clashes with other attachments");
            t.leaf_attach[a] = tree_port{-1, -1, b};
            t.leaf_attach[b] = tree_port{-1, -1, a};
        }
    }
    validate_split_tree(t);
    return t;
}

std::string split_tree_to_dot(const split_tree& t) {
    const split_tree c = canonical_split_tree(t);
    std::ostringstream out;
    out << "graph split_tree {\n";
    for (int x = 0; x < int(c.nodes.size()); ++x) {
        const auto& node = c.nodes[x];
        out << "  subgraph cluster_n" << x << " {\n";
        out << "    label=\"" << to_string(node.kind) << "\";\n";
        for (int m = 0; m < node.degree(); ++m) {
            out << "    n" << x << "_m" << m << " [shape=point";
            if (m == node.center) out << ", xlabel=\"center\"";
            out << "];\n";
        }
        for (auto [a, b] : node.label.edges())
            out << "    n" << x << "_m" << a << " -- n" << x << "_m" << b << " [style=dashed];\n";
        out << "  }\n";
    }
    for (int v = 0; v < c.n; ++v) out << "  v" << v << " [shape=circle, label=\"" << v << "\"];\n";
    for (int x = 0; x < int(c.nodes.size()); ++x)
        for (int m = 0; m < c.nodes[x].degree(); ++m) {
            const auto& p = c.nodes[x].attach[m];
            if (p.is_leaf()) {
                out << "  n" << x << "_m" << m << " -- v" << p.leaf << ";\n";
            } else if (p.node > x || (p.node == x && p.marker > m)) {
                out << "  n" << x << "_m" << m << " -- n" << p.node << "_m" << p.marker << ";\n";
            }
        }
    for (int v = 0; v < c.n; ++v) {
        const auto& p = c.leaf_attach[v];
        if (p.is_leaf() && p.leaf > v) out << "  v" << v << " -- v" << p.leaf << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace wsmkit
