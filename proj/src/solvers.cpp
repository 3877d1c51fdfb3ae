#include "wsmkit/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <future>
#include <vector>

namespace wsmkit {

// ---- exact branch and bound -------------------------------------------------

namespace {

struct vc_engine {
    const graph& g;

    int matching_lb(vertex_set mask) const {
        int lb = 0;
        while (true) {
            int u = -1, v = -1;
            for (int x : mask.to_vector()) {
                vertex_set nb = g.neighbors(x) & mask;
                if (nb.any()) {
                    u = x;
                    v = nb.lowest();
                    break;
                }
            }
            if (u < 0) break;
            mask.reset(u);
            mask.reset(v);
            ++lb;
        }
        return lb;
    }

    int max_degree_vertex(const vertex_set& mask) const {
        int best = -1, dbest = 0;
        for (int x : mask.to_vector()) {
            const int d = (g.neighbors(x) & mask).count();
            if (d > dbest) {
                dbest = d;
                best = x;
            }
        }
        return best; // -1 when g[mask] is edgeless
    }

    void optimize(const vertex_set& mask, int taken, int& best) const {
        if (taken >= best) return;
        const int v = max_degree_vertex(mask);
        if (v < 0) {
            best = taken;
            return;
        }
        if (taken + matching_lb(mask) >= best) return;
        const vertex_set nb = g.neighbors(v) & mask;
        vertex_set m1 = mask;
        m1.reset(v);
        optimize(m1, taken + 1, best); // v in the cover
        vertex_set m2 = m1 - nb;       // v out: all its neighbors in
        optimize(m2, taken + nb.count(), best);
    }

    bool decide(const vertex_set& mask, int budget) const {
        const int v = max_degree_vertex(mask);
        if (v < 0) return true;
        if (budget <= 0) return false;
        if (matching_lb(mask) > budget) return false;
        const vertex_set nb = g.neighbors(v) & mask;
        vertex_set m1 = mask;
        m1.reset(v);
        if (decide(m1, budget - 1)) return true;
        if (nb.count() <= budget) {
            vertex_set m2 = m1 - nb;
            if (decide(m2, budget - nb.count())) return true;
        }
        return false;
    }

    // Exists a cover of size <= budget containing `forced` and avoiding
    // `banned`? Banned vertices push their neighbors into the cover.
    bool feasible(vertex_set forced, const vertex_set& banned, int budget) const {
        for (int x : banned.to_vector()) {
            const vertex_set nb = g.neighbors(x);
            if ((nb & banned).any()) return false; // an edge no cover may take
            forced |= nb;
        }
        forced -= banned;
        if (forced.count() > budget) return false;
        const vertex_set mask = g.vertices() - forced - banned;
        return decide(mask, budget - forced.count());
    }
};

struct clq_engine {
    const graph& g;

    void max_size(const vertex_set& cand, int rsize, int& best) const {
        if (cand.empty()) {
            best = std::max(best, rsize);
            return;
        }
        if (rsize + cand.count() <= best) return;
        // pivot: keep the candidate vertex with the largest candidate degree
        int pivot = -1, dbest = -1;
        for (int u : cand.to_vector()) {
            const int d = (g.neighbors(u) & cand).count();
            if (d > dbest) {
                dbest = d;
                pivot = u;
            }
        }
        vertex_set ext = cand - g.neighbors(pivot);
        vertex_set rest = cand;
        for (int v : ext.to_vector()) {
            max_size(rest & g.neighbors(v), rsize + 1, best);
            rest.reset(v);
        }
    }

    int omega(const vertex_set& cand) const {
        int best = 0;
        max_size(cand, 0, best);
        return best;
    }
};

} // namespace

vertex_set bounded_rw_exact_vc(const graph& g, int max_exact_n) {
    if (g.n() > max_exact_n) throw cap_exceeded("exact vertex-cover search is capped");
    const vc_engine eng{g};
    int opt = g.n();
    eng.optimize(g.vertices(), 0, opt);
    // lexicographically smallest optimum, committed vertex by vertex
    vertex_set forced(g.n()), banned(g.n());
    for (int v = 0; v < g.n() && forced.count() < opt; ++v) {
        vertex_set trial = forced;
        trial.set(v);
        if (eng.feasible(trial, banned, opt)) {
            forced = trial;
        } else {
            banned.set(v);
        }
    }
    return forced;
}

vertex_set bounded_rw_exact_clq(const graph& g, int max_exact_n) {
    if (g.n() > max_exact_n) throw cap_exceeded("exact clique search is capped");
    const clq_engine eng{g};
    const int target = eng.omega(g.vertices());
    vertex_set clique(g.n());
    vertex_set cand = g.vertices();
    int have = 0;
    for (int v = 0; v < g.n() && have < target; ++v) {
        if (!cand.test(v)) continue;
        vertex_set rest = cand & g.neighbors(v);
        for (int u = 0; u <= v; ++u) rest.reset(u); // later members are larger
        if (1 + eng.omega(rest) >= target - have) {
            clique.set(v);
            ++have;
            cand = rest;
        } else {
            cand.reset(v);
        }
    }
    return clique;
}

vertex_set complement_clique_via_vc(const graph& g,
                                    const std::function<vertex_set(const graph&)>& vc_solver) {
    return g.vertices() - vc_solver(complement(g));
}

// ---- split graphs -------------------------------------------------------------

vertex_set split_graph_min_vc(const graph& g) {
    if (auto hit = find_obstruction(g, split_graph_obstructions()))
        throw not_split_graph_error(*hit);
    const int n = g.n();
    // Degree-sequence split: with degrees sorted descending, the first
    // m = max{i : d_i >= i-1} vertices form a maximum clique, the rest an
    // independent set.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    int m = 0;
    for (int i = 1; i <= n; ++i)
        if (g.degree(order[i - 1]) >= i - 1) m = i;
    vertex_set clique(n), indep(n);
    for (int i = 0; i < n; ++i) (i < m ? clique : indep).set(order[i]);
    for (int v : clique.to_vector())
        if ((g.neighbors(v) & clique) != (clique - vertex_set::of(n, {v})))
            throw structural_error("internal error: degree split did not yield a clique");
    for (int v : indep.to_vector())
        if ((g.neighbors(v) & indep).any())
            throw structural_error("internal error: degree split did not isolate the rest");
    // The clique covers everything. When some clique vertex sees no
    // independent vertex, its clique edges are covered from the other side,
    // so it can be dropped — and then the cover is minimum either way.
    for (int v : clique.to_vector()) {
        if ((g.neighbors(v) & indep).empty()) {
            clique.reset(v);
            return clique;
        }
    }
    return clique;
}

const class_solver* find_class_solver(const std::string& class_name) {
    static const std::vector<class_solver> registry = [] {
        std::vector<class_solver> r;
        class_solver split;
        split.class_name = "split-graphs";
        split.solve_vc = [](const graph& h) { return split_graph_min_vc(h); };
        split.solve_clq = [](const graph& h) {
            // split graphs are closed under complement
            return complement_clique_via_vc(
                h, [](const graph& c) { return split_graph_min_vc(c); });
        };
        r.push_back(std::move(split));
        return r;
    }();
    for (const auto& cs : registry)
        if (cs.class_name == class_name) return &cs;
    return nullptr;
}

// ---- signature branching ---------------------------------------------------------

namespace {

int worker_count() {
    const char* env = std::getenv("WSMKIT_THREADS");
    if (!env) return 1;
    const int v = std::atoi(env);
    return std::clamp(v, 1, 64);
}

// Evaluate one candidate per signature index concurrently; missing
// candidates stay disengaged. The reduction happens at the caller, by value,
// so the thread count never shows in the result.
std::vector<std::optional<vertex_set>> run_signatures(
    long long count, const std::function<std::optional<vertex_set>(long long)>& eval) {
    std::vector<std::optional<vertex_set>> out(count);
    const int workers = std::min<long long>(worker_count(), count > 0 ? count : 1);
    if (workers <= 1) {
        for (long long s = 0; s < count; ++s) out[s] = eval(s);
        return out;
    }
    std::vector<std::future<void>> futs;
    for (int w = 0; w < workers; ++w) {
        futs.push_back(std::async(std::launch::async, [&, w] {
            for (long long s = w; s < count; s += workers) out[s] = eval(s);
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

struct modulator_parts {
    int k = 0;
    std::vector<vertex_set> modules;   // X_1..X_j as used by the branching
    std::vector<vertex_set> frontiers; // A_i: module vertices with outside edges
    std::vector<vertex_set> outsides;  // B_i = N(X_i)
    vertex_set rest;                   // X_0
};

// Either the graph sits in the branching regime (rw >= k+2 for the smallest
// workable k) and this returns its modulator pieces, or the caller must fall
// back to whole-graph exact search.
std::optional<modulator_parts> modulator_for_branching(const graph& g, const obstruction_set& f,
                                                       const solve_options& opt, int& k_out) {
    std::optional<int> k;
    try {
        k = wsn_capped(g, f, opt.k_cap, opt.rankwidth_cap);
        if (!k) return std::nullopt; // wsn beyond the cap
        if (rankwidth_at_most(g, *k + 1, opt.rankwidth_cap)) return std::nullopt; // low rw
    } catch (const cap_exceeded&) {
        return std::nullopt; // too large to analyze: whole-graph exact it is
    }
    auto wsm = find_wsm(g, *k, f, opt.rankwidth_cap);
    if (!wsm)
        throw structural_error("internal error: modulator search contradicted the wsn value");
    modulator_parts parts;
    parts.k = *k;
    parts.rest = g.vertices();
    for (const auto& x : wsm->modules) {
        parts.modules.push_back(x);
        parts.frontiers.push_back(neighbors_of_set(g, g.vertices() - x));
        parts.outsides.push_back(neighbors_of_set(g, x));
        parts.rest -= x;
    }
    k_out = *k;
    return parts;
}

vertex_set solve_component_vc(const graph& g, const vertex_set& comp,
                              const modulator_parts& parts, const obstruction_set& f,
                              const class_solver& solver, const solve_options& opt) {
    auto [sub, imap] = induced_subgraph(g, comp);
    vertex_set local(sub.n());
    bool inside = false;
    for (const auto& x : parts.modules)
        if (comp.is_subset_of(x)) {
            inside = true;
            break;
        }
    if (inside) {
        local = bounded_rw_exact_vc(sub, opt.max_exact_n);
    } else {
        if (!is_f_free(sub, f))
            throw structural_error("internal error: residual component not in the target class");
        if (!solver.solve_vc) throw argument_error("class solver lacks a vertex-cover routine");
        local = solver.solve_vc(sub);
    }
    vertex_set out(g.n());
    for (int v : local.to_vector()) out.set(imap[v]);
    return out;
}

} // namespace

solution min_vertex_cover(const graph& g, const obstruction_set& f, const class_solver& solver,
                          const solve_options& opt) {
    solution sol;
    sol.problem = "vc";
    int k = -1;
    auto parts = modulator_for_branching(g, f, opt, k);
    if (!parts) {
        sol.path = "low-rw-fallback";
        sol.vertices = bounded_rw_exact_vc(g, opt.max_exact_n);
        return sol;
    }
    sol.path = "wsm-branching";
    sol.k = k;
    const int j = int(parts->modules.size());
    const long long nsig = 1ll << j;
    sol.signatures_explored = nsig;

    auto eval = [&](long long sig) -> std::optional<vertex_set> {
        // bit i set: the frontier A_i joins the cover; clear: B_i does
        vertex_set z(g.n());
        for (int i = 0; i < j; ++i) z |= (sig >> i) & 1 ? parts->frontiers[i] : parts->outsides[i];
        vertex_set cover = z;
        auto [rest, imap] = induced_subgraph(g, g.vertices() - z);
        for (const auto& comp_local : connected_components(rest)) {
            vertex_set comp(g.n());
            for (int v : comp_local.to_vector()) comp.set(imap[v]);
            cover |= solve_component_vc(g, comp, *parts, f, solver, opt);
        }
        return cover;
    };
    auto candidates = run_signatures(nsig, eval);
    std::optional<vertex_set> best;
    for (const auto& c : candidates) {
        if (!c) continue;
        if (!best || *c < *best) best = *c; // size first, then lexicographic
    }
    sol.vertices = *best;
    return sol;
}

solution max_clique(const graph& g, const obstruction_set& f, const class_solver& solver,
                    const solve_options& opt) {
    solution sol;
    sol.problem = "clique";
    if (g.n() == 0) {
        sol.vertices = vertex_set(0);
        return sol;
    }
    int k = -1;
    auto parts = modulator_for_branching(g, f, opt, k);
    if (!parts) {
        sol.path = "low-rw-fallback";
        sol.vertices = bounded_rw_exact_clq(g, opt.max_exact_n);
        return sol;
    }
    sol.path = "wsm-branching";
    sol.k = k;
    const int j = int(parts->modules.size());
    const long long nsig = (1ll << (j + 1)) - 1; // nonempty subsets of {0,1..j}
    sol.signatures_explored = nsig;

    auto class_clq = [&](const vertex_set& part) {
        auto [sub, imap] = induced_subgraph(g, part);
        if (!is_f_free(sub, f))
            throw structural_error("internal error: outside part not in the target class");
        if (!solver.solve_clq) throw argument_error("class solver lacks a clique routine");
        vertex_set local = solver.solve_clq(sub);
        vertex_set out(g.n());
        for (int v : local.to_vector()) out.set(imap[v]);
        return out;
    };
    auto exact_clq = [&](const vertex_set& part) {
        auto [sub, imap] = induced_subgraph(g, part);
        vertex_set local = bounded_rw_exact_clq(sub, opt.max_exact_n);
        vertex_set out(g.n());
        for (int v : local.to_vector()) out.set(imap[v]);
        return out;
    };

    auto eval = [&](long long idx) -> std::optional<vertex_set> {
        const long long s = idx + 1; // skip the empty signature
        // single part: the clique lives entirely inside it
        if ((s & (s - 1)) == 0) {
            if (s == 1) {
                if (parts->rest.empty()) return std::nullopt;
                return class_clq(parts->rest);
            }
            const int i = std::countr_zero(static_cast<unsigned long long>(s)) - 1;
            if (parts->modules[i].empty()) return std::nullopt;
            return exact_clq(parts->modules[i]);
        }
        // several parts: only frontier vertices may participate, selected
        // frontiers must be pairwise fully adjacent, and the outside piece
        // shrinks to the common neighborhood of the selected modules
        std::vector<int> sel;
        for (int i = 0; i < j; ++i)
            if ((s >> (i + 1)) & 1) sel.push_back(i);
        for (int i : sel)
            if (parts->frontiers[i].empty()) return std::nullopt;
        for (size_t a = 0; a < sel.size(); ++a)
            for (size_t b = a + 1; b < sel.size(); ++b) {
                const int va = parts->frontiers[sel[a]].lowest();
                const int vb = parts->frontiers[sel[b]].lowest();
                if (!g.has_edge(va, vb)) return std::nullopt;
            }
        vertex_set clique(g.n());
        if (s & 1) {
            vertex_set x0 = parts->rest;
            for (int i : sel) x0 &= parts->outsides[i];
            if (x0.empty()) return std::nullopt;
            clique |= class_clq(x0);
        }
        for (int i : sel) clique |= exact_clq(parts->frontiers[i]);
        return clique;
    };
    auto candidates = run_signatures(nsig, eval);
    std::optional<vertex_set> best;
    for (const auto& c : candidates) {
        if (!c || c->empty()) continue;
        if (!best) {
            best = *c;
            continue;
        }
        if (c->count() > best->count() || (c->count() == best->count() && *c < *best)) best = *c;
    }
    if (!best) throw structural_error("internal error: no clique candidate found");
    sol.vertices = *best;
    return sol;
}

nlohmann::ordered_json solution_to_json(const solution& s, std::optional<int> m) {
    nlohmann::ordered_json j;
    j["problem"] = s.problem;
    j["size"] = s.vertices.count();
    j["vertices"] = s.vertices.to_vector();
    j["path"] = s.path;
    j["signatures_explored"] = s.signatures_explored;
    if (m) {
        j["m"] = *m;
        const bool feasible = s.problem == "vc" ? s.vertices.count() <= *m
                                                : s.vertices.count() >= *m;
        j["feasible"] = feasible;
    }
    return j;
}

} // namespace wsmkit
