#include "wsmkit/wsm.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include "wsmkit/errors.hpp"

namespace wsmkit {

namespace {

// Every ~_k entry point runs under rw(g) >= k+2; equivalently, no
// decomposition of width k+1 exists.
void require_high_rankwidth(const graph& g, int k, int max_exact_n) {
    if (k < 0) throw argument_error("the parameter k must be nonnegative");
    if (rankwidth_at_most(g, k + 1, max_exact_n))
        throw precondition_violation(
            "the ~_k machinery needs rank-width at least k+2; this graph is below that");
}

// Shared state for ~_k queries: the split tree, the component table, and a
// memo of rank-width verdicts per module.
struct sim_context {
    const graph& g;
    int k;
    int max_exact_n;
    split_tree tree;
    std::vector<vertex_set> comps;
    std::map<std::vector<int>, bool> rw_memo;

    sim_context(const graph& host, int kk, int cap)
        : g(host), k(kk), max_exact_n(cap), tree(build_split_tree(host)),
          comps(connected_components(host)) {}

    bool module_within_k(const vertex_set& m) {
        auto key = m.to_vector();
        if (auto it = rw_memo.find(key); it != rw_memo.end()) return it->second;
        auto [sub, imap] = induced_subgraph(g, m);
        const bool ok = rankwidth_at_most(sub, k, max_exact_n).has_value();
        rw_memo.emplace(std::move(key), ok);
        return ok;
    }

    // Any split-module containing both vertices contains an inclusion-minimal
    // one, and rank-width is monotone under induced subgraphs, so testing the
    // minimal modules decides the relation.
    bool decide(int v, int w) {
        if (v == w) return true;
        int cv = -1, cw = -1;
        for (size_t i = 0; i < comps.size(); ++i) {
            if (comps[i].test(v)) cv = int(i);
            if (comps[i].test(w)) cw = int(i);
        }
        if (cv != cw) return false;
        for (const auto& m : minimal_split_modules_containing(g, tree, v, w))
            if (module_within_k(m.vertices)) return true;
        return false;
    }
};

void check_vertex(const graph& g, int v) {
    if (v < 0 || v >= g.n()) throw argument_error("vertex out of range");
}

} // namespace

bool sim_k_decide(const graph& g, int k, int v, int w, int max_exact_n) {
    check_vertex(g, v);
    check_vertex(g, w);
    require_high_rankwidth(g, k, max_exact_n);
    sim_context ctx(g, k, max_exact_n);
    return ctx.decide(v, w);
}

equivalence_classes sim_k_classes(const graph& g, int k, int max_exact_n) {
    require_high_rankwidth(g, k, max_exact_n);
    sim_context ctx(g, k, max_exact_n);
    const int n = g.n();
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w) {
            if (find(v) == find(w)) continue;
            if (ctx.decide(v, w)) parent[find(w)] = find(v);
        }

    equivalence_classes out;
    out.k = k;
    std::map<int, vertex_set> groups;
    for (int v = 0; v < n; ++v) {
        auto [it, fresh] = groups.try_emplace(find(v), vertex_set(n));
        (void)fresh;
        it->second.set(v);
    }
    for (auto& [root, cls] : groups) {
        (void)root;
        out.classes.push_back(cls);
    }
    // map keys are union-find roots; reorder by smallest member
    std::sort(out.classes.begin(), out.classes.end(),
              [](const vertex_set& a, const vertex_set& b) { return a.lowest() < b.lowest(); });
    for (const auto& cls : out.classes) {
        out.frontiers.push_back(neighbors_of_set(g, g.vertices() - cls));
        auto [sub, imap] = induced_subgraph(g, cls);
        auto witness = rankwidth_at_most(sub, k, max_exact_n);
        if (!witness)
            throw structural_error("internal error: equivalence class exceeds rank-width k");
        out.witnesses.push_back(std::move(*witness));
    }
    return out;
}

std::optional<well_structured_modulator> find_wsm(const graph& g, int k, const obstruction_set& f,
                                                  int max_exact_n) {
    if (k < 0) throw argument_error("the parameter k must be nonnegative");
    well_structured_modulator result;
    result.k = k;
    result.class_name = f.name;
    if (is_f_free(g, f)) return result; // empty modulator
    if (k == 0) return std::nullopt;    // nothing may be deleted
    require_high_rankwidth(g, k, max_exact_n);
    const auto eq = sim_k_classes(g, k, max_exact_n);

    // Delete whole classes only, so every class is either untouched or gone
    // and the fixed top-level equivalence stays valid down the recursion.
    std::function<std::optional<std::vector<vertex_set>>(const vertex_set&, int)> rec =
        [&](const vertex_set& mask, int budget) -> std::optional<std::vector<vertex_set>> {
        auto [sub, imap] = induced_subgraph(g, mask);
        const auto hit = find_obstruction(sub, f);
        if (!hit) return std::vector<vertex_set>{};
        if (budget == 0) return std::nullopt;
        vertex_set occ(g.n());
        for (int nv : hit->embedding) occ.set(imap[nv]);
        for (const auto& cls : eq.classes) {
            if (!cls.intersects(occ)) continue;
            auto rest = rec(mask - cls, budget - 1);
            if (rest) {
                rest->insert(rest->begin(), cls);
                return rest;
            }
        }
        return std::nullopt;
    };
    auto modules = rec(g.vertices(), k);
    if (!modules) return std::nullopt;
    result.modules = std::move(*modules);
    return result;
}

const char* to_string(wsm_defect d) {
    switch (d) {
        case wsm_defect::none: return "none";
        case wsm_defect::too_many_modules: return "too-many-modules";
        case wsm_defect::overlapping_modules: return "overlapping-modules";
        case wsm_defect::not_a_split_module: return "not-a-split-module";
        case wsm_defect::module_rankwidth_exceeds_k: return "module-rankwidth-exceeds-k";
        case wsm_defect::not_a_modulator: return "not-a-modulator";
    }
    return "?";
}

wsm_defect check_wsm(const graph& g, const well_structured_modulator& cand,
                     const obstruction_set& f, int max_exact_n) {
    if (int(cand.modules.size()) > cand.k) return wsm_defect::too_many_modules;
    vertex_set united(g.n());
    for (const auto& m : cand.modules) {
        if (m.size() != g.n()) throw argument_error("module does not match the graph");
        if (m.intersects(united)) return wsm_defect::overlapping_modules;
        united |= m;
    }
    for (const auto& m : cand.modules)
        if (!is_split_module(g, m)) return wsm_defect::not_a_split_module;
    for (const auto& m : cand.modules) {
        auto [sub, imap] = induced_subgraph(g, m);
        if (!rankwidth_at_most(sub, cand.k, max_exact_n))
            return wsm_defect::module_rankwidth_exceeds_k;
    }
    auto [rest, imap] = induced_subgraph(g, g.vertices() - united);
    if (!is_f_free(rest, f)) return wsm_defect::not_a_modulator;
    return wsm_defect::none;
}

namespace {

// Exact decision "does a j-module well-structured modulator exist" for the
// one value of k where neither the branching search (needs rw >= k+2) nor the
// whole-vertex-set fallback (needs k >= rw) applies: enumerate every split-
// module of rank-width <= k once, then branch on obstruction occurrences.
bool gap_wsm_exists(const graph& g, int k, const obstruction_set& f, int max_exact_n) {
    const int n = g.n();
    if (n > 20) throw cap_exceeded("exact modulator search supports at most 20 vertices");
    std::vector<std::uint64_t> modules;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << n); ++mask) {
        vertex_set s = vertex_set::from_mask(n, mask);
        if (!is_split_module(g, s)) continue;
        if (s.count() > 1) {
            auto [sub, imap] = induced_subgraph(g, s);
            if (!rankwidth_at_most(sub, k, max_exact_n)) continue;
        }
        modules.push_back(mask);
    }
    std::map<std::pair<std::uint64_t, int>, bool> memo;
    std::function<bool(std::uint64_t, int)> rec = [&](std::uint64_t mask, int budget) {
        auto [sub, imap] = induced_subgraph(g, vertex_set::from_mask(n, mask));
        const auto hit = find_obstruction(sub, f);
        if (!hit) return true;
        if (budget == 0) return false;
        const auto key = std::make_pair(mask, budget);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t occ = 0;
        for (int nv : hit->embedding) occ |= std::uint64_t(1) << imap[nv];
        bool ok = false;
        for (std::uint64_t m : modules) {
            if ((m & mask) != m || !(m & occ)) continue;
            if (rec(mask & ~m, budget - 1)) {
                ok = true;
                break;
            }
        }
        memo.emplace(key, ok);
        return ok;
    };
    return rec(n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1, k);
}

} // namespace

std::optional<int> wsn_capped(const graph& g, const obstruction_set& f, int k_cap,
                              int max_exact_n) {
    if (is_f_free(g, f)) return 0;
    const int rw = rankwidth(g, max_exact_n).width;
    for (int k = 1; k <= k_cap; ++k) {
        if (k >= rw) return k; // the whole vertex set is one module of rank-width <= k
        if (k <= rw - 2) {
            if (find_wsm(g, k, f, max_exact_n)) return k;
        } else { // k == rw-1: outside both regimes, decide exactly
            if (gap_wsm_exists(g, k, f, max_exact_n)) return k;
        }
    }
    return std::nullopt;
}

int wsn(const graph& g, const obstruction_set& f, int max_exact_n) {
    // terminates at k = max(1, rw) at the latest
    auto r = wsn_capped(g, f, g.n() + 1, max_exact_n);
    if (!r) throw structural_error("internal error: the well-structure number search ran away");
    return *r;
}

namespace {

std::optional<vertex_set> mod_dfs(const graph& g, const obstruction_set& f,
                                  const vertex_set& mask, int budget) {
    auto [sub, imap] = induced_subgraph(g, mask);
    const auto hit = find_obstruction(sub, f);
    if (!hit) return vertex_set(g.n());
    if (budget == 0) return std::nullopt;
    vertex_set occ(g.n());
    for (int nv : hit->embedding) occ.set(imap[nv]);
    for (int v : occ.to_vector()) {
        vertex_set next = mask;
        next.reset(v);
        if (auto rest = mod_dfs(g, f, next, budget - 1)) {
            rest->set(v);
            return rest;
        }
    }
    return std::nullopt;
}

} // namespace

modulator_result mod_size(const graph& g, const obstruction_set& f, int cap) {
    // Iterative deepening: the first budget that succeeds is the minimum
    // (a smaller witness would have succeeded one round earlier).
    for (int budget = 0; budget <= cap; ++budget) {
        if (auto witness = mod_dfs(g, f, g.vertices(), budget)) {
            modulator_result r;
            r.size = witness->count();
            r.vertices = std::move(*witness);
            return r;
        }
    }
    throw cap_exceeded("modulator search exceeded its branching cap");
}

nlohmann::ordered_json wsm_to_json(const well_structured_modulator& m) {
    nlohmann::ordered_json j;
    j["k"] = m.k;
    j["modules"] = nlohmann::ordered_json::array();
    for (const auto& mod : m.modules) j["modules"].push_back(mod.to_vector());
    j["class"] = m.class_name;
    return j;
}

well_structured_modulator wsm_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("modules") || !j.contains("class"))
        throw structural_error("modulator JSON needs \"k\", \"modules\", and \"class\"");
    well_structured_modulator m;
    m.k = j.at("k").get<int>();
    m.class_name = j.at("class").get<std::string>();
    int top = 0;
    std::vector<std::vector<int>> lists;
    for (const auto& mj : j.at("modules")) {
        std::vector<int> vs;
        for (const auto& v : mj) {
            vs.push_back(v.get<int>());
            top = std::max(top, vs.back() + 1);
        }
        lists.push_back(std::move(vs));
    }
    for (const auto& vs : lists) {
        vertex_set s(top);
        for (int v : vs) s.set(v);
        m.modules.push_back(std::move(s));
    }
    return m;
}

} // namespace wsmkit
