#include "wsmkit/obstructions.hpp"

#include <algorithm>

#include "wsmkit/errors.hpp"

namespace wsmkit {

std::optional<obstruction_hit> find_obstruction(const graph& g, const obstruction_set& f) {
    for (size_t i = 0; i < f.obstructions.size(); ++i) {
        if (auto emb = contains_induced(g, f.obstructions[i])) {
            obstruction_hit hit;
            hit.index = int(i);
            hit.embedding = *emb;
            hit.vertices = vertex_set(g.n());
            for (int v : *emb) hit.vertices.set(v);
            return hit;
        }
    }
    return std::nullopt;
}

bool is_f_free(const graph& g, const obstruction_set& f) {
    return !find_obstruction(g, f).has_value();
}

obstruction_set split_graph_obstructions() {
    obstruction_set f;
    f.name = "split-graphs";
    f.obstructions.push_back(graph::from_edges(4, {{0, 1}, {2, 3}})); // 2K_2
    f.obstructions.push_back(make_cycle(4));
    f.obstructions.push_back(make_cycle(5));
    return f;
}

obstruction_set triangle_free_obstructions() {
    obstruction_set f;
    f.name = "triangle-free";
    f.obstructions.push_back(make_clique(3));
    return f;
}

obstruction_set p5_free_obstructions() {
    obstruction_set f;
    f.name = "p5-free";
    f.obstructions.push_back(make_path(5));
    return f;
}

obstruction_set max_degree_obstructions(int d) {
    if (d < 0) throw argument_error("max-degree bound must be nonnegative");
    if (d > 4) throw cap_exceeded("max-degree obstruction family capped at d = 4");
    // Vertex 0 universal on d+2 vertices; every subset of edges among the
    // remaining d+1 vertices gives a supergraph of K_{1,d+1}. Deduplicate up
    // to isomorphism (equal order + mutual induced embedding), keeping the
    // first representative in mask order.
    const int n = d + 2;
    std::vector<std::pair<int, int>> inner_pairs;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b < n; ++b) inner_pairs.emplace_back(a, b);
    obstruction_set f;
    f.name = "max-degree-" + std::to_string(d);
    for (unsigned long mask = 0; mask < (1ul << inner_pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
        for (size_t i = 0; i < inner_pairs.size(); ++i)
            if (mask & (1ul << i)) edges.push_back(inner_pairs[i]);
        graph cand = graph::from_edges(n, edges);
        bool fresh = true;
        for (const graph& seen : f.obstructions) {
            if (seen.edge_count() == cand.edge_count() && contains_induced(seen, cand)) {
                fresh = false;
                break;
            }
        }
        if (fresh) f.obstructions.push_back(std::move(cand));
    }
    return f;
}

const std::vector<std::string>& builtin_obstruction_set_names() {
    static const std::vector<std::string> names = {"split-graphs", "triangle-free", "p5-free",
                                                   "max-degree-<d>"};
    return names;
}

std::optional<obstruction_set> obstruction_set_by_name(const std::string& name) {
    if (name == "split-graphs") return split_graph_obstructions();
    if (name == "triangle-free") return triangle_free_obstructions();
    if (name == "p5-free") return p5_free_obstructions();
    const std::string prefix = "max-degree-";
    if (name.rfind(prefix, 0) == 0) {
        const std::string tail = name.substr(prefix.size());
        if (!tail.empty() && std::all_of(tail.begin(), tail.end(),
                                         [](char c) { return c >= '0' && c <= '9'; }) &&
            tail.size() <= 2)
            return max_degree_obstructions(std::stoi(tail));
    }
    return std::nullopt;
}

nlohmann::ordered_json obstruction_set_to_json(const obstruction_set& f) {
    nlohmann::ordered_json j;
    j["name"] = f.name;
    j["obstructions"] = nlohmann::ordered_json::array();
    for (const graph& h : f.obstructions) {
        nlohmann::ordered_json hj;
        hj["n"] = h.n();
        hj["edges"] = nlohmann::ordered_json::array();
        for (auto [a, b] : h.edges()) hj["edges"].push_back({a, b});
        j["obstructions"].push_back(std::move(hj));
    }
    return j;
}

obstruction_set obstruction_set_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object() || !j.contains("name") || !j.contains("obstructions"))
        throw structural_error("obstruction set JSON needs \"name\" and \"obstructions\"");
    obstruction_set f;
    f.name = j.at("name").get<std::string>();
    const auto& list = j.at("obstructions");
    if (!list.is_array() || list.empty())
        throw structural_error("obstruction list must be a nonempty array");
    for (const auto& hj : list) {
        const int n = hj.at("n").get<int>();
        if (n < 1) throw structural_error("every obstruction needs at least one vertex");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : hj.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw structural_error("edges must be pairs");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        f.obstructions.push_back(graph::from_edges(n, edges));
    }
    return f;
}

} // namespace wsmkit
