#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wsmkit/errors.hpp"
#include "wsmkit/graph.hpp"
#include "wsmkit/graph_io.hpp"
#include "wsmkit/obstructions.hpp"
#include "wsmkit/rank_decomp.hpp"
#include "wsmkit/solvers.hpp"
#include "wsmkit/split_decomp.hpp"
#include "wsmkit/wsm.hpp"

namespace {

using namespace wsmkit;

// exit codes: 0 success/yes, 1 no/none, 2 usage or input error, 3 cap exceeded
constexpr int exit_ok = 0;
constexpr int exit_none = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

graph_format parse_format(const std::string& s) {
    if (s == "auto") return graph_format::auto_detect;
    if (s == "edges") return graph_format::edge_list;
    if (s == "dimacs") return graph_format::dimacs;
    throw argument_error("unknown format: " + s);
}

obstruction_set load_class(const std::string& name) {
    if (auto f = obstruction_set_by_name(name)) return *f;
    std::ifstream in(name);
    if (in) {
        nlohmann::ordered_json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw argument_error("cannot parse obstruction file " + name + ": " + e.what());
        }
        return obstruction_set_from_json(j);
    }
    throw argument_error("unknown graph class (not a built-in name or readable file): " + name);
}

void emit(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw argument_error("cannot open for writing: " + path);
    out << content;
}

struct options {
    std::string input;
    std::string format = "auto";
    std::string cls;
    std::string problem = "vc";
    std::string dot;
    int k = 0;
    int m = -1;
    int max_exact_n = default_rankwidth_cap;
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"wsmkit: rank-width, split trees, well-structured modulators, exact VC/Clique"};
    app.require_subcommand(1);
    options o;
    int code = exit_ok;

    auto add_input = [&](CLI::App* s) {
        s->add_option("input", o.input, "graph file")->required();
        s->add_option("--format", o.format, "input format")
            ->check(CLI::IsMember({"auto", "edges", "dimacs"}));
    };
    auto load = [&] { return load_graph(o.input, parse_format(o.format)); };

    auto* rw_cmd = app.add_subcommand("rankwidth", "exact rank-width with a witness decomposition");
    add_input(rw_cmd);
    rw_cmd->add_option("--max-exact-n", o.max_exact_n, "vertex cap for the exact search");
    rw_cmd->add_option("--dot", o.dot, "also write the decomposition as DOT to this path");
    rw_cmd->callback([&] {
        const graph g = load();
        const auto r = rankwidth(g, o.max_exact_n);
        nlohmann::ordered_json j;
        j["rankwidth"] = r.width;
        j["decomposition"] = rank_decomposition_to_json(r.decomposition);
        emit(j);
        if (!o.dot.empty()) write_file(o.dot, rank_decomposition_to_dot(r.decomposition));
    });

    auto* st_cmd = app.add_subcommand("splittree", "canonical reduced split tree");
    add_input(st_cmd);
    st_cmd->add_option("--dot", o.dot, "also write the tree as DOT to this path");
    st_cmd->callback([&] {
        const graph g = load();
        const split_tree t = build_split_tree(g);
        emit(split_tree_to_json(t));
        if (!o.dot.empty()) write_file(o.dot, split_tree_to_dot(t));
    });

    auto* simk_cmd = app.add_subcommand("simk", "equivalence classes of the ~_k relation");
    add_input(simk_cmd);
    simk_cmd->add_option("--k", o.k, "the parameter k")->required();
    simk_cmd->add_option("--max-exact-n", o.max_exact_n, "vertex cap for rank-width checks");
    simk_cmd->callback([&] {
        const graph g = load();
        const auto eq = sim_k_classes(g, o.k, o.max_exact_n);
        nlohmann::ordered_json j;
        j["k"] = eq.k;
        j["classes"] = nlohmann::ordered_json::array();
        j["frontiers"] = nlohmann::ordered_json::array();
        for (const auto& c : eq.classes) j["classes"].push_back(c.to_vector());
        for (const auto& fr : eq.frontiers) j["frontiers"].push_back(fr.to_vector());
        emit(j);
    });

    auto* wsn_cmd = app.add_subcommand("wsn", "well-structure number for a graph class");
    add_input(wsn_cmd);
    wsn_cmd->add_option("--class", o.cls, "built-in class name or obstruction JSON file")
        ->required();
    wsn_cmd->add_option("--max-exact-n", o.max_exact_n, "vertex cap for rank-width checks");
    wsn_cmd->callback([&] {
        const graph g = load();
        const auto f = load_class(o.cls);
        nlohmann::ordered_json j;
        j["class"] = f.name;
        j["wsn"] = wsn(g, f, o.max_exact_n);
        emit(j);
    });

    auto* fw_cmd = app.add_subcommand("findwsm", "search for a k-well-structured modulator");
    add_input(fw_cmd);
    fw_cmd->add_option("--class", o.cls, "built-in class name or obstruction JSON file")
        ->required();
    fw_cmd->add_option("--k", o.k, "the parameter k")->required();
    fw_cmd->add_option("--max-exact-n", o.max_exact_n, "vertex cap for rank-width checks");
    fw_cmd->callback([&] {
        const graph g = load();
        const auto f = load_class(o.cls);
        const auto wsm = find_wsm(g, o.k, f, o.max_exact_n);
        if (wsm) {
            emit(wsm_to_json(*wsm));
        } else {
            nlohmann::ordered_json j;
            j["k"] = o.k;
            j["class"] = f.name;
            j["exists"] = false;
            emit(j);
            code = exit_none;
        }
    });

    auto* ms_cmd = app.add_subcommand("modsize", "minimum plain-modulator cardinality");
    add_input(ms_cmd);
    ms_cmd->add_option("--class", o.cls, "built-in class name or obstruction JSON file")
        ->required();
    ms_cmd->callback([&] {
        const graph g = load();
        const auto f = load_class(o.cls);
        const auto r = mod_size(g, f);
        nlohmann::ordered_json j;
        j["class"] = f.name;
        j["mod_size"] = r.size;
        j["witness"] = r.vertices.to_vector();
        emit(j);
    });

    auto* solve_cmd = app.add_subcommand("solve", "exact minimum vertex cover / maximum clique");
    add_input(solve_cmd);
    solve_cmd->add_option("--problem", o.problem, "vc or clique")
        ->check(CLI::IsMember({"vc", "clique"}));
    solve_cmd->add_option("--class", o.cls, "graph class driving the modulator branching")
        ->required();
    solve_cmd->add_option("--m", o.m, "decision mode: target cardinality");
    solve_cmd->add_option("--max-exact-n", o.max_exact_n, "vertex cap for exact components");
    solve_cmd->callback([&] {
        const graph g = load();
        const auto f = load_class(o.cls);
        const class_solver* cs = find_class_solver(f.name);
        if (!cs) throw argument_error("no class solver registered for: " + f.name);
        solve_options sopt;
        sopt.max_exact_n = o.max_exact_n;
        const solution sol = o.problem == "vc" ? min_vertex_cover(g, f, *cs, sopt)
                                               : max_clique(g, f, *cs, sopt);
        const bool decision = solve_cmd->count("--m") > 0;
        if (decision && o.m < 0) throw argument_error("--m must be nonnegative");
        emit(solution_to_json(sol, decision ? std::optional<int>(o.m) : std::nullopt));
        if (decision) {
            const int size = sol.vertices.count();
            const bool ok = o.problem == "vc" ? size <= o.m : size >= o.m;
            if (!ok) code = exit_none;
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_code = app.exit(e);
        return cli_code == 0 ? exit_ok : exit_usage;
    } catch (const cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_cap;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return code;
}
