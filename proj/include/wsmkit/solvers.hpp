#pragma once

#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "wsmkit/errors.hpp"
#include "wsmkit/graph.hpp"
#include "wsmkit/obstructions.hpp"
#include "wsmkit/wsm.hpp"

namespace wsmkit {

// Raised by split_graph_min_vc when the input is not a split graph; carries
// the obstruction occurrence that proves it.
struct not_split_graph_error : error {
    obstruction_hit witness;
    explicit not_split_graph_error(obstruction_hit hit)
        : error("not a split graph: obstruction found"), witness(std::move(hit)) {}
};

// Minimum vertex cover of a split graph via the degree-sequence partition
// into a maximum clique and an independent set: the clique when each of its
// vertices has an independent neighbor, otherwise the clique minus the
// smallest-index vertex without one.
vertex_set split_graph_min_vc(const graph& g);

// Exact optima by branch and bound, for components whose rank-width the
// decomposition machinery bounds. Results are the lexicographically smallest
// optimum (as a sorted vertex list). cap_exceeded beyond max_exact_n.
inline constexpr int default_solver_cap = 26;
vertex_set bounded_rw_exact_vc(const graph& g, int max_exact_n = default_solver_cap);
vertex_set bounded_rw_exact_clq(const graph& g, int max_exact_n = default_solver_cap);

// Maximum clique = complement of a minimum vertex cover of the complement.
vertex_set complement_clique_via_vc(const graph& g,
                                    const std::function<vertex_set(const graph&)>& vc_solver);

// Per-class polynomial solver; only invoked on graphs verified free of the
// class's obstructions.
struct class_solver {
    std::string class_name;
    std::function<vertex_set(const graph&)> solve_vc;
    std::function<vertex_set(const graph&)> solve_clq;
};
// Registry lookup; only "split-graphs" ships. Further classes are extension
// points. nullptr when absent.
const class_solver* find_class_solver(const std::string& class_name);

struct solve_options {
    int k_cap = 8;        // modulator search bail-out: beyond this, whole-graph exact
    int max_exact_n = default_solver_cap;
    int rankwidth_cap = default_rankwidth_cap;
};

struct solution {
    std::string problem; // "vc" or "clique"
    vertex_set vertices;
    std::string path = "low-rw-fallback"; // or "wsm-branching"
    long long signatures_explored = 0;
    int k = -1; // the modulator parameter when the branching path ran
};

// Exact optimization via well-structured-modulator signature branching, with
// the whole-graph exact solver as the fallback when the graph's rank-width is
// within k+1 of the found parameter or the modulator search hits its cap.
// WSMKIT_THREADS (default 1) caps concurrent signature workers; the reduction
// is by (size, lexicographic) order, so results are thread-count independent.
solution min_vertex_cover(const graph& g, const obstruction_set& f, const class_solver& solver,
                          const solve_options& opt = {});
solution max_clique(const graph& g, const obstruction_set& f, const class_solver& solver,
                    const solve_options& opt = {});

// {"problem", "size", "vertices", "path", "signatures_explored"}; decision
// mode appends "m" and "feasible".
nlohmann::ordered_json solution_to_json(const solution& s,
                                        std::optional<int> m = std::nullopt);

} // namespace wsmkit
