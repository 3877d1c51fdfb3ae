#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsmkit/graph.hpp"
#include "wsmkit/obstructions.hpp"
#include "wsmkit/rank_decomp.hpp"
#include "wsmkit/split_decomp.hpp"

namespace wsmkit {

// The relation "v ~_k w": some split-module containing both vertices induces
// a subgraph of rank-width <= k. It is an equivalence relation precisely when
// rw(g) >= k+2, which every entry point below enforces up front (violations
// raise precondition_violation).

// Partition of V(g) into the equivalence classes of ~_k, ordered by smallest
// member. Each class is an inclusion-maximal split-module with rank-width
// <= k; its frontier and a width-<= k decomposition witness ride along.
struct equivalence_classes {
    int k = 0;
    std::vector<vertex_set> classes;
    std::vector<vertex_set> frontiers;
    std::vector<rank_decomposition> witnesses;
};

bool sim_k_decide(const graph& g, int k, int v, int w,
                  int max_exact_n = default_rankwidth_cap);
equivalence_classes sim_k_classes(const graph& g, int k,
                                  int max_exact_n = default_rankwidth_cap);

// A k-well-structured modulator: at most k pairwise-disjoint split-modules,
// each inducing rank-width <= k, whose union's deletion leaves the graph free
// of the target class's obstructions.
struct well_structured_modulator {
    int k = 0;
    std::string class_name;
    std::vector<vertex_set> modules;
};

// Branching search for a k-well-structured modulator. The f-free and k = 0
// exits need no structure and run on any graph; the branching phase requires
// rw(g) >= k+2 and refuses to run otherwise. Within that regime a nullopt
// answer proves no k-wsm exists. Branching is deterministic: the obstruction
// occurrence is the first in fixed scan order, candidate classes are tried by
// smallest contained vertex, and the equivalence computed on the original
// graph is reused down the recursion.
std::optional<well_structured_modulator> find_wsm(const graph& g, int k, const obstruction_set& f,
                                                  int max_exact_n = default_rankwidth_cap);

// Independent replay of the modulator definition; pass = wsm_defect::none.
enum class wsm_defect {
    none,
    too_many_modules,
    overlapping_modules,
    not_a_split_module,
    module_rankwidth_exceeds_k,
    not_a_modulator,
};
const char* to_string(wsm_defect d);
wsm_defect check_wsm(const graph& g, const well_structured_modulator& cand,
                     const obstruction_set& f, int max_exact_n = default_rankwidth_cap);

// Smallest k admitting a k-well-structured modulator. Searched by increasing
// k: the branching search covers k <= rw-2; at k = rw-1 (where the class
// machinery is off) an exact search over all split-modules of rank-width <= k
// decides; at k = rw the whole vertex set is a valid single module, so the
// search always terminates with the true minimum. k_cap bounds the search for
// callers that want to bail out into whole-graph solving instead (nullopt
// when wsn > k_cap).
int wsn(const graph& g, const obstruction_set& f, int max_exact_n = default_rankwidth_cap);
std::optional<int> wsn_capped(const graph& g, const obstruction_set& f, int k_cap,
                              int max_exact_n = default_rankwidth_cap);

// Minimum-cardinality plain modulator (delete-any-vertices), via iterative
// deepening over branchings on obstruction occurrences. cap bounds the answer
// (cap_exceeded beyond).
struct modulator_result {
    int size = 0;
    vertex_set vertices;
};
modulator_result mod_size(const graph& g, const obstruction_set& f, int cap = 12);

// JSON: {"k": ..., "modules": [[v,...],...], "class": name}
nlohmann::ordered_json wsm_to_json(const well_structured_modulator& m);
well_structured_modulator wsm_from_json(const nlohmann::ordered_json& j);

} // namespace wsmkit
