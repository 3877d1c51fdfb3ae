#pragma once

#include <vector>

#include "wsmkit/bitset.hpp"
#include "wsmkit/graph.hpp"

namespace wsmkit {

// Binary matrix over GF(2); rows are bitsets over 0..ncols-1.
struct gf2_matrix {
    std::vector<bitset> rows;
    int ncols = 0;

    static gf2_matrix from_rows(int ncols, const std::vector<std::vector<int>>& row_bits);
};

// Rank by Gaussian elimination with XOR row operations.
// Pivot of each row is its lowest set bit, eliminated from all later rows.
int gf2_rank(const gf2_matrix& m);

// Cut-rank of u in g: rank over GF(2) of the adjacency submatrix between
// u and V \ u (one row per vertex of u, columns indexed by the complement).
// Symmetric in u and its complement; 0 for u empty or full.
int cut_rank(const graph& g, const vertex_set& u);

} // namespace wsmkit
