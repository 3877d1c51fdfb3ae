#include "wsmkit/gf2.hpp"

#include <stdexcept>

#include "wsmkit/errors.hpp"

namespace wsmkit {

gf2_matrix gf2_matrix::from_rows(int ncols, const std::vector<std::vector<int>>& row_bits) {
    gf2_matrix m;
    m.ncols = ncols;
    m.rows.reserve(row_bits.size());
    for (const auto& bits : row_bits) {
        bitset row(ncols);
        for (int b : bits) {
            if (b < 0 || b >= ncols) {
                throw structural_error("gf2_matrix: column index out of range");
            }
            row.set(b);
        }
        m.rows.push_back(std::move(row));
    }
    return m;
}

int gf2_rank(const gf2_matrix& m) {
    // Work on a copy of the rows; eliminate in place.
    std::vector<bitset> rows = m.rows;
    int rank = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int i = 0; i < nrows; ++i) {
        if (rows[i].empty()) continue;
        int pivot = rows[i].lowest();
        ++rank;
        for (int j = i + 1; j < nrows; ++j) {
            if (rows[j].test(pivot)) rows[j] ^= rows[i];
        }
    }
    return rank;
}

int cut_rank(const graph& g, const vertex_set& u) {
    const int n = g.n();
    if (static_cast<int>(u.size()) != n) {
        throw structural_error("cut_rank: vertex set size does not match graph");
    }
    vertex_set comp = vertex_set::full(n) - u;
    if (u.count() == 0 || comp.count() == 0) return 0;

    // Use the smaller side as the row set: rank is symmetric across the cut.
    const vertex_set& rows_side = (u.count() <= comp.count()) ? u : comp;
    const vertex_set& cols_side = (u.count() <= comp.count()) ? comp : u;

    std::vector<int> col_of(n, -1);
    int ncols = 0;
    for (int v : cols_side.to_vector()) col_of[v] = ncols++;

    std::vector<bitset> rows;
    rows.reserve(rows_side.count());
    for (int v : rows_side.to_vector()) {
        bitset row(ncols);
        vertex_set nb = g.neighbors(v) & cols_side;
        for (int w : nb.to_vector()) row.set(col_of[w]);
        rows.push_back(std::move(row));
    }

    gf2_matrix m;
    m.ncols = ncols;
    m.rows = std::move(rows);
    return gf2_rank(m);
}

} // namespace wsmkit
