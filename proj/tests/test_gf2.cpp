#include "doctest.h"

#include "oracles.hpp"
#include "wsmkit/errors.hpp"
#include "wsmkit/gf2.hpp"
#include "wsmkit/graph.hpp"

using namespace wsmkit;

TEST_SUITE_BEGIN("gf2");

TEST_CASE("gf2_rank on fixed matrices") {
    // rows 0011 and 1001 are independent
    CHECK(gf2_rank(gf2_matrix::from_rows(4, {{2, 3}, {0, 3}})) == 2);
    // three identical all-ones rows
    CHECK(gf2_rank(gf2_matrix::from_rows(3, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}})) == 1);
    // empty matrix
    CHECK(gf2_rank(gf2_matrix::from_rows(0, {})) == 0);
    // identity
    CHECK(gf2_rank(gf2_matrix::from_rows(4, {{0}, {1}, {2}, {3}})) == 4);
    // a row that is the xor of two others adds nothing
    CHECK(gf2_rank(gf2_matrix::from_rows(3, {{0, 1}, {1, 2}, {0, 2}})) == 2);
    // zero rows add nothing
    CHECK(gf2_rank(gf2_matrix::from_rows(3, {{}, {0}, {}})) == 1);
}

TEST_CASE("gf2_rank rejects out-of-range columns") {
    CHECK_THROWS_AS(gf2_matrix::from_rows(2, {{0, 2}}), structural_error);
}

TEST_CASE("gf2_rank agrees with the span-counting oracle") {
    oracles::rng r(404);
    for (int t = 0; t < 60; ++t) {
        int rows = r.below(7), cols = 1 + r.below(8);
        std::vector<std::vector<int>> bits(rows);
        std::vector<std::uint64_t> masks;
        for (int i = 0; i < rows; ++i) {
            std::uint64_t m = 0;
            for (int c = 0; c < cols; ++c)
                if (r.percent(45)) {
                    bits[i].push_back(c);
                    m |= std::uint64_t(1) << c;
                }
            masks.push_back(m);
        }
        int lib = gf2_rank(gf2_matrix::from_rows(cols, bits));
        CHECK(lib == oracles::rank_by_span(masks));
        CHECK(lib <= rows);
        CHECK(lib <= cols);
    }
}

TEST_CASE("cut_rank on fixed graphs") {
    // five-cycle 0-1-2-3-4-0 cut at {3,4}: rows (0011; 1001), rank 2
    CHECK(cut_rank(make_cycle(5), vertex_set::of(5, {3, 4})) == 2);
    // every proper cut of a clique has the all-ones submatrix
    for (int n : {2, 4, 6}) {
        graph k = make_clique(n);
        CHECK(cut_rank(k, vertex_set::of(n, {0})) == 1);
        if (n > 2) CHECK(cut_rank(k, vertex_set::of(n, {0, 1})) == 1);
    }
    // edgeless graphs have rank-0 cuts
    CHECK(cut_rank(make_edgeless(5), vertex_set::of(5, {1, 2})) == 0);
    // empty and full sides have no cross edges at all
    CHECK(cut_rank(make_cycle(5), vertex_set(5)) == 0);
    CHECK(cut_rank(make_cycle(5), vertex_set::full(5)) == 0);
}

TEST_CASE("cut_rank size mismatch is rejected") {
    CHECK_THROWS_AS(cut_rank(make_cycle(5), vertex_set(4)), structural_error);
}

TEST_CASE("cut_rank is symmetric and matches the span oracle") {
    oracles::rng r(505);
    for (int t = 0; t < 80; ++t) {
        int n = 2 + r.below(8);
        graph g = oracles::random_graph(r, n, 20 + r.below(60));
        vertex_set u(n);
        for (int v = 0; v < n; ++v)
            if (r.percent(50)) u.set(v);
        int a = cut_rank(g, u);
        CHECK(a == cut_rank(g, g.vertices() - u));
        CHECK(a == oracles::cut_rank_by_span(g, u));
    }
}

TEST_SUITE_END();
