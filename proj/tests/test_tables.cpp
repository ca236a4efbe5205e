#include "quadtile/tables.hpp"

#include "doctest.h"

#include <cmath>

using namespace quadtile;

TEST_CASE("isolated rows match their closed forms") {
    for (const auto& row : isolated_tiling_rows()) {
        CAPTURE(row.tiling);
        CHECK(std::fabs(row.realized.alpha - row.closed.at("alpha")) < 1e-9);
        CHECK(std::fabs(row.realized.b - row.closed.at("b")) < 1e-9);
        CHECK(row.realized.closure < 1e-9);
    }
}

TEST_CASE("catalog approximations stay within half a printed digit") {
    for (const auto& row : isolated_tiling_rows()) {
        for (const auto& [key, approx] : row.approx_pi) {
            CAPTURE(row.tiling + "." + key);
            CHECK(std::fabs(row.closed.at(key) / kPi - approx) <= 5e-3);
        }
    }
}

TEST_CASE("a2bc rows: the cube family meets its reductions") {
    auto rows = a2bc_tiling_rows({16});
    REQUIRE(rows.size() >= 4);
    // c = a at the first reduction point, b = c at the kite
    CHECK(std::fabs(rows[0].closed.at("c") - rows[0].closed.at("a")) < 1e-9);
    CHECK(rows[0].realized.edge_reduction == EdgeReduction::CEqualsA);
    CHECK(std::fabs(rows[1].closed.at("b") - rows[1].closed.at("c")) < 1e-9);
    CHECK(rows[1].realized.degeneracy == Degeneracy::Kite);
    CHECK(std::fabs(rows[2].closed.at("b") - rows[2].closed.at("a")) < 1e-9);
    // the rigid modification: b + c = pi/2
    CHECK(std::fabs(rows[3].closed.at("b") + rows[3].closed.at("c") - kPi / 2) < 1e-9);
}

TEST_CASE("csv output is deterministic and covers all rows") {
    std::string a = tables_csv();
    std::string b = tables_csv();
    CHECK(a == b);
    CHECK(a.find("S5,36,a3b") != std::string::npos);
    CHECK(a.find("QP6',24,a2bc") != std::string::npos);
    CHECK(a.find("E5(16),16,a2bc") != std::string::npos);
}
