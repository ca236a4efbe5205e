#include "quadtile/tilings.hpp"

#include "doctest.h"

#include <random>

using namespace quadtile;

namespace {
VertexCombo vc(int m, int n, int k, int l) { return VertexCombo{m, n, k, l}; }
}

TEST_CASE("earth map generation and verification") {
    for (long long f = 6; f <= 64; f += 2) {
        auto map = generate_earth_map(f, TileKind::A3B);
        auto report = verify_tiling(map);
        CAPTURE(f);
        REQUIRE(report.pass);
        // exactly two poles of degree f/2 (f=6: all degree 3)
        CHECK(report.vertex_multiset[vc(1, 0, 1, 1)] == f);
        CHECK(report.vertex_multiset[vc(0, static_cast<int>(f / 2), 0, 0)] == 2);
        auto edges = derive_edges(map);
        CHECK(edges.size() == static_cast<size_t>(2 * f));
    }
}

TEST_CASE("a2bc earth map") {
    auto map = generate_earth_map(8, TileKind::A2BC);
    auto report = verify_tiling(map);
    REQUIRE(report.pass);
    CHECK(report.vertex_multiset[vc(0, 1, 1, 1)] == 8); // beta gamma delta
    CHECK(report.vertex_multiset[vc(4, 0, 0, 0)] == 2); // alpha^(f/2)
}

TEST_CASE("cube endpoint") {
    auto map = generate_earth_map(6, TileKind::A3B);
    auto report = verify_tiling(map);
    REQUIRE(report.pass);
    CHECK(report.vertex_multiset.size() == 2);
    CHECK(report.vertex_multiset[vc(1, 0, 1, 1)] == 6);
    CHECK(report.vertex_multiset[vc(0, 3, 0, 0)] == 2);
    // every vertex has degree 3
    CHECK(report.degree_histogram.v[3] == 8);
}

TEST_CASE("E-prime flips") {
    SUBCASE("three blocks of size 2 at f=12") {
        auto base = generate_earth_map(12, TileKind::A3B);
        // alpha = 2 beta family: alpha = 2pi/3, beta = pi/3, gamma+delta = 4pi/3
        std::array<AngleExpr, 4> angles = {
            AngleExpr::exact(Rational(2, 3)), AngleExpr::exact(Rational(0), Rational(4)),
            AngleExpr::exact(Rational(7, 9)), AngleExpr::exact(Rational(5, 9))};
        FlipSpec spec;
        spec.kind = FlipSpec::Kind::EPrime;
        spec.s = 2;
        spec.positions = {0, 2, 4};
        auto flipped = apply_flip(base, spec, angles);
        auto report = verify_tiling(flipped);
        REQUIRE(report.pass);
        CHECK(report.vertex_multiset[vc(1, 0, 1, 1)] == 6);  // (f-6) agd
        CHECK(report.vertex_multiset[vc(3, 0, 0, 0)] == 2);  // alpha^3 poles
        CHECK(report.vertex_multiset[vc(0, 2, 1, 1)] == 6);  // beta^2 gd
    }
    SUBCASE("one block at f=16") {
        auto base = generate_earth_map(16, TileKind::A3B);
        // alpha = 3 beta: alpha = 3pi/4, gamma + delta = 5pi/4
        std::array<AngleExpr, 4> angles = {
            AngleExpr::exact(Rational(3, 4)), AngleExpr::exact(Rational(0), Rational(4)),
            AngleExpr::exact(Rational(3, 4) - Rational(1, 16) + Rational(1, 2)),
            AngleExpr::exact(Rational(1, 16))};
        // gamma+delta = 5/4: gamma = 19/16, delta = 1/16
        FlipSpec spec;
        spec.kind = FlipSpec::Kind::EPrime;
        spec.s = 3;
        spec.positions = {1};
        auto flipped = apply_flip(base, spec, angles);
        auto report = verify_tiling(flipped);
        REQUIRE(report.pass);
        CHECK(report.vertex_multiset[vc(1, 0, 1, 1)] == 14); // f-2
        CHECK(report.vertex_multiset[vc(1, 5, 0, 0)] == 2);  // alpha beta^(f/2-s)
        CHECK(report.vertex_multiset[vc(0, 3, 1, 1)] == 2);  // beta^s gd
    }
    SUBCASE("precondition failure") {
        auto base = generate_earth_map(12, TileKind::A3B);
        std::array<AngleExpr, 4> angles = {
            AngleExpr::exact(Rational(2, 3)), AngleExpr::exact(Rational(0), Rational(4)),
            AngleExpr::exact(Rational(7, 9)), AngleExpr::exact(Rational(5, 9))};
        FlipSpec spec;
        spec.kind = FlipSpec::Kind::EPrime;
        spec.s = 3; // alpha != 3 beta
        spec.positions = {0};
        CHECK_THROWS_AS(apply_flip(base, spec, angles), FlipPreconditionError);
    }
    SUBCASE("double flip restores the original") {
        auto base = generate_earth_map(12, TileKind::A3B);
        std::array<AngleExpr, 4> angles = {
            AngleExpr::exact(Rational(2, 3)), AngleExpr::exact(Rational(0), Rational(4)),
            AngleExpr::exact(Rational(7, 9)), AngleExpr::exact(Rational(5, 9))};
        FlipSpec spec;
        spec.kind = FlipSpec::Kind::EPrime;
        spec.s = 2;
        spec.positions = {1};
        auto once = apply_flip(base, spec, angles);
        CHECK(!maps_equal(once, base));
        CHECK(verify_tiling(once).pass);
        auto twice = apply_flip(once, spec, angles);
        TilingMap reference = base;
        reference.angles = angles;
        reference.name = twice.name;
        CHECK(maps_equal(twice, reference));
        // a different block of a modified map is out of contract
        FlipSpec other = spec;
        other.positions = {3};
        CHECK_THROWS_AS(apply_flip(once, other, angles), DomainError);
    }
}

TEST_CASE("E-double-prime flips") {
    // f=18, two blocks of size 4: gamma + delta = 4 beta
    auto base = generate_earth_map(18, TileKind::A3B);
    std::array<AngleExpr, 4> angles = {
        AngleExpr::exact(Rational(10, 9)), AngleExpr::exact(Rational(0), Rational(4)),
        AngleExpr::exact(Rational(13, 18)), AngleExpr::exact(Rational(1, 6))};
    FlipSpec spec;
    spec.kind = FlipSpec::Kind::EDoublePrime;
    spec.s = 4;
    spec.positions = {0, 4};
    auto flipped = apply_flip(base, spec, angles);
    auto report = verify_tiling(flipped);
    REQUIRE(report.pass);
    CHECK(report.vertex_multiset[vc(1, 0, 1, 1)] == 14); // f-4
    CHECK(report.vertex_multiset[vc(1, 4, 0, 0)] == 4);  // alpha beta^4
    CHECK(report.vertex_multiset[vc(0, 1, 2, 2)] == 2);  // beta gamma^2 delta^2
}

TEST_CASE("rearrangement") {
    SUBCASE("q=1") {
        auto map = generate_rearrangement(1);
        CHECK(map.f == 10);
        auto report = verify_tiling(map);
        REQUIRE(report.pass);
        CHECK(report.vertex_multiset[vc(1, 0, 1, 1)] == 4);
        CHECK(report.vertex_multiset[vc(0, 0, 3, 1)] == 2);
        CHECK(report.vertex_multiset[vc(1, 2, 0, 0)] == 4);
        CHECK(report.vertex_multiset[vc(1, 1, 0, 2)] == 2);
    }
    SUBCASE("q=4") {
        auto map = generate_rearrangement(4);
        CHECK(map.f == 28);
        auto report = verify_tiling(map);
        REQUIRE(report.pass);
        CHECK(report.vertex_multiset[vc(1, 0, 1, 1)] == 22); // f-6
        CHECK(report.vertex_multiset[vc(0, 0, 3, 1)] == 2);
        CHECK(report.vertex_multiset[vc(1, 5, 0, 0)] == 4);  // alpha beta^5
        CHECK(report.vertex_multiset[vc(1, 4, 0, 2)] == 2);  // alpha beta^4 delta^2
    }
    SUBCASE("q=0 rejected") {
        CHECK_THROWS_AS(generate_rearrangement(0), DomainError);
    }
}

TEST_CASE("round trip and format errors") {
    auto map = generate_earth_map(8, TileKind::A3B);
    std::string text = save_tiling(map);
    auto loaded = load_tiling(text);
    CHECK(maps_equal(map, loaded));
    CHECK(save_tiling(loaded) == text);

    CHECK_THROWS_AS(load_tiling("{\"tile_kind\": \"a3b\"}"), VersionError);
    CHECK_THROWS_AS(load_tiling("{\"version\": 2, \"tile_kind\": \"a3b\"}"), VersionError);
    std::string with_unknown = text;
    with_unknown.insert(1, "\"mystery\": 1,");
    CHECK_THROWS_AS(load_tiling(with_unknown), ParseError);
    CHECK_THROWS_AS(load_tiling("not json"), ParseError);
}

TEST_CASE("injected corruption is detected") {
    auto map = generate_earth_map(10, TileKind::A3B);
    SUBCASE("corner swap breaks verification") {
        std::swap(map.tiles[0].corners[0], map.tiles[0].corners[2]);
        bool failed = false;
        try {
            auto report = verify_tiling(map);
            failed = !report.pass;
        } catch (const StructureError&) {
            failed = true;
        }
        CHECK(failed);
    }
    SUBCASE("duplicated tile is a structure error") {
        map.tiles.push_back(map.tiles[0]);
        map.tiles.back().id = 99;
        CHECK_THROWS_AS(verify_tiling(map), StructureError);
    }
}

TEST_CASE("random corruptions never pass verification") {
    std::mt19937 rng(99);
    auto base = generate_rearrangement(2); // f = 16, nontrivial structure
    for (int trial = 0; trial < 200; ++trial) {
        TilingMap map = base;
        std::uniform_int_distribution<size_t> pick_tile(0, map.tiles.size() - 1);
        std::uniform_int_distribution<int> pick_corner(0, 3);
        std::uniform_int_distribution<int> mode(0, 2);
        auto& tile = map.tiles[pick_tile(rng)];
        int c1 = pick_corner(rng), c2 = pick_corner(rng);
        switch (mode(rng)) {
            case 0:
                if (c1 == c2) c2 = (c2 + 1) % 4;
                std::swap(tile.corners[c1], tile.corners[c2]);
                break;
            case 1:
                std::rotate(tile.corners.begin(), tile.corners.begin() + 1,
                            tile.corners.end());
                break;
            default:
                tile.corners[c1] = (tile.corners[c1] + 1) % (map.f + 2);
                break;
        }
        if (maps_equal(map, base)) continue;
        bool caught = false;
        try {
            caught = !verify_tiling(map).pass;
        } catch (const StructureError&) {
            caught = true;
        }
        CHECK(caught);
    }
}

TEST_CASE("duplicate tile ids are rejected") {
    auto map = generate_earth_map(8, TileKind::A3B);
    map.tiles.push_back(map.tiles[0]);
    CHECK_THROWS_AS(derive_edges(map), StructureError);
}
