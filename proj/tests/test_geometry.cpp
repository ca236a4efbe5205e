#include "quadtile/geometry.hpp"

#include "doctest.h"

#include <cmath>

using namespace quadtile;

TEST_CASE("coolsaet residual") {
    CHECK(coolsaet_residual(kPi, kPi / 2, kPi / 2, kPi / 4) == doctest::Approx(0.0));

    // QP6 a3b angles: (2pi/3, pi - d, pi/2, d) with cos d = (1 - sqrt(3)/3)/2
    double d = std::acos((1.0 - std::sqrt(3.0) / 3.0) / 2.0);
    CHECK(std::fabs(coolsaet_residual(2 * kPi / 3, kPi - d, kPi / 2, d)) < 1e-12);

    // generic angles give a nonzero residual
    double r = coolsaet_residual(kPi / 2, kPi / 2, kPi / 2, kPi / 3);
    double expect = std::sin(kPi / 4) * std::sin(kPi / 3 - kPi / 4) -
                    std::sin(kPi / 4) * std::sin(kPi / 4);
    CHECK(r == doctest::Approx(expect));
    CHECK(std::fabs(r) > 1e-3);
}

TEST_CASE("realize_a3b on the isolated tilings") {
    SUBCASE("S2") {
        double beta = std::acos((std::sqrt(2.0) - 1.0) / 2.0);
        double delta = std::acos((1.0 - std::sqrt(2.0)) / 2.0);
        auto g = realize_a3b(kPi / 2, beta, 3 * kPi / 4, delta);
        CHECK(g.a / kPi == doctest::Approx(0.33).epsilon(0.02));
        CHECK(g.b / kPi == doctest::Approx(0.12).epsilon(0.04));
        CHECK(std::cos(g.a) ==
              doctest::Approx(std::sqrt((2 * std::sqrt(2.0) - 1) / 7)).epsilon(1e-12));
        CHECK(std::cos(g.b) ==
              doctest::Approx(std::sqrt((22 * std::sqrt(2.0) - 25) / 7)).epsilon(1e-12));
        CHECK(g.closure < 1e-9);
        CHECK(g.simple == true);
    }
    SUBCASE("S5") {
        auto g = realize_a3b(4 * kPi / 9, 7 * kPi / 9, kPi / 3, 5 * kPi / 9);
        CHECK(g.a / kPi == doctest::Approx(0.17).epsilon(0.03));
        CHECK(g.b / kPi == doctest::Approx(0.26).epsilon(0.03));
        // cos b is the largest root of 9x^3 + 9x^2 - 9x - 1
        double x = std::cos(g.b);
        CHECK(std::fabs(9 * x * x * x + 9 * x * x - 9 * x - 1) < 1e-9);
        CHECK(g.closure < 1e-9);
        CHECK(g.simple == true);
    }
    SUBCASE("S3 degenerates to a triangle") {
        auto g = realize_a3b(kPi, kPi / 2, kPi / 2, kPi / 4);
        CHECK(g.degeneracy == Degeneracy::TriangleAlphaPi);
        CHECK(g.a == doctest::Approx(kPi / 4).epsilon(1e-12));
        CHECK(g.b == doctest::Approx(kPi / 2).epsilon(1e-12));
    }
    SUBCASE("identity violation") {
        CHECK_THROWS_AS(realize_a3b(kPi / 2, kPi / 2, kPi / 2, kPi / 3),
                        IdentityViolated);
    }
}

TEST_CASE("realize_a2bc") {
    SUBCASE("QP6-prime values") {
        double a = std::acos(std::sqrt(5.0) / 3.0);
        auto g = realize_a2bc(2 * kPi / 3, 2 * kPi / 3, kPi / 2, kPi / 3, a);
        CHECK(std::cos(g.b) ==
              doctest::Approx((std::sqrt(5.0) - 1) / (2 * std::sqrt(3.0))).epsilon(1e-10));
        CHECK(std::cos(g.c) ==
              doctest::Approx((std::sqrt(5.0) + 1) / (2 * std::sqrt(3.0))).epsilon(1e-10));
        CHECK(g.closure < 1e-9);
    }
    SUBCASE("QP6 family kite at delta = pi/2") {
        double delta = kPi / 2;
        double a = std::asin(1.0 / (std::sqrt(3.0) * std::sin(delta)));
        auto g = realize_a2bc(2 * kPi / 3, kPi - delta, kPi / 2, delta, a);
        CHECK(g.b == doctest::Approx(kPi / 4).epsilon(1e-10));
        CHECK(g.c == doctest::Approx(kPi / 4).epsilon(1e-10));
        CHECK(g.degeneracy == Degeneracy::Kite);
        CHECK(g.edge_reduction == EdgeReduction::BEqualsC);
    }
    SUBCASE("E5 family at f=16") {
        double sec = 1.0 / std::cos(kPi / 4);
        double a = std::acos(1.0 - (3.0 - std::sqrt(5.0)) / 4.0 * sec * sec);
        auto g = realize_a2bc(kPi / 2, 3 * kPi / 4, kPi / 2, kPi / 2, a);
        CHECK(std::cos(g.b) ==
              doctest::Approx((std::sqrt(5.0) - 1) / 4 * sec).epsilon(1e-10));
        CHECK(std::cos(g.c) ==
              doctest::Approx((3 - std::sqrt(5.0)) * std::cos(kPi / 4) +
                              (std::sqrt(5.0) - 2) * sec)
                  .epsilon(1e-10));
        CHECK(g.closure < 1e-9);
    }
    SUBCASE("scaled pair recovers sin^2 gamma") {
        double a = std::acos(std::sqrt(5.0) / 3.0);
        auto g = realize_a2bc(2 * kPi / 3, 2 * kPi / 3, kPi / 2, kPi / 3, a);
        double sg = std::sin(g.gamma);
        double ca = std::cos(g.a), sa = std::sin(g.a);
        double pb = (1 - std::cos(g.alpha)) * std::sin(g.beta) * std::cos(g.delta) * ca * ca -
                    std::sin(g.alpha) * std::cos(g.beta + g.delta) * ca -
                    std::sin(g.beta) * std::cos(g.delta) -
                    std::cos(g.alpha) * std::cos(g.beta) * std::sin(g.delta);
        double qb = ((1 - std::cos(g.alpha)) * std::sin(g.beta) * ca -
                     std::sin(g.alpha) * std::cos(g.beta)) *
                    sa;
        CHECK(pb * pb + qb * qb == doctest::Approx(sg * sg).epsilon(1e-10));
    }
    SUBCASE("existence violation") {
        CHECK_THROWS_AS(realize_a2bc(kPi / 2, kPi / 2, kPi / 2, kPi / 2, 1.0),
                        NotRealizable);
        CHECK_THROWS_AS(realize_a2bc(kPi / 2, kPi / 2, kPi, kPi / 2, 1.0), DomainError);
    }
}

TEST_CASE("closure residual sensitivity") {
    auto g = realize_a3b(kPi / 2, 3 * kPi / 4,
                         std::acos(std::sqrt((7 - 4 * std::sqrt(2.0)) / 17)),
                         kPi - std::acos(std::sqrt((7 - 4 * std::sqrt(2.0)) / 17)));
    CHECK(g.closure < 1e-9);
    QuadGeometry perturbed = g;
    perturbed.b += 1e-3;
    CHECK(closure_residual(perturbed) > 1e-4);
}

TEST_CASE("simplicity rules") {
    SUBCASE("S5 via beta > delta") {
        auto g = realize_a3b(4 * kPi / 9, 7 * kPi / 9, kPi / 3, 5 * kPi / 9);
        auto v = simplicity_check(g);
        CHECK(v.simple);
    }
    SUBCASE("synthetic all-reflex is unknown") {
        QuadGeometry g;
        g.tile_kind = TileKind::A3B;
        g.alpha = g.beta = g.gamma = g.delta = 1.2 * kPi;
        g.a = 0.5;
        g.b = 0.7;
        auto v = simplicity_check(g);
        CHECK(!v.simple);
    }
}

TEST_CASE("earth_map_edges") {
    CHECK(std::cos(earth_map_edges(2 * kPi / 3, 2 * kPi / 3).a) ==
          doctest::Approx(1.0 / 3).epsilon(1e-12));

    auto at_pi = earth_map_edges(kPi, kPi / 3);
    CHECK(std::cos(at_pi.a) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(at_pi.degeneracy == Degeneracy::TriangleAlphaPi);

    auto gamma_pi = earth_map_edges(0.6 * kPi, 0.4 * kPi);
    CHECK(gamma_pi.degeneracy == Degeneracy::TriangleGammaPi);

    auto rhombus = earth_map_edges(0.8 * kPi, 0.4 * kPi);
    CHECK(rhombus.degeneracy == Degeneracy::Rhombus);

    auto reflex = earth_map_edges(1.2 * kPi, 0.3 * kPi);
    CHECK(reflex.shape == Shape::AlphaReflex);

    CHECK_THROWS_AS(earth_map_edges(0.4 * kPi, 0.5 * kPi), DomainError);
}

TEST_CASE("solve_free_angle reproduces the S1 roots") {
    // the admissible range ((1-4/f)pi, pi) is open: the lower endpoint is a
    // zero of the residual for every f, so the scan starts just inside
    const double inset = 1e-9;
    auto residual_for = [](long long f) {
        return [f](double d) {
            return std::sin(d) * std::sin(d - 4 * kPi / f) +
                   std::sin(4 * kPi / f) * std::sin(2 * d - 4 * kPi / f);
        };
    };
    SUBCASE("f=12") {
        auto roots =
            solve_free_angle(residual_for(12), (1 - 4.0 / 12) * kPi + inset, kPi - inset);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].x / kPi == doctest::Approx(0.7902).epsilon(1e-3));
        CHECK(std::cos(roots[0].x) == doctest::Approx(-std::sqrt(10.0) / 4).epsilon(1e-9));
        CHECK(std::fabs(roots[0].residual) < 1e-11);
    }
    SUBCASE("f=16") {
        auto roots = solve_free_angle(residual_for(16), (1 - 4.0 / 16) * kPi + inset, kPi - inset);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].x / kPi == doctest::Approx(0.7898).epsilon(1e-3));
        CHECK(std::fabs(roots[0].residual) < 1e-11);
    }
    SUBCASE("f=20 has no root") {
        auto roots = solve_free_angle(residual_for(20), (1 - 4.0 / 20) * kPi + inset, kPi - inset);
        CHECK(roots.empty());
    }
}

TEST_CASE("cos a expressions agree for realized tiles") {
    double beta = std::acos((std::sqrt(2.0) - 1.0) / 2.0);
    double delta = std::acos((1.0 - std::sqrt(2.0)) / 2.0);
    double alpha = kPi / 2, gamma = 3 * kPi / 4;
    double e1 = (std::sin(beta) * std::cos(gamma) + std::sin(delta)) /
                ((1 - std::cos(beta)) * std::sin(gamma));
    double e2 = (std::sin(alpha) * std::cos(delta) + std::sin(gamma)) /
                ((1 - std::cos(alpha)) * std::sin(delta));
    CHECK(std::fabs(e1 - e2) < 1e-10);
}

TEST_CASE("closure residual is invariant under cyclic shifts of the product") {
    auto g = realize_a3b(4 * kPi / 9, 7 * kPi / 9, kPi / 3, 5 * kPi / 9);
    // conjugating the product by a rotation preserves the distance to the
    // identity in any orthogonally-invariant norm; spot-check with the
    // factors rolled by two positions
    Mat3 p = rotation_y(g.a);
    p = mat_mul(p, rotation_z(kPi - g.alpha));
    p = mat_mul(p, rotation_y(g.a));
    p = mat_mul(p, rotation_z(kPi - g.delta));
    p = mat_mul(p, rotation_y(g.b));
    p = mat_mul(p, rotation_z(kPi - g.gamma));
    p = mat_mul(p, rotation_y(g.c));
    p = mat_mul(p, rotation_z(kPi - g.beta));
    double worst = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::fabs(p[i][j] - (i == j ? 1.0 : 0.0)));
    CHECK(worst < 1e-9);
    CHECK(g.closure < 1e-9);
}

TEST_CASE("rhombus collapse is reported") {
    // beta = delta with gamma < pi makes a = b
    CHECK_THROWS_AS(realize_a3b(0.8 * kPi, 0.4 * kPi, 0.8 * kPi, 0.4 * kPi),
                    RhombusDegenerate);
}
