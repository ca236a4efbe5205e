#include "quadtile/myerson.hpp"

#include "quadtile/angle.hpp"

#include <cmath>

namespace quadtile {

namespace {
Rational q(long long n, long long d) { return Rational(n, d); }
} // namespace

const std::array<std::array<Rational, 4>, 15>& myerson_sporadic() {
    static const std::array<std::array<Rational, 4>, 15> rows = {{
        {q(1, 21), q(8, 21), q(1, 14), q(3, 14)},
        {q(1, 14), q(5, 14), q(2, 21), q(5, 21)},
        {q(4, 21), q(10, 21), q(3, 14), q(5, 14)},
        {q(1, 20), q(9, 20), q(1, 15), q(4, 15)},
        {q(2, 15), q(7, 15), q(3, 20), q(7, 20)},
        {q(1, 30), q(3, 10), q(1, 15), q(2, 15)},
        {q(1, 15), q(7, 15), q(1, 10), q(7, 30)},
        {q(1, 10), q(13, 30), q(2, 15), q(4, 15)},
        {q(4, 15), q(7, 15), q(3, 10), q(11, 30)},
        {q(1, 30), q(11, 30), q(1, 10), q(1, 10)},
        {q(7, 30), q(13, 30), q(3, 10), q(3, 10)},
        {q(1, 15), q(4, 15), q(1, 10), q(1, 6)},
        {q(2, 15), q(7, 15), q(1, 6), q(3, 10)}, // corrected: x2 is 7/15
        {q(1, 12), q(5, 12), q(1, 10), q(3, 10)},
        {q(1, 10), q(3, 10), q(1, 6), q(1, 6)},
    }};
    return rows;
}

std::array<Rational, 4> myerson_parametric(const Rational& t) {
    return {q(1, 6), t, t / Rational(2), q(1, 2) - t / Rational(2)};
}

const std::array<std::array<int, 4>, 8>& myerson_permutations() {
    static const std::array<std::array<int, 4>, 8> perms = {{
        {0, 1, 2, 3},
        {0, 1, 3, 2},
        {1, 0, 2, 3},
        {1, 0, 3, 2},
        {2, 3, 0, 1},
        {3, 2, 0, 1},
        {2, 3, 1, 0},
        {3, 2, 1, 0},
    }};
    return perms;
}

std::string range_case_name(RangeCase c) {
    switch (c) {
        case RangeCase::Convex: return "convex";
        case RangeCase::AlphaGePi: return "alpha>=pi";
        case RangeCase::BetaGePi: return "beta>=pi";
        case RangeCase::GammaGePi: return "gamma>=pi";
        default: return "delta>=pi";
    }
}

namespace {

AngleForm form(Rational ca, Rational cb, Rational cg, Rational cd, Rational c1) {
    return AngleForm{std::move(ca), std::move(cb), std::move(cg), std::move(cd),
                     std::move(c1)};
}

std::vector<RecalRow> build_recal_rows() {
    const Rational h(1, 2), z(0), one(1), two(2);
    std::vector<RecalRow> rows;
    auto add = [&](RangeCase c, AngleForm a, AngleForm b, AngleForm g, AngleForm d) {
        rows.push_back(RecalRow{c, {a, b, g, d}});
    };
    const AngleForm half_a = form(h, z, z, z, z);          // alpha/2
    const AngleForm half_b = form(z, h, z, z, z);          // beta/2
    const AngleForm pi_minus_half_a = form(-h, z, z, z, one);
    const AngleForm pi_minus_half_b = form(z, -h, z, z, one);
    const AngleForm g_minus_half_a = form(-h, z, one, z, z);
    const AngleForm half_a_minus_g = form(h, z, -one, z, z);
    const AngleForm d_minus_half_b = form(z, -h, z, one, z);
    const AngleForm half_b_minus_d = form(z, h, z, -one, z);
    const AngleForm pi_plus_half_b_minus_d = form(z, h, z, -one, one);
    const AngleForm pi_plus_half_a_minus_g = form(h, z, -one, z, one);

    using RC = RangeCase;
    // all four angles < pi
    add(RC::Convex, g_minus_half_a, half_b, half_a, d_minus_half_b);
    add(RC::Convex, half_a_minus_g, half_b, half_a, half_b_minus_d);
    add(RC::Convex, g_minus_half_a, half_b, half_a, pi_plus_half_b_minus_d);
    add(RC::Convex, pi_plus_half_a_minus_g, half_b, half_a, d_minus_half_b);
    add(RC::Convex, pi_plus_half_a_minus_g, half_b, half_a, pi_plus_half_b_minus_d);
    // alpha >= pi
    add(RC::AlphaGePi, g_minus_half_a, half_b, pi_minus_half_a, d_minus_half_b);
    add(RC::AlphaGePi, g_minus_half_a, half_b, pi_minus_half_a, pi_plus_half_b_minus_d);
    add(RC::AlphaGePi, form(-h, z, one, z, one), half_b, pi_minus_half_a, half_b_minus_d);
    add(RC::AlphaGePi, half_a_minus_g, half_b, pi_minus_half_a, half_b_minus_d);
    // beta >= pi
    add(RC::BetaGePi, g_minus_half_a, pi_minus_half_b, half_a, d_minus_half_b);
    add(RC::BetaGePi, pi_plus_half_a_minus_g, pi_minus_half_b, half_a, d_minus_half_b);
    add(RC::BetaGePi, half_a_minus_g, pi_minus_half_b, half_a, form(z, -h, z, one, one));
    add(RC::BetaGePi, half_a_minus_g, pi_minus_half_b, half_a, half_b_minus_d);
    // gamma >= pi
    add(RC::GammaGePi, pi_plus_half_a_minus_g, half_b, half_a, d_minus_half_b);
    add(RC::GammaGePi, pi_plus_half_a_minus_g, half_b, half_a, pi_plus_half_b_minus_d);
    add(RC::GammaGePi, form(-h, z, one, z, -one), half_b, half_a, half_b_minus_d);
    add(RC::GammaGePi, form(h, z, -one, z, two), half_b, half_a, half_b_minus_d);
    // delta >= pi
    add(RC::DeltaGePi, g_minus_half_a, half_b, half_a, pi_plus_half_b_minus_d);
    add(RC::DeltaGePi, pi_plus_half_a_minus_g, half_b, half_a, pi_plus_half_b_minus_d);
    add(RC::DeltaGePi, half_a_minus_g, half_b, half_a, form(z, -h, z, one, -one));
    add(RC::DeltaGePi, half_a_minus_g, half_b, half_a, form(z, h, z, -one, two));
    return rows;
}

} // namespace

const std::vector<RecalRow>& recalibration_rows() {
    static const std::vector<RecalRow> rows = build_recal_rows();
    return rows;
}

std::vector<RecalRow> recalibration_rows(RangeCase c) {
    std::vector<RecalRow> out;
    for (const auto& r : recalibration_rows())
        if (r.range_case == c) out.push_back(r);
    return out;
}

MyersonCheck myerson_self_check() {
    constexpr double kTol = 1e-12;
    MyersonCheck out;
    auto check_tuple = [&](const std::array<Rational, 4>& t, const std::string& what) {
        for (const auto& perm : myerson_permutations()) {
            double x[4];
            for (int i = 0; i < 4; ++i) x[i] = t[perm[i]].to_double() * kPi;
            double residual = std::fabs(std::sin(x[0]) * std::sin(x[1]) -
                                        std::sin(x[2]) * std::sin(x[3]));
            ++out.checks;
            out.max_residual = std::max(out.max_residual, residual);
            if (residual >= kTol) {
                ++out.failures;
                out.messages.push_back(what + ": residual " + std::to_string(residual));
            }
        }
    };
    const auto& rows = myerson_sporadic();
    for (size_t i = 0; i < rows.size(); ++i)
        check_tuple(rows[i], "sporadic row " + std::to_string(i + 1));
    for (int k = 0; k <= 60; ++k)
        check_tuple(myerson_parametric(Rational(k, 120)),
                    "parametric theta=" + Rational(k, 120).str() + "pi");
    return out;
}

} // namespace quadtile
