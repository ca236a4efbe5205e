#ifndef QUADTILE_MYERSON_HPP
#define QUADTILE_MYERSON_HPP

#include "quadtile/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace quadtile {

// Affine form c_a*alpha + c_b*beta + c_g*gamma + c_d*delta + c_1*pi,
// coefficients exact, constant in pi units.
struct AngleForm {
    Rational ca, cb, cg, cd, c1;
};

// Rational solutions (x1, x2, x3, x4) in [0, pi/2] of
// sin x1 sin x2 = sin x3 sin x4, in pi units. The sporadic list carries the
// corrected thirteenth row (x2 = 7/15).
const std::array<std::array<Rational, 4>, 15>& myerson_sporadic();

// The parametric solution (pi/6, t, t/2, pi/2 - t/2) evaluated at t (pi units).
std::array<Rational, 4> myerson_parametric(const Rational& t);

// The eight index permutations preserving the equation.
const std::array<std::array<int, 4>, 8>& myerson_permutations();

enum class RangeCase { Convex, AlphaGePi, BetaGePi, GammaGePi, DeltaGePi };

std::string range_case_name(RangeCase c);

// One recalibration row: the four expressions whose values land in [0, pi/2]
// under the case hypothesis.
struct RecalRow {
    RangeCase range_case;
    std::array<AngleForm, 4> x;
};

const std::vector<RecalRow>& recalibration_rows();
std::vector<RecalRow> recalibration_rows(RangeCase c);

struct MyersonCheck {
    int failures = 0;
    int checks = 0;
    double max_residual = 0.0;
    std::vector<std::string> messages;
};

// Verifies every sporadic row under all eight permutations and the parametric
// identity on a theta grid (k*pi/120); residual tolerance 1e-12.
MyersonCheck myerson_self_check();

} // namespace quadtile

#endif
