#ifndef QUADTILE_LINEAR_HPP
#define QUADTILE_LINEAR_HPP

#include "quadtile/rational.hpp"

#include <array>
#include <vector>

namespace quadtile {

using RatRow = std::vector<Rational>;
using RatMatrix = std::vector<RatRow>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RatMatrix& m);

// Solves an angle system [A | b] whose unknowns are (alpha, beta, gamma,
// delta, ..., u) with u = 1/f in the designated column. Auxiliary unknowns
// (e.g. the Type II parameter) may sit between delta and u; the four angles
// must come out either pinned or affine in u alone.
struct AngleSolve {
    enum class Status { Inconsistent, Pinned, FamilyInU, Underdetermined };
    Status status = Status::Inconsistent;
    std::array<Rational, 4> c0{}; // angle_i = c0[i] + c1[i] * u  (pi units)
    std::array<Rational, 4> c1{};
    Rational u; // Pinned only: the forced value of 1/f
};

AngleSolve solve_angle_system(RatMatrix rows, int u_col);

} // namespace quadtile

#endif
