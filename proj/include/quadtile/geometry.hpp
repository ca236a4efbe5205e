#ifndef QUADTILE_GEOMETRY_HPP
#define QUADTILE_GEOMETRY_HPP

#include "quadtile/angle.hpp"

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace quadtile {

enum class TileKind { A3B, A2BC };

enum class Shape { Convex, AlphaReflex, BetaReflex, GammaReflex, DeltaReflex };
enum class Degeneracy { None, TriangleAlphaPi, TriangleGammaPi, Rhombus, Kite };
enum class EdgeReduction { None, CEqualsA, BEqualsA, BEqualsC };

std::string shape_name(Shape s);
std::string degeneracy_name(Degeneracy d);

struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotRealizable : GeometryError {
    using GeometryError::GeometryError;
};
struct IdentityViolated : GeometryError {
    using GeometryError::GeometryError;
};
struct RhombusDegenerate : GeometryError {
    using GeometryError::GeometryError;
};

// A realized tile. Angles and edges in radians; c is meaningful for A2BC
// (for A3B it holds the reduced value c = a so the closure product applies
// uniformly).
struct QuadGeometry {
    TileKind tile_kind = TileKind::A3B;
    double alpha = 0, beta = 0, gamma = 0, delta = 0;
    double a = 0, b = 0, c = 0;
    Shape shape = Shape::Convex;
    Degeneracy degeneracy = Degeneracy::None;
    EdgeReduction edge_reduction = EdgeReduction::None;
    double coolsaet = 0;      // identity residual (A3B)
    double closure = 0;       // rotation-product distance from identity
    double theta_oriented = 0; // pi - alpha
    std::optional<bool> simple; // true when the sufficient rules fire
};

// sin(alpha/2) sin(delta - beta/2) - sin(beta/2) sin(gamma - alpha/2)
double coolsaet_residual(double alpha, double beta, double gamma, double delta);

// Almost equilateral (a^3 b) tile from its angles.
QuadGeometry realize_a3b(double alpha, double beta, double gamma, double delta,
                         double tol = 1e-9);

// a^2 b c tile from its angles and the a edge.
QuadGeometry realize_a2bc(double alpha, double beta, double gamma, double delta,
                          double a, double tol = 1e-9);

// Max-norm distance of Y(c)Z(pi-b)Y(a)Z(pi-a)Y(a)Z(pi-d)Y(b)Z(pi-g) from I.
double closure_residual(const QuadGeometry& g);

using Mat3 = std::array<std::array<double, 3>, 3>;
Mat3 rotation_y(double t);
Mat3 rotation_z(double t);
Mat3 mat_mul(const Mat3& a, const Mat3& b);

struct SimplicityVerdict {
    bool simple = false; // false means Unknown, never "non-simple"
    std::vector<std::string> trace;
};

SimplicityVerdict simplicity_check(const QuadGeometry& g, double tol = 1e-9);

struct EarthMapEdges {
    double a = 0, b = 0;
    Shape shape = Shape::Convex;
    Degeneracy degeneracy = Degeneracy::None;
    double theta_oriented = 0;
};

// Edge lengths of the earth-map tile from alpha in (pi/2, 3pi/2), beta in (0, pi).
EarthMapEdges earth_map_edges(double alpha, double beta, double tol = 1e-9);

struct Root {
    double x = 0;
    double residual = 0;
};

// All sign-change roots of the residual on [lo, hi], bisected to 1e-13.
std::vector<Root> solve_free_angle(const std::function<double(double)>& residual,
                                   double lo, double hi, int samples = 10000);

} // namespace quadtile

#endif
