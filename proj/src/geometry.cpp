#include "quadtile/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace quadtile {

std::string shape_name(Shape s) {
    switch (s) {
        case Shape::Convex: return "convex";
        case Shape::AlphaReflex: return "alpha-reflex";
        case Shape::BetaReflex: return "beta-reflex";
        case Shape::GammaReflex: return "gamma-reflex";
        default: return "delta-reflex";
    }
}

std::string degeneracy_name(Degeneracy d) {
    switch (d) {
        case Degeneracy::None: return "none";
        case Degeneracy::TriangleAlphaPi: return "triangle(alpha=pi)";
        case Degeneracy::TriangleGammaPi: return "triangle(gamma=pi)";
        case Degeneracy::Rhombus: return "rhombus";
        default: return "kite";
    }
}

double coolsaet_residual(double alpha, double beta, double gamma, double delta) {
    return std::sin(alpha / 2) * std::sin(delta - beta / 2) -
           std::sin(beta / 2) * std::sin(gamma - alpha / 2);
}

Mat3 rotation_y(double t) {
    double c = std::cos(t), s = std::sin(t);
    return Mat3{{{c, 0, s}, {0, 1, 0}, {-s, 0, c}}};
}

Mat3 rotation_z(double t) {
    double c = std::cos(t), s = std::sin(t);
    return Mat3{{{c, -s, 0}, {s, c, 0}, {0, 0, 1}}};
}

Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 out{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

double closure_residual(const QuadGeometry& g) {
    Mat3 p = rotation_y(g.c);
    p = mat_mul(p, rotation_z(kPi - g.beta));
    p = mat_mul(p, rotation_y(g.a));
    p = mat_mul(p, rotation_z(kPi - g.alpha));
    p = mat_mul(p, rotation_y(g.a));
    p = mat_mul(p, rotation_z(kPi - g.delta));
    p = mat_mul(p, rotation_y(g.b));
    p = mat_mul(p, rotation_z(kPi - g.gamma));
    double worst = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::fabs(p[i][j] - (i == j ? 1.0 : 0.0)));
    return worst;
}

namespace {

Shape classify_shape(double alpha, double beta, double gamma, double delta) {
    if (alpha >= kPi) return Shape::AlphaReflex;
    if (beta >= kPi) return Shape::BetaReflex;
    if (gamma >= kPi) return Shape::GammaReflex;
    if (delta >= kPi) return Shape::DeltaReflex;
    return Shape::Convex;
}

// angle in (0, 2pi] from its scaled cosine/sine pair (p, q) = r(cos t, sin t)
double angle_from_pair(double p, double q, double r) {
    double t = std::atan2(q / r, p / r);
    if (t <= 0) t += 2 * kPi;
    return t;
}

// spherical triangle side from its three angles, opposite the first
double side_from_angles(double opp, double adj1, double adj2) {
    double v = (std::cos(opp) + std::cos(adj1) * std::cos(adj2)) /
               (std::sin(adj1) * std::sin(adj2));
    v = std::clamp(v, -1.0, 1.0);
    return std::acos(v);
}

} // namespace

QuadGeometry realize_a3b(double alpha, double beta, double gamma, double delta,
                         double tol) {
    QuadGeometry g;
    g.tile_kind = TileKind::A3B;
    g.alpha = alpha;
    g.beta = beta;
    g.gamma = gamma;
    g.delta = delta;
    g.theta_oriented = kPi - alpha;
    g.coolsaet = coolsaet_residual(alpha, beta, gamma, delta);
    g.shape = classify_shape(alpha, beta, gamma, delta);

    constexpr double kDegenerate = 1e-9;
    if (std::fabs(gamma - kPi) < kDegenerate) {
        // isosceles triangle ABD: C sits inside edge BD, beta = delta
        g.degeneracy = Degeneracy::TriangleGammaPi;
        g.a = side_from_angles(delta, alpha, beta);
        double bd = side_from_angles(alpha, beta, delta);
        g.b = bd - g.a;
        g.c = g.a;
        g.closure = closure_residual(g);
        g.simple = std::nullopt;
        return g;
    }
    if (std::fabs(alpha - kPi) < kDegenerate) {
        // triangle BCD: A sits inside edge BD, so BD = 2a
        g.degeneracy = Degeneracy::TriangleAlphaPi;
        g.a = side_from_angles(delta, beta, gamma);
        double bd = side_from_angles(gamma, beta, delta);
        if (std::fabs(bd - 2 * g.a) > 1e-6)
            throw NotRealizable("alpha = pi triangle: BD != 2a");
        g.b = side_from_angles(beta, gamma, delta);
        g.c = g.a;
        g.closure = closure_residual(g);
        g.simple = std::nullopt;
        return g;
    }

    if (std::fabs(g.coolsaet) >= tol)
        throw IdentityViolated("angle identity violated, residual " +
                               std::to_string(g.coolsaet));

    double den1 = (1 - std::cos(beta)) * std::sin(gamma);
    double den2 = (1 - std::cos(alpha)) * std::sin(delta);
    double ca1 = (std::sin(beta) * std::cos(gamma) + std::sin(delta)) / den1;
    double ca2 = (std::sin(alpha) * std::cos(delta) + std::sin(gamma)) / den2;
    bool ok1 = std::fabs(den1) > 1e-12, ok2 = std::fabs(den2) > 1e-12;
    if (!ok1 && !ok2) throw NotRealizable("both cos a expressions are singular");
    double cos_a = ok1 ? ca1 : ca2;
    if (ok1 && ok2 && std::fabs(ca1 - ca2) > 1e-8)
        throw IdentityViolated("the two cos a expressions disagree");
    if (std::fabs(cos_a) >= 1.0) throw NotRealizable("|cos a| >= 1");
    g.a = std::acos(cos_a);

    double sg = std::sin(gamma);
    double p = (1 - std::cos(alpha)) * std::sin(beta) * std::cos(delta) * cos_a * cos_a -
               std::sin(alpha) * std::cos(beta + delta) * cos_a -
               std::sin(beta) * std::cos(delta) - std::cos(alpha) * std::cos(beta) * std::sin(delta);
    double q = ((1 - std::cos(alpha)) * std::sin(beta) * cos_a -
                std::sin(alpha) * std::cos(beta)) *
               std::sin(g.a);
    g.b = angle_from_pair(p, q, sg);
    g.c = g.a;
    if (std::fabs(g.b - g.a) < tol) throw RhombusDegenerate("b equals a");
    g.closure = closure_residual(g);
    g.simple = simplicity_check(g, tol).simple ? std::optional<bool>(true) : std::nullopt;
    return g;
}

QuadGeometry realize_a2bc(double alpha, double beta, double gamma, double delta,
                          double a, double tol) {
    if (std::fabs(std::sin(gamma)) < 1e-12)
        throw DomainError("sin(gamma) = 0 in a2bc realization");
    if (!(a > 0 && a < kPi)) throw DomainError("edge a must lie in (0, pi)");

    QuadGeometry g;
    g.tile_kind = TileKind::A2BC;
    g.alpha = alpha;
    g.beta = beta;
    g.gamma = gamma;
    g.delta = delta;
    g.a = a;
    g.theta_oriented = kPi - alpha;
    g.shape = classify_shape(alpha, beta, gamma, delta);

    double ca = std::cos(a), sa = std::sin(a);
    double s = (std::cos(alpha) - 1) * std::sin(beta) * std::sin(delta) * ca * ca +
               std::sin(alpha) * std::sin(beta + delta) * ca +
               std::sin(beta) * std::sin(delta) -
               std::cos(alpha) * std::cos(beta) * std::cos(delta) + std::cos(gamma);
    if (std::fabs(s) >= tol)
        throw NotRealizable("existence condition fails, residual " + std::to_string(s));

    double sg = std::sin(gamma);
    double pb = (1 - std::cos(alpha)) * std::sin(beta) * std::cos(delta) * ca * ca -
                std::sin(alpha) * std::cos(beta + delta) * ca -
                std::sin(beta) * std::cos(delta) -
                std::cos(alpha) * std::cos(beta) * std::sin(delta);
    double qb = ((1 - std::cos(alpha)) * std::sin(beta) * ca - std::sin(alpha) * std::cos(beta)) * sa;
    double pc = (1 - std::cos(alpha)) * std::cos(beta) * std::sin(delta) * ca * ca -
                std::sin(alpha) * std::cos(beta + delta) * ca -
                std::cos(beta) * std::sin(delta) -
                std::cos(alpha) * std::sin(beta) * std::cos(delta);
    double qc = ((1 - std::cos(alpha)) * std::sin(delta) * ca - std::sin(alpha) * std::cos(delta)) * sa;
    g.b = angle_from_pair(pb, qb, sg);
    g.c = angle_from_pair(pc, qc, sg);
    g.closure = closure_residual(g);

    if (std::fabs(g.b - g.c) < tol) {
        g.edge_reduction = EdgeReduction::BEqualsC;
        g.degeneracy = Degeneracy::Kite;
    } else if (std::fabs(g.c - g.a) < tol) {
        g.edge_reduction = EdgeReduction::CEqualsA;
    } else if (std::fabs(g.b - g.a) < tol) {
        g.edge_reduction = EdgeReduction::BEqualsA;
    }
    g.simple = simplicity_check(g, tol).simple ? std::optional<bool>(true) : std::nullopt;
    return g;
}

SimplicityVerdict simplicity_check(const QuadGeometry& g, double tol) {
    SimplicityVerdict out;
    const double a = g.alpha, b = g.beta, gm = g.gamma, d = g.delta;
    int below_pi = (a < kPi) + (b < kPi) + (gm < kPi) + (d < kPi);
    if (below_pi < 3) {
        out.trace.push_back("fewer than three angles < pi: no rule applies");
        return out;
    }

    bool edge_b_ok = false;
    if (g.tile_kind == TileKind::A3B) {
        if (g.a < kPi && a < kPi && b < kPi && gm < kPi && d < kPi &&
            (b > d + tol || a > gm + tol)) {
            edge_b_ok = true;
            out.trace.push_back("beta > delta or alpha > gamma forces b < pi");
        }
        if (!edge_b_ok && gm < kPi && d < kPi && g.a < kPi) {
            if (std::cos(b - d) + std::cos(gm) > tol) {
                edge_b_ok = true;
                out.trace.push_back("cos(beta-delta) + cos(gamma) > 0 forces b < pi");
            } else if (b <= kPi && (b + kPi > gm + d + tol || d + kPi > b + gm + tol)) {
                edge_b_ok = true;
                out.trace.push_back("lune estimate forces b < pi");
            }
        }
        // swapped alpha <-> beta, gamma <-> delta variant
        if (!edge_b_ok && gm < kPi && d < kPi && g.a < kPi) {
            if (std::cos(a - gm) + std::cos(d) > tol) {
                edge_b_ok = true;
                out.trace.push_back("cos(alpha-gamma) + cos(delta) > 0 forces b < pi");
            } else if (a <= kPi && (a + kPi > gm + d + tol || gm + kPi > a + d + tol)) {
                edge_b_ok = true;
                out.trace.push_back("swapped lune estimate forces b < pi");
            }
        }
        if (!edge_b_ok) {
            out.trace.push_back("no b < pi criterion fired: Unknown");
            return out;
        }
    } else {
        // the b, c recovery pins sin b, sin c; positive sine means < pi
        if (g.b < kPi && g.c < kPi) {
            edge_b_ok = true;
            out.trace.push_back("recovered b, c lie in (0, pi)");
        } else {
            out.trace.push_back("an edge reaches pi: Unknown");
            return out;
        }
    }
    if (g.a >= kPi) {
        out.trace.push_back("edge a >= pi: Unknown");
        return out;
    }
    out.simple = true;
    out.trace.push_back("all edges < pi and at least three angles < pi: simple");
    return out;
}

EarthMapEdges earth_map_edges(double alpha, double beta, double tol) {
    if (!(alpha > kPi / 2 && alpha < 3 * kPi / 2))
        throw DomainError("alpha must lie in (pi/2, 3pi/2)");
    if (!(beta > 0 && beta < kPi)) throw DomainError("beta must lie in (0, pi)");
    EarthMapEdges out;
    out.theta_oriented = kPi - alpha;
    double ca = std::cos(alpha);
    out.a = std::acos(ca / (ca - 1));
    out.b = std::acos(((2 * ca - 1) * std::cos(alpha + beta) - ca * ca) /
                      ((1 - ca) * (1 - ca)));
    double theta = out.theta_oriented;
    if (theta < -tol)
        out.shape = Shape::AlphaReflex;
    else if (theta > beta + tol)
        out.shape = Shape::GammaReflex;
    else
        out.shape = Shape::Convex;
    if (std::fabs(alpha - kPi) < tol)
        out.degeneracy = Degeneracy::TriangleAlphaPi;
    else if (std::fabs(alpha + beta - kPi) < tol)
        out.degeneracy = Degeneracy::TriangleGammaPi;
    else if (std::fabs(theta - beta / 2) < tol)
        out.degeneracy = Degeneracy::Rhombus;
    return out;
}

std::vector<Root> solve_free_angle(const std::function<double(double)>& residual,
                                   double lo, double hi, int samples) {
    std::vector<Root> roots;
    if (!(hi > lo) || samples < 2) return roots;
    double prev_x = lo, prev_v = residual(lo);
    auto push = [&](double x) {
        roots.push_back(Root{x, residual(x)});
    };
    for (int i = 1; i <= samples; ++i) {
        double x = lo + (hi - lo) * i / samples;
        double v = residual(x);
        if (prev_v == 0.0) {
            if (roots.empty() || std::fabs(roots.back().x - prev_x) > 1e-12) push(prev_x);
        } else if (v != 0.0 && (prev_v < 0) != (v < 0)) {
            double a = prev_x, b = x, fa = prev_v;
            while (b - a > 1e-13) {
                double mid = (a + b) / 2, fm = residual(mid);
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0) != (fm < 0))
                    b = mid;
                else {
                    a = mid;
                    fa = fm;
                }
            }
            push((a + b) / 2);
        }
        prev_x = x;
        prev_v = v;
    }
    if (prev_v == 0.0) push(prev_x);
    return roots;
}

} // namespace quadtile
