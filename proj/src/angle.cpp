#include "quadtile/angle.hpp"

#include <cmath>

namespace quadtile {

EvaluatedAngle eval_angle(const AngleExpr& expr, long long f) {
    if (f < 6 || f % 2 != 0)
        throw DomainError("f must be an even integer >= 6, got " + std::to_string(f));
    EvaluatedAngle out;
    if (expr.is_exact()) {
        Rational v = expr.pi_units(f);
        if (v <= Rational(0) || v >= Rational(2))
            throw RangeError("angle " + v.str() + "*pi outside (0, 2pi)");
        out.pi_units = v;
        out.radians = v.to_double() * kPi;
    } else {
        out.radians = expr.numeric_value();
        if (!(out.radians > 0.0 && out.radians < 2.0 * kPi))
            throw RangeError("numeric angle outside (0, 2pi)");
    }
    return out;
}

Recalibration recalibrate(double radians) {
    Recalibration r;
    double x = radians;
    if (x < 0) {
        x = -x;
        r.sign = -1;
    }
    long long ki = static_cast<long long>(std::floor(x / kPi));
    x -= static_cast<double>(ki) * kPi; // subtraction in radians keeps full precision
    if (x < 0) {
        x += kPi;
        --ki;
    }
    if (ki % 2 != 0) r.sign = -r.sign;
    r.shift = -ki;
    if (x > kPi / 2) {
        x = kPi - x;
        r.reflected = true;
    }
    r.reduced = x;
    return r;
}

RecalibrationExact recalibrate(const Rational& pi_units) {
    RecalibrationExact r;
    Rational t = pi_units;
    if (t.sign() < 0) {
        t = -t;
        r.sign = -1;
    }
    Int k = t.floor();
    t -= Rational(k);
    if (k % 2 != 0) r.sign = -r.sign;
    r.shift = -k;
    if (t > Rational(1, 2)) {
        t = Rational(1) - t;
        r.reflected = true;
    }
    r.reduced = t;
    return r;
}

} // namespace quadtile
