#ifndef QUADTILE_ANGLE_HPP
#define QUADTILE_ANGLE_HPP

#include "quadtile/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace quadtile {

inline constexpr double kPi = 3.14159265358979323846;

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// An angle, either exact affine in 1/f, value = (c0 + c1/f)*pi, or a numeric
// algebraic value carrying its defining formula as text.
class AngleExpr {
public:
    enum class Kind { ExactAffine, NumericAlgebraic };

    AngleExpr() : kind_(Kind::ExactAffine) {}

    static AngleExpr exact(Rational c0, Rational c1 = Rational(0)) {
        AngleExpr e;
        e.kind_ = Kind::ExactAffine;
        e.c0_ = std::move(c0);
        e.c1_ = std::move(c1);
        return e;
    }
    static AngleExpr numeric(double radians, std::string formula) {
        if (!(radians == radians) || radians == 1.0 / 0.0 || radians == -1.0 / 0.0)
            throw DomainError("numeric angle must be finite");
        if (formula.empty())
            throw DomainError("numeric angle requires a provenance formula");
        AngleExpr e;
        e.kind_ = Kind::NumericAlgebraic;
        e.value_ = radians;
        e.formula_ = std::move(formula);
        return e;
    }

    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::ExactAffine; }
    const Rational& c0() const { return c0_; }
    const Rational& c1() const { return c1_; }
    double numeric_value() const { return value_; }
    const std::string& formula() const { return formula_; }

    bool depends_on_f() const { return is_exact() && !c1_.is_zero(); }

    // Exact value in units of pi after substituting f. Only for ExactAffine.
    Rational pi_units(long long f) const {
        if (!is_exact()) throw DomainError("pi_units on a numeric angle");
        return c0_ + c1_ / Rational(f);
    }

    std::string str() const {
        if (is_exact()) {
            std::string s = "(" + c0_.str();
            if (!c1_.is_zero()) s += " + (" + c1_.str() + ")/f";
            return s + ")pi";
        }
        return formula_;
    }

    friend bool operator==(const AngleExpr& a, const AngleExpr& b) {
        if (a.kind_ != b.kind_) return false;
        if (a.is_exact()) return a.c0_ == b.c0_ && a.c1_ == b.c1_;
        return a.value_ == b.value_ && a.formula_ == b.formula_;
    }

private:
    Kind kind_;
    Rational c0_;
    Rational c1_;
    double value_ = 0.0;
    std::string formula_;
};

// Result of evaluating an AngleExpr at a concrete f. Exact inputs keep their
// rational-of-pi part alongside the floating value.
struct EvaluatedAngle {
    double radians = 0.0;
    std::optional<Rational> pi_units; // set iff the input was ExactAffine
};

// f must be even and >= 6; the evaluated angle must land in (0, 2pi).
EvaluatedAngle eval_angle(const AngleExpr& expr, long long f);

// sin(original) == sign * sin(reduced), reduced in [0, pi/2].
// shift is the integer multiple of pi applied before reflection.
struct Recalibration {
    double reduced = 0.0;
    int sign = 1;
    long long shift = 0;
    bool reflected = false;
};

Recalibration recalibrate(double radians);

// Exact variant: x in units of pi; returns reduced in units of pi.
struct RecalibrationExact {
    Rational reduced;
    int sign = 1;
    Int shift;
    bool reflected = false;
};

RecalibrationExact recalibrate(const Rational& pi_units);

} // namespace quadtile

#endif
