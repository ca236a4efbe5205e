#ifndef QUADTILE_DIOPHANTINE_HPP
#define QUADTILE_DIOPHANTINE_HPP

#include "quadtile/rational_solver.hpp"
#include "quadtile/vertex_enum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadtile {

struct DegeneratePair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Integer-linear form in the generic exponents (m, n, k, l) plus a constant.
struct IntForm {
    long long m = 0, n = 0, k = 0, l = 0, c = 0;

    long long eval(const VertexCombo& v) const {
        return m * v.m + n * v.n + k * v.k + l * v.l + c;
    }
    bool is_zero() const { return m == 0 && n == 0 && k == 0 && l == 0 && c == 0; }
    IntForm homogeneous() const { return {m, n, k, l, 0}; }
    std::string str() const;
};

// The non-rationality condition of a pair: lambda = 0 and mu = P + Q/f = 0.
struct DiophantineCondition {
    IntForm lambda;
    IntForm P; // f-coefficient part of mu (after clearing 1/f)
    IntForm Q; // constant part: mu = 0  <=>  P*f + Q = 0
};

DiophantineCondition nonrationality_conditions(const CandidatePair& pair);

// One solution family: base (+ t * dir, t >= 0). f_free members satisfy the
// condition at every f; otherwise member t lives at f = f_base + t * f_step.
struct FamilyMember {
    VertexCombo base;
    VertexCombo dir{0, 0, 0, 0};
    bool f_free = false;
    long long f_base = 0;
    long long f_step = 0;

    bool parametric() const { return dir.degree() > 0; }
};

struct VertexFamily {
    CandidatePair pair;
    DiophantineCondition cond;
    std::vector<FamilyMember> members;
    long long f_threshold = 8;
};

VertexFamily solve_vertex_families(const DiophantineCondition& cond,
                                   const CandidatePair& pair, long long f_threshold);

// All members valid at this f with exponents <= cap (degree >= 3).
VertexSet instantiate(const VertexFamily& family, long long f, int cap = 64,
                      bool enforce_threshold = false);

// Quadruple-loop reference: lambda = 0 and P*f + Q = 0 exactly at this f.
VertexSet diophantine_oracle(const DiophantineCondition& cond, long long f, int cap = 64);

// One row of the non-rational census without alpha-gamma-delta.
struct NonRationalRow {
    CandidatePair pair;
    std::optional<long long> f;       // pinned when all extras share one f
    long long f_threshold = 8;        // ">= threshold" rows
    std::vector<FamilyMember> extras; // members beyond the pair
    std::vector<std::string> notes;

    VertexSet avc_at(long long f_value, int cap = 64) const;
};

std::vector<NonRationalRow> classify_nonrational();

// The alpha-gamma-delta branch: conjugate non-rational angles force equal
// counts, giving the earth-map AVC decompositions.
struct NonRationalAgdRow {
    std::string family;    // "E", "E'", "E''"
    std::string pattern;   // symbolic vertex set as printed in the census
    VertexSet avc;         // instantiated at f
};

std::vector<NonRationalAgdRow> classify_nonrational_agd(long long f);

} // namespace quadtile

#endif
