#ifndef QUADTILE_RATIONAL_SOLVER_HPP
#define QUADTILE_RATIONAL_SOLVER_HPP

#include "quadtile/angle.hpp"
#include "quadtile/myerson.hpp"
#include "quadtile/vertex_enum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace quadtile {

// A vertex pair from the degree-3 case analysis. unique_degree3 pairs carry
// the stronger tile-count threshold (16 for theta^2 phi, 24 for theta^3).
struct CandidatePair {
    VertexCombo v1, v2;
    bool unique_degree3 = false;
    long long f_threshold = 8;

    std::string name() const { return "{" + v1.name() + ", " + v2.name() + "}"; }
};

const std::vector<CandidatePair>& candidate_pairs();

// An angle assignment produced by one solver branch. Exact affine in 1/f;
// fixed-f assignments have family == false and f set.
struct AngleAssignment {
    std::array<AngleExpr, 4> angles;
    bool family = false;
    long long f = 0;
    std::optional<CandidatePair> pair;
    RangeCase range_case = RangeCase::Convex;
    std::string branch; // "I", "II", "III"

    std::array<Rational, 4> at(long long f_value) const {
        return {angles[0].pi_units(f_value), angles[1].pi_units(f_value),
                angles[2].pi_units(f_value), angles[3].pi_units(f_value)};
    }
};

struct Verdict {
    bool accepted = false;
    std::string reason; // first violated rule when rejected
};

// Step 2/3 filter: ranges, distinctness, the exchange/lune/triangle
// comparisons, and the evenness/threshold conditions on f.
Verdict validate_angles(const std::array<Rational, 4>& angles_pi, long long f,
                        RangeCase range_case, const CandidatePair* pair = nullptr);
Verdict validate_angles(const AngleAssignment& a);

// Angle families from the Type I relations, all range cases.
std::vector<AngleAssignment> type1_angle_families(const CandidatePair& pair);

// Angle sets from Type II / Type III solutions matched through the
// recalibration rows of one range case.
std::vector<AngleAssignment> type23_angle_sets(const CandidatePair& pair, RangeCase c);

struct RationalRow {
    AngleAssignment assignment;
    VertexSet avc;
    bool counting_feasible = false;
    std::optional<CountVector> counts;
    std::vector<std::string> notes; // curated facts (reductions, NoTilingKnown)
};

// The census without alpha-gamma-delta: all pairs through Type I/II/III,
// validated, with enumerated vertex sets. Rows whose vertex set is just the
// generating pair are suppressed.
std::vector<RationalRow> classify_rational(long long f);

// The census with alpha-gamma-delta imposed (beta = 4pi/f).
struct TilingTag {
    std::string family; // "E", "E'", "E''", "E'''"
    VertexSet avc;      // instantiated vertex set

    bool operator<(const TilingTag& o) const {
        return family != o.family ? family < o.family : avc < o.avc;
    }
};

struct AgdRow {
    AngleAssignment assignment;
    VertexSet avc;
    std::vector<TilingTag> tilings;
};

std::vector<AgdRow> classify_rational_agd(long long f);

// Union of instantiated earth-map tiling rows across all branches at f.
std::vector<TilingTag> agd_tiling_instantiations(long long f);

// Curated no-tiling / reduction facts for census rows (AAD arguments are not
// automated; see the module notes).
std::vector<std::string> curated_notes(long long f, const VertexSet& avc);

} // namespace quadtile

#endif
