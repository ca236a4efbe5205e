#ifndef QUADTILE_VERTEX_ENUM_HPP
#define QUADTILE_VERTEX_ENUM_HPP

#include "quadtile/angle.hpp"
#include "quadtile/rational.hpp"

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace quadtile {

// Exponent tuple counting alpha, beta, gamma, delta at a vertex.
struct VertexCombo {
    int m = 0, n = 0, k = 0, l = 0;

    int degree() const { return m + n + k + l; }
    bool parity_ok() const { return (k + l) % 2 == 0; }
    bool is_b_vertex() const { return k > 0 || l > 0; }
    int count(int angle) const {
        switch (angle) {
            case 0: return m;
            case 1: return n;
            case 2: return k;
            default: return l;
        }
    }

    auto operator<=>(const VertexCombo&) const = default;

    std::string name() const;
};

using VertexSet = std::set<VertexCombo>;

std::string vertex_set_name(const VertexSet& vs);

// Swap alpha<->beta and gamma<->delta.
inline VertexCombo mirror(const VertexCombo& v) { return {v.n, v.m, v.l, v.k}; }
VertexSet mirror(const VertexSet& vs);

struct EnumFilters {
    bool balance = false;           // Balance Lemma reduction
    bool max_degree_from_f = false; // degree-h vertices need f >= 6 + (h-3)
    int hard_cap = 64;              // global exponent cap
};

// Balance Lemma reduction on an admissible set: when gamma^2... and
// delta^2... members do not both occur, the asymmetric side is removed and
// surviving b-vertices carry exactly one gamma and one delta.
void apply_balance(VertexSet& vertices);

struct EnumResult {
    VertexSet vertices;
    VertexSet ambiguous; // numeric sums inside the [tol, 1e-6] band
};

// Exact path: four angles as rational multiples of pi.
EnumResult enumerate_vertices(const std::array<Rational, 4>& angles_pi, long long f,
                              const EnumFilters& filters = {});

// Numeric path: radians, tolerance 1e-9 on |sum - 2pi|.
EnumResult enumerate_vertices(const std::array<double, 4>& angles, long long f,
                              const EnumFilters& filters = {}, double tol = 1e-9);

// An anglewise vertex combination attached to an angle assignment.
struct AVC {
    std::array<AngleExpr, 4> angles;
    long long f = 0;
    VertexSet vertices;
    VertexSet required;
};

// Per-vertex multiplicities solving the global counting identities.
struct CountVector {
    std::vector<VertexCombo> vertices;
    std::vector<long long> counts;
};

std::optional<CountVector> count_feasibility(const AVC& avc, long long f);
std::optional<CountVector> count_feasibility(const VertexSet& vertices,
                                             const VertexSet& required, long long f);

// v_h = number of vertices of degree h (h >= 3).
struct DegreeHistogram {
    std::map<int, long long> v;
};

// Returns f from the face/vertex count identities, or nullopt on violation.
std::optional<long long> check_degree_counts(const DegreeHistogram& hist);

} // namespace quadtile

#endif
