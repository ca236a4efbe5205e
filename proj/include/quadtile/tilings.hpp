#ifndef QUADTILE_TILINGS_HPP
#define QUADTILE_TILINGS_HPP

#include "quadtile/angle.hpp"
#include "quadtile/geometry.hpp"
#include "quadtile/vertex_enum.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quadtile {

struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FlipPreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Orientation { CW, CCW };

// corners in the fixed cyclic order alpha, beta, gamma, delta
struct Tile {
    int id = 0;
    Orientation orientation = Orientation::CW;
    std::array<int, 4> corners{};
};

struct TilingMap {
    int version = 1;
    TileKind tile_kind = TileKind::A3B;
    long long f = 0;
    std::array<AngleExpr, 4> angles;
    std::vector<Tile> tiles;
    std::string name;
    std::string notes;
};

enum class EdgeType { A, B, C };

// side s runs from corner s to corner s+1 (mod 4); the gamma-delta side is b,
// and for a2bc the beta-gamma side is c
EdgeType side_type(TileKind kind, int side);

struct Edge {
    int v1 = 0, v2 = 0;
    EdgeType type = EdgeType::A;
    int tile1 = -1, side1 = -1;
    int tile2 = -1, side2 = -1;
};

// edges are derived, never stored; throws StructureError when some side is
// not shared by exactly two tiles
std::vector<Edge> derive_edges(const TilingMap& map);

struct VerificationReport {
    bool pass = false;
    std::map<std::string, bool> rules;
    std::map<VertexCombo, long long> vertex_multiset;
    DegreeHistogram degree_histogram;
    std::vector<std::string> failures;
};

VerificationReport verify_tiling(const TilingMap& map,
                                 const std::optional<VertexSet>& expected_avc = {},
                                 const VertexSet& required = {}, double tol = 1e-9);

// Computes the orientation flags by propagation from tile 0 across shared
// edges; throws StructureError on an unorientable gluing.
void assign_orientations(TilingMap& map);

// f/2 timezones of two tiles between two poles.
TilingMap generate_earth_map(long long f, TileKind kind);

struct FlipSpec {
    enum class Kind { EPrime, EDoublePrime };
    Kind kind = Kind::EPrime;
    int s = 1;
    std::vector<int> positions; // timezone start indices, disjoint
};

TilingMap apply_flip(const TilingMap& map, const FlipSpec& spec,
                     const std::array<AngleExpr, 4>& angles);

// three timezone blocks and four more tiles; f = 6q + 4
TilingMap generate_rearrangement(long long q);

// canonical form: tiles sorted by id; equality is on the canonical form
TilingMap canonical_form(const TilingMap& map);
bool maps_equal(const TilingMap& a, const TilingMap& b);

// JSON document I/O per the tiling file format
std::string save_tiling(const TilingMap& map);
TilingMap load_tiling(const std::string& text);

} // namespace quadtile

#endif
