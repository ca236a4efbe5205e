#include "quadtile/tilings.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace quadtile {

namespace {

// earth map vertex ids: two poles, then the upper and lower equator rings
struct EarthMapIds {
    long long m; // timezones
    int N = 0, S = 1;
    int u(long long i) const { return 2 + static_cast<int>(((i % m) + m) % m); }
    int w(long long i) const {
        return 2 + static_cast<int>(m) + static_cast<int>(((i % m) + m) % m);
    }
};

} // namespace

TilingMap generate_earth_map(long long f, TileKind kind) {
    if (f < 6 || f % 2 != 0)
        throw DomainError("earth map tiling needs even f >= 6");
    TilingMap map;
    map.tile_kind = kind;
    map.f = f;
    map.name = kind == TileKind::A3B ? "E" : "E(a2bc)";
    EarthMapIds ids{f / 2};

    if (kind == TileKind::A3B) {
        map.angles = {AngleExpr::exact(Rational(8, 9)), AngleExpr::exact(Rational(0), Rational(4)),
                      AngleExpr::exact(Rational(2, 3)), AngleExpr::exact(Rational(4, 9))};
        for (long long i = 0; i < ids.m; ++i) {
            Tile top;
            top.id = static_cast<int>(2 * i);
            top.corners = {ids.u(i + 1), ids.N, ids.u(i), ids.w(i)};
            Tile bottom;
            bottom.id = static_cast<int>(2 * i + 1);
            bottom.corners = {ids.w(i), ids.S, ids.w(i + 1), ids.u(i + 1)};
            map.tiles.push_back(top);
            map.tiles.push_back(bottom);
        }
    } else {
        map.angles = {AngleExpr::exact(Rational(0), Rational(4)), AngleExpr::exact(Rational(8, 9)),
                      AngleExpr::exact(Rational(2, 3)), AngleExpr::exact(Rational(4, 9))};
        for (long long i = 0; i < ids.m; ++i) {
            Tile top;
            top.id = static_cast<int>(2 * i);
            top.corners = {ids.N, ids.u(i + 1), ids.w(i), ids.u(i)};
            Tile bottom;
            bottom.id = static_cast<int>(2 * i + 1);
            bottom.corners = {ids.S, ids.w(i), ids.u(i + 1), ids.w(i + 1)};
            map.tiles.push_back(top);
            map.tiles.push_back(bottom);
        }
    }
    assign_orientations(map);
    return map;
}

namespace {

bool is_unmodified_earth_map(const TilingMap& map) {
    if (map.tile_kind != TileKind::A3B) return false;
    TilingMap reference = generate_earth_map(map.f, map.tile_kind);
    if (map.tiles.size() != reference.tiles.size()) return false;
    auto sorted = canonical_form(map).tiles;
    auto ref_sorted = canonical_form(reference).tiles;
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i].corners != ref_sorted[i].corners) return false;
    return true;
}

} // namespace

TilingMap apply_flip(const TilingMap& map, const FlipSpec& spec,
                     const std::array<AngleExpr, 4>& angles) {
    const long long m = map.f / 2;
    if (spec.s < 1 || spec.s >= m) throw DomainError("flip block size out of range");
    if (spec.positions.empty()) throw DomainError("no flip positions");

    // angle precondition, exact for exact angle families
    auto value = [&](int i) {
        return eval_angle(angles[i], map.f).radians;
    };
    bool exact = true;
    for (const auto& a : angles) exact = exact && a.is_exact();
    if (spec.kind == FlipSpec::Kind::EPrime) {
        if (exact) {
            if (angles[0].pi_units(map.f) != angles[1].pi_units(map.f) * Rational(spec.s))
                throw FlipPreconditionError("alpha != s * beta");
        } else if (std::fabs(value(0) - spec.s * value(1)) > 1e-9) {
            throw FlipPreconditionError("alpha != s * beta");
        }
    } else {
        if (exact) {
            if (angles[2].pi_units(map.f) + angles[3].pi_units(map.f) !=
                angles[1].pi_units(map.f) * Rational(spec.s))
                throw FlipPreconditionError("gamma + delta != s * beta");
        } else if (std::fabs(value(2) + value(3) - spec.s * value(1)) > 1e-9) {
            throw FlipPreconditionError("gamma + delta != s * beta");
        }
    }

    // blocks must not overlap (adjacency is fine)
    std::set<long long> used;
    for (int p : spec.positions) {
        for (int j = 0; j < spec.s; ++j) {
            long long tz = ((p + j) % m + m) % m;
            if (!used.insert(tz).second) throw DomainError("overlapping flip blocks");
        }
    }

    TilingMap out = map;
    out.angles = angles;
    out.name = spec.kind == FlipSpec::Kind::EPrime ? "E'" : "E''";
    EarthMapIds ids{m};
    std::map<int, size_t> index;
    for (size_t i = 0; i < out.tiles.size(); ++i) index[out.tiles[i].id] = i;

    for (int p : spec.positions) {
        const int s = spec.s;
        std::map<int, int> sigma;
        if (spec.kind == FlipSpec::Kind::EPrime) {
            sigma[ids.N] = ids.u(p + s);
            sigma[ids.u(p + s)] = ids.N;
            sigma[ids.u(p)] = ids.w(p + s - 1);
            sigma[ids.w(p + s - 1)] = ids.u(p);
            sigma[ids.S] = ids.w(p - 1);
            sigma[ids.w(p - 1)] = ids.S;
        } else {
            sigma[ids.N] = ids.u(p);
            sigma[ids.u(p)] = ids.N;
            sigma[ids.u(p + s)] = ids.w(p - 1);
            sigma[ids.w(p - 1)] = ids.u(p + s);
            sigma[ids.S] = ids.w(p + s - 1);
            sigma[ids.w(p + s - 1)] = ids.S;
        }
        // block tiles: tops of timezones p..p+s-1, bottoms of p-1..p+s-2
        std::vector<int> block_tiles;
        for (int j = 0; j < s; ++j) {
            long long tz = ((p + j) % m + m) % m;
            block_tiles.push_back(static_cast<int>(2 * tz)); // top
            long long tzb = ((p + j - 1) % m + m) % m;
            block_tiles.push_back(static_cast<int>(2 * tzb + 1)); // bottom
        }
        for (int id : block_tiles) {
            Tile& tile = out.tiles[index[id]];
            for (int c = 0; c < 4; ++c) {
                auto it = sigma.find(tile.corners[c]);
                if (it != sigma.end()) tile.corners[c] = it->second;
            }
        }
    }
    // the boundary reflection is an involution: the map must be the earth map
    // with or without exactly this modification (double-flip restores it)
    if (!is_unmodified_earth_map(map) && !is_unmodified_earth_map(out))
        throw DomainError("flips apply to the earth map (or undo the same flip)");
    assign_orientations(out);
    return out;
}

TilingMap generate_rearrangement(long long q) {
    if (q < 1) throw DomainError("rearrangement needs q >= 1");
    const long long f = 6 * q + 4;
    TilingMap map;
    map.tile_kind = TileKind::A3B;
    map.f = f;
    map.name = "E'''";
    map.angles = {AngleExpr::exact(Rational(4, 3), Rational(-4, 3)),
                  AngleExpr::exact(Rational(0), Rational(4)),
                  AngleExpr::exact(Rational(2, 3), Rational(-2, 3)),
                  AngleExpr::exact(Rational(0), Rational(2))};

    const int P[3] = {0, 1, 2}, Q[3] = {3, 4, 5}, R[3] = {6, 7, 8}, M[3] = {9, 10, 11};
    const int iq = static_cast<int>(q);
    auto interior_u = [&](int block, int j) { // j in 1..q-1
        return 12 + block * (2 * iq - 2) + (j - 1);
    };
    auto interior_w = [&](int block, int j) { // j in 0..q-2
        return 12 + block * (2 * iq - 2) + (iq - 1) + j;
    };
    auto U = [&](int block, int j) {
        if (j == 0) return P[block];
        if (j == iq) return R[block];
        return interior_u(block, j);
    };
    auto W = [&](int block, int j) {
        if (j == -1) return Q[(block + 2) % 3];
        if (j == iq - 1) return M[block];
        return interior_w(block, j);
    };

    int next_id = 0;
    for (int block = 0; block < 3; ++block) {
        const int N = Q[block];
        const int S = R[(block + 2) % 3];
        for (int j = 0; j < iq; ++j) {
            Tile top;
            top.id = next_id++;
            top.corners = {U(block, j + 1), N, U(block, j), W(block, j)};
            map.tiles.push_back(top);
        }
        for (int j = -1; j < iq - 1; ++j) {
            Tile bottom;
            bottom.id = next_id++;
            bottom.corners = {W(block, j), S, W(block, j + 1), U(block, j + 1)};
            map.tiles.push_back(bottom);
        }
    }
    // the two polar caps: a central pair and an outer pair of tiles
    Tile c1{next_id++, Orientation::CW, {P[1], Q[0], P[0], Q[1]}};
    Tile c2{next_id++, Orientation::CW, {P[2], Q[2], P[0], Q[1]}};
    Tile d1{next_id++, Orientation::CW, {M[1], R[0], M[0], R[1]}};
    Tile d2{next_id++, Orientation::CW, {M[2], R[2], M[0], R[1]}};
    map.tiles.push_back(c1);
    map.tiles.push_back(c2);
    map.tiles.push_back(d1);
    map.tiles.push_back(d2);

    assign_orientations(map);
    return map;
}

} // namespace quadtile
