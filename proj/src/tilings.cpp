#include "quadtile/tilings.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace quadtile {

EdgeType side_type(TileKind kind, int side) {
    if (side == 2) return EdgeType::B;
    if (kind == TileKind::A2BC && side == 1) return EdgeType::C;
    return EdgeType::A;
}

std::vector<Edge> derive_edges(const TilingMap& map) {
    std::set<int> ids;
    for (const auto& tile : map.tiles)
        if (!ids.insert(tile.id).second)
            throw StructureError("duplicate tile id " + std::to_string(tile.id));
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> sides;
    for (const auto& tile : map.tiles) {
        for (int s = 0; s < 4; ++s) {
            int u = tile.corners[s], v = tile.corners[(s + 1) % 4];
            if (u == v)
                throw StructureError("tile " + std::to_string(tile.id) +
                                     " has a collapsed side");
            sides[{std::min(u, v), std::max(u, v)}].push_back({tile.id, s});
        }
    }
    std::vector<Edge> edges;
    for (const auto& [key, inc] : sides) {
        if (inc.size() != 2)
            throw StructureError("edge " + std::to_string(key.first) + "-" +
                                 std::to_string(key.second) + " is shared by " +
                                 std::to_string(inc.size()) + " tile sides");
        Edge e;
        e.v1 = key.first;
        e.v2 = key.second;
        e.tile1 = inc[0].first;
        e.side1 = inc[0].second;
        e.tile2 = inc[1].first;
        e.side2 = inc[1].second;
        e.type = side_type(map.tile_kind, e.side1);
        edges.push_back(e);
    }
    return edges;
}

void assign_orientations(TilingMap& map) {
    if (map.tiles.empty()) return;
    std::map<int, size_t> index;
    for (size_t i = 0; i < map.tiles.size(); ++i) index[map.tiles[i].id] = i;
    auto edges = derive_edges(map);

    // adjacency with the relative handedness of each neighbour
    std::map<int, std::vector<std::pair<int, bool>>> adj;
    for (const auto& e : edges) {
        const Tile& t1 = map.tiles[index[e.tile1]];
        const Tile& t2 = map.tiles[index[e.tile2]];
        bool dir1 = t1.corners[e.side1] == e.v1;
        bool dir2 = t2.corners[e.side2] == e.v1;
        // opposite traversal directions mean equal handedness
        bool same = dir1 != dir2;
        adj[e.tile1].push_back({e.tile2, same});
        adj[e.tile2].push_back({e.tile1, same});
    }
    std::map<int, int> cls;
    std::deque<int> queue;
    cls[map.tiles[0].id] = 0;
    queue.push_back(map.tiles[0].id);
    while (!queue.empty()) {
        int t = queue.front();
        queue.pop_front();
        for (auto [other, same] : adj[t]) {
            int want = same ? cls[t] : 1 - cls[t];
            auto it = cls.find(other);
            if (it == cls.end()) {
                cls[other] = want;
                queue.push_back(other);
            } else if (it->second != want) {
                throw StructureError("unorientable tile gluing");
            }
        }
    }
    if (cls.size() != map.tiles.size())
        throw StructureError("tiling is not connected");
    for (auto& tile : map.tiles)
        tile.orientation = cls[tile.id] == 0 ? Orientation::CW : Orientation::CCW;
}

VerificationReport verify_tiling(const TilingMap& map,
                                 const std::optional<VertexSet>& expected_avc,
                                 const VertexSet& required, double tol) {
    VerificationReport report;
    auto fail = [&](const std::string& rule, const std::string& what) {
        report.rules[rule] = false;
        report.failures.push_back(rule + ": " + what);
    };
    auto pass_rule = [&](const std::string& rule) {
        if (!report.rules.count(rule)) report.rules[rule] = true;
    };

    if (map.tiles.empty()) throw StructureError("empty tiling");
    if (static_cast<long long>(map.tiles.size()) != map.f)
        fail("tile-count", "f=" + std::to_string(map.f) + " but " +
                               std::to_string(map.tiles.size()) + " tiles");
    pass_rule("tile-count");

    std::vector<Edge> edges = derive_edges(map);

    // edge types must match across the two incident tile sides
    for (const auto& e : edges) {
        EdgeType t2 = side_type(map.tile_kind, e.side2);
        if (e.type != t2)
            fail("edge-type", "edge " + std::to_string(e.v1) + "-" +
                                  std::to_string(e.v2) +
                                  " seen as two different types");
    }
    pass_rule("edge-type");

    // orientation flags must be consistent with an oriented sphere
    {
        TilingMap copy = map;
        try {
            assign_orientations(copy);
            bool match_direct = true, match_flipped = true;
            for (size_t i = 0; i < map.tiles.size(); ++i) {
                bool same = map.tiles[i].orientation == copy.tiles[i].orientation;
                match_direct = match_direct && same;
                match_flipped = match_flipped && !same;
            }
            if (!match_direct && !match_flipped)
                fail("orientation", "stored orientation marks are inconsistent");
        } catch (const StructureError& e) {
            fail("orientation", e.what());
        }
        pass_rule("orientation");
    }

    // corner angles at each vertex
    std::map<int, VertexCombo> at_vertex;
    for (const auto& tile : map.tiles)
        for (int c = 0; c < 4; ++c) {
            VertexCombo& v = at_vertex[tile.corners[c]];
            switch (c) {
                case 0: ++v.m; break;
                case 1: ++v.n; break;
                case 2: ++v.k; break;
                default: ++v.l; break;
            }
        }

    long long vcount = static_cast<long long>(at_vertex.size());
    long long ecount = static_cast<long long>(edges.size());
    long long fcount = static_cast<long long>(map.tiles.size());
    if (vcount - ecount + fcount != 2)
        fail("euler", "V - E + F = " + std::to_string(vcount - ecount + fcount));
    pass_rule("euler");
    if (ecount != 2 * fcount) fail("edge-count", "E != 2F");
    pass_rule("edge-count");
    if (vcount != map.f + 2)
        fail("vertex-count", "V = " + std::to_string(vcount) + ", expected f + 2");
    pass_rule("vertex-count");

    // vertex angle sums, parity, multiset
    bool all_exact = true;
    for (const auto& a : map.angles) all_exact = all_exact && a.is_exact();
    for (const auto& [vid, combo] : at_vertex) {
        ++report.vertex_multiset[combo];
        report.degree_histogram.v[combo.degree()] += 1;
        if (!combo.parity_ok())
            fail("parity", "vertex " + std::to_string(vid) + " has odd gamma+delta");
        if (combo.degree() < 3)
            fail("degree", "vertex " + std::to_string(vid) + " has degree < 3");
        int counts[4] = {combo.m, combo.n, combo.k, combo.l};
        if (all_exact) {
            Rational sum(0);
            for (int i = 0; i < 4; ++i)
                sum += map.angles[i].pi_units(map.f) * Rational(counts[i]);
            if (sum != Rational(2))
                fail("angle-sum",
                     "vertex " + std::to_string(vid) + " sums to " + sum.str() + " pi");
        } else {
            double sum = 0;
            for (int i = 0; i < 4; ++i)
                sum += counts[i] * eval_angle(map.angles[i], map.f).radians;
            if (std::fabs(sum - 2 * kPi) > tol)
                fail("angle-sum", "vertex " + std::to_string(vid) + " misses 2pi by " +
                                      std::to_string(sum - 2 * kPi));
        }
    }
    pass_rule("parity");
    pass_rule("degree");
    pass_rule("angle-sum");

    auto f_check = check_degree_counts(report.degree_histogram);
    if (!f_check || *f_check != map.f)
        fail("degree-histogram", "face/vertex count identities violated");
    pass_rule("degree-histogram");

    if (expected_avc) {
        for (const auto& [combo, count] : report.vertex_multiset)
            if (!expected_avc->count(combo))
                fail("avc", "vertex " + combo.name() + " not admissible");
        for (const auto& v : required)
            if (!report.vertex_multiset.count(v))
                fail("avc", "required vertex " + v.name() + " missing");
        pass_rule("avc");
    }

    report.pass = true;
    for (const auto& [rule, ok] : report.rules) report.pass = report.pass && ok;
    return report;
}

TilingMap canonical_form(const TilingMap& map) {
    TilingMap out = map;
    std::sort(out.tiles.begin(), out.tiles.end(),
              [](const Tile& a, const Tile& b) { return a.id < b.id; });
    return out;
}

bool maps_equal(const TilingMap& a, const TilingMap& b) {
    TilingMap ca = canonical_form(a), cb = canonical_form(b);
    if (ca.tile_kind != cb.tile_kind || ca.f != cb.f) return false;
    for (int i = 0; i < 4; ++i)
        if (!(ca.angles[i] == cb.angles[i])) return false;
    if (ca.tiles.size() != cb.tiles.size()) return false;
    for (size_t i = 0; i < ca.tiles.size(); ++i) {
        if (ca.tiles[i].id != cb.tiles[i].id) return false;
        if (ca.tiles[i].orientation != cb.tiles[i].orientation) return false;
        if (ca.tiles[i].corners != cb.tiles[i].corners) return false;
    }
    return true;
}

} // namespace quadtile
