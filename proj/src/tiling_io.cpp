#include "quadtile/tilings.hpp"

#include <json.hpp>

#include <set>

namespace quadtile {

namespace {

using Json = nlohmann::ordered_json;

Json angle_to_json(const AngleExpr& a) {
    Json out;
    if (a.is_exact()) {
        out["c0"] = a.c0().str();
        out["c1"] = a.c1().str();
    } else {
        out["value"] = a.numeric_value();
        out["formula"] = a.formula();
    }
    return out;
}

AngleExpr angle_from_json(const Json& j, const std::string& path) {
    if (j.contains("c0")) {
        if (!j.contains("c1")) throw ParseError(path + ": exact angle needs c0 and c1");
        return AngleExpr::exact(Rational::parse(j["c0"].get<std::string>()),
                                Rational::parse(j["c1"].get<std::string>()));
    }
    if (j.contains("value")) {
        if (!j.contains("formula"))
            throw ParseError(path + ": numeric angle needs a formula");
        return AngleExpr::numeric(j["value"].get<double>(),
                                  j["formula"].get<std::string>());
    }
    throw ParseError(path + ": angle must have c0/c1 or value/formula");
}

} // namespace

std::string save_tiling(const TilingMap& map) {
    TilingMap canon = canonical_form(map);
    Json doc;
    doc["version"] = canon.version;
    doc["tile_kind"] = canon.tile_kind == TileKind::A3B ? "a3b" : "a2bc";
    doc["f"] = canon.f;
    if (!canon.name.empty()) doc["name"] = canon.name;
    if (!canon.notes.empty()) doc["notes"] = canon.notes;
    Json angles;
    angles["alpha"] = angle_to_json(canon.angles[0]);
    angles["beta"] = angle_to_json(canon.angles[1]);
    angles["gamma"] = angle_to_json(canon.angles[2]);
    angles["delta"] = angle_to_json(canon.angles[3]);
    doc["angles"] = angles;
    Json tiles = Json::array();
    for (const auto& tile : canon.tiles) {
        Json t;
        t["id"] = tile.id;
        t["orientation"] = tile.orientation == Orientation::CW ? "cw" : "ccw";
        t["corners"] = tile.corners;
        tiles.push_back(t);
    }
    doc["tiles"] = tiles;
    return doc.dump(2) + "\n";
}

TilingMap load_tiling(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("document root must be an object");
    if (!doc.contains("version")) throw VersionError("missing version field");
    if (!doc["version"].is_number_integer() || doc["version"].get<int>() != 1)
        throw VersionError("unsupported version");

    static const std::set<std::string> known = {"version", "tile_kind", "f",
                                                "angles",  "tiles",     "name",
                                                "notes"};
    for (auto it = doc.begin(); it != doc.end(); ++it)
        if (!known.count(it.key()))
            throw ParseError("unknown top-level field: " + it.key());
    for (const char* field : {"tile_kind", "f", "angles", "tiles"})
        if (!doc.contains(field))
            throw ParseError(std::string("missing field: ") + field);

    TilingMap map;
    map.version = 1;
    std::string kind = doc["tile_kind"].get<std::string>();
    if (kind == "a3b")
        map.tile_kind = TileKind::A3B;
    else if (kind == "a2bc")
        map.tile_kind = TileKind::A2BC;
    else
        throw ParseError("tile_kind must be a3b or a2bc");
    map.f = doc["f"].get<long long>();
    if (doc.contains("name")) map.name = doc["name"].get<std::string>();
    if (doc.contains("notes")) map.notes = doc["notes"].get<std::string>();

    const Json& angles = doc["angles"];
    const char* names[4] = {"alpha", "beta", "gamma", "delta"};
    for (int i = 0; i < 4; ++i) {
        if (!angles.contains(names[i]))
            throw ParseError(std::string("angles missing ") + names[i]);
        map.angles[i] = angle_from_json(angles[names[i]], std::string("angles.") + names[i]);
    }

    for (const auto& t : doc["tiles"]) {
        Tile tile;
        if (!t.contains("id") || !t.contains("orientation") || !t.contains("corners"))
            throw ParseError("tile entries need id, orientation, corners");
        tile.id = t["id"].get<int>();
        std::string o = t["orientation"].get<std::string>();
        if (o == "cw")
            tile.orientation = Orientation::CW;
        else if (o == "ccw")
            tile.orientation = Orientation::CCW;
        else
            throw ParseError("orientation must be cw or ccw");
        auto corners = t["corners"];
        if (!corners.is_array() || corners.size() != 4)
            throw ParseError("corners must be four vertex ids");
        for (int i = 0; i < 4; ++i) tile.corners[i] = corners[i].get<int>();
        map.tiles.push_back(tile);
    }
    return map;
}

} // namespace quadtile
