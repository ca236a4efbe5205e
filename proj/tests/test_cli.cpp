#include "quadtile/svg.hpp"
#include "quadtile/tilings.hpp"

#include "doctest.h"

using namespace quadtile;

TEST_CASE("svg output is deterministic and marks b-edges") {
    auto map = generate_earth_map(8, TileKind::A3B);
    std::string one = render_svg(map);
    std::string two = render_svg(map);
    CHECK(one == two);
    CHECK(one.find("stroke-width=\"3\"") != std::string::npos);
    CHECK(one.find("stroke-width=\"1\"") != std::string::npos);
    CHECK(one.rfind("</svg>\n") == one.size() - 7);
}

TEST_CASE("c edges render dashed for a2bc maps") {
    auto map = generate_earth_map(8, TileKind::A2BC);
    std::string svg = render_svg(map);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
}

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(QUADTILE_CLI) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("cli exit codes") {
    CHECK(run("tables --out /tmp/quadtile_tables.csv") == 0);
    CHECK(run("generate --family E --f 6 --out /tmp/quadtile_cube.json") == 0);
    CHECK(run("verify --tiling /tmp/quadtile_cube.json") == 0);
    CHECK(run("classify") == 2);                       // missing --f
    CHECK(run("classify --f 7") == 2);                 // odd f
    CHECK(run("generate --family nosuch --f 8") == 2); // unknown family
    CHECK(run("verify --tiling /nonexistent.json") == 2);

    // a corrupted document fails verification with exit code 1
    std::ifstream in("/tmp/quadtile_cube.json");
    std::stringstream buf;
    buf << in.rdbuf();
    auto map = load_tiling(buf.str());
    std::swap(map.tiles[0].corners[0], map.tiles[0].corners[1]);
    std::ofstream out("/tmp/quadtile_bad.json");
    out << save_tiling(map);
    out.close();
    int code = run("verify --tiling /tmp/quadtile_bad.json");
    CHECK(code >= 1); // 1 for rule failures, 2 when structurally broken
}

TEST_CASE("rearrangement snapshots pin the generator") {
    for (auto [q, name] : {std::pair<long long, const char*>{1, "eppp_q1"},
                           {4, "eppp_q4"}}) {
        std::ifstream in(std::string(QUADTILE_FIXTURES) + "/" + name + ".json");
        REQUIRE(in.good());
        std::stringstream buf;
        buf << in.rdbuf();
        auto snapshot = load_tiling(buf.str());
        CHECK(maps_equal(snapshot, generate_rearrangement(q)));
    }
}
