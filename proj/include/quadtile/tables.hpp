#ifndef QUADTILE_TABLES_HPP
#define QUADTILE_TABLES_HPP

#include "quadtile/geometry.hpp"

#include <map>
#include <string>
#include <vector>

namespace quadtile {

// One catalog row: closed-form values for every angle and edge, the printed
// two-decimal approximations (in pi units) where the catalog lists them, and
// the realization computed independently through the trigonometric solvers.
struct TableEntry {
    std::string tiling;
    long long f = 0;
    TileKind kind = TileKind::A3B;
    std::map<std::string, double> closed;    // radians, keys: alpha..delta,a,b,c
    std::map<std::string, double> approx_pi; // printed "~ x.xx pi" values
    QuadGeometry realized;
    std::string notes;
};

// the isolated tilings and special tilings (a^3 b)
std::vector<TableEntry> isolated_tiling_rows();

// the a^2 b c catalog: the f=24 family at its three edge-reduction points,
// its rigid flip modification, and the square earth-map family
std::vector<TableEntry> a2bc_tiling_rows(const std::vector<long long>& e5_f = {16, 24});

// earth-map family rows evaluated at sample parameters
std::vector<TableEntry> earth_map_rows(const std::vector<long long>& fs = {6, 10, 16});

std::vector<TableEntry> all_table_rows();

std::string tables_csv();
std::string tables_json();

} // namespace quadtile

#endif
