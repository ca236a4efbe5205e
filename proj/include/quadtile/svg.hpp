#ifndef QUADTILE_SVG_HPP
#define QUADTILE_SVG_HPP

#include "quadtile/tilings.hpp"

#include <string>

namespace quadtile {

// Schematic net: one square per tile arranged in timezone strips, b-edges
// stroked heavier, c-edges dashed, clockwise tiles marked "-", corners
// annotated with their vertex ids. Output bytes are deterministic.
std::string render_svg(const TilingMap& map);

} // namespace quadtile

#endif
