#include "quadtile/svg.hpp"

#include <algorithm>
#include <sstream>

namespace quadtile {

namespace {

std::string num(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

const char* kCornerGlyph[4] = {"α", "β", "γ", "δ"};

} // namespace

std::string render_svg(const TilingMap& map) {
    TilingMap canon = canonical_form(map);
    const double cell = 72.0, pad = 18.0, gap = 10.0;
    const size_t n = canon.tiles.size();
    const size_t cols = (n + 1) / 2;
    const double width = pad * 2 + cols * (cell + gap);
    const double height = pad * 2 + 2 * (cell + gap) + 14;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << " "
        << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << num(pad) << "\" y=\"" << num(pad - 4)
        << "\" font-size=\"11\" font-family=\"monospace\">"
        << (canon.name.empty() ? std::string("tiling") : canon.name) << " f="
        << canon.f << " " << (canon.tile_kind == TileKind::A3B ? "a3b" : "a2bc")
        << "</text>\n";

    for (size_t i = 0; i < n; ++i) {
        const Tile& t = canon.tiles[i];
        size_t col = i / 2, row = i % 2;
        double x0 = pad + col * (cell + gap);
        double y0 = pad + 8 + row * (cell + gap);
        // corner layout: alpha top-left, beta top-right, gamma bottom-right,
        // delta bottom-left (the standard configuration)
        double cx[4] = {x0, x0 + cell, x0 + cell, x0};
        double cy[4] = {y0, y0, y0 + cell, y0 + cell};
        for (int s = 0; s < 4; ++s) {
            EdgeType type = side_type(canon.tile_kind, s);
            double w = type == EdgeType::B ? 3.0 : 1.0;
            const char* dash = type == EdgeType::C ? " stroke-dasharray=\"4,2\"" : "";
            svg << "<line x1=\"" << num(cx[s]) << "\" y1=\"" << num(cy[s]) << "\" x2=\""
                << num(cx[(s + 1) % 4]) << "\" y2=\"" << num(cy[(s + 1) % 4])
                << "\" stroke=\"black\" stroke-width=\"" << num(w) << "\"" << dash
                << "/>\n";
        }
        for (int c = 0; c < 4; ++c) {
            double tx = cx[c] + (c == 0 || c == 3 ? 5 : -16);
            double ty = cy[c] + (c < 2 ? 13 : -5);
            svg << "<text x=\"" << num(tx) << "\" y=\"" << num(ty)
                << "\" font-size=\"10\" font-family=\"monospace\">" << kCornerGlyph[c]
                << t.corners[c] << "</text>\n";
        }
        svg << "<text x=\"" << num(x0 + cell / 2 - 10) << "\" y=\""
            << num(y0 + cell / 2 + 4) << "\" font-size=\"10\" font-family=\"monospace\">#"
            << t.id << (t.orientation == Orientation::CW ? " -" : "") << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace quadtile
