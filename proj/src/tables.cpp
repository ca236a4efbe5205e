#include "quadtile/tables.hpp"

#include <json.hpp>

#include <cmath>
#include <sstream>

namespace quadtile {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);
const double kSqrt5 = std::sqrt(5.0);
const double kSqrt10 = std::sqrt(10.0);

TableEntry a3b_entry(std::string name, long long f, double alpha, double beta,
                     double gamma, double delta, double a, double b,
                     std::map<std::string, double> approx) {
    TableEntry e;
    e.tiling = std::move(name);
    e.f = f;
    e.kind = TileKind::A3B;
    e.closed = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta},
                {"a", a},         {"b", b}};
    e.approx_pi = std::move(approx);
    e.realized = realize_a3b(alpha, beta, gamma, delta);
    return e;
}

TableEntry a2bc_entry(std::string name, long long f, double alpha, double beta,
                      double gamma, double delta, double a, double b, double c,
                      std::map<std::string, double> approx) {
    TableEntry e;
    e.tiling = std::move(name);
    e.f = f;
    e.kind = TileKind::A2BC;
    e.closed = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma}, {"delta", delta},
                {"a", a},         {"b", b},       {"c", c}};
    e.approx_pi = std::move(approx);
    e.realized = realize_a2bc(alpha, beta, gamma, delta, a);
    return e;
}

} // namespace

std::vector<TableEntry> isolated_tiling_rows() {
    std::vector<TableEntry> rows;

    {
        // S1 at f=12: delta solves the identity, the rest is linear in it
        double delta = std::acos(-kSqrt10 / 4);
        rows.push_back(a3b_entry(
            "S1(12)", 12, 2 * kPi - 2 * delta, 2 * kPi / 3, delta - kPi / 3, delta,
            std::acos(2 * kSqrt5 / 3 - 1), std::acos(3 * kSqrt5 - 6),
            {{"a", 0.34}, {"b", 0.25}, {"alpha", 0.42}, {"gamma", 0.46}, {"delta", 0.79}}));
    }
    {
        double delta = kPi + std::atan(2 - kSqrt5 - std::sqrt(7 - 3 * kSqrt5));
        rows.push_back(a3b_entry(
            "S1(16)", 16, 2 * kPi - 2 * delta, kPi / 2, delta - kPi / 4, delta,
            std::acos((-3 - kSqrt2 + kSqrt5 + kSqrt10) / 2),
            std::acos(-9 - 6 * kSqrt2 + 4 * kSqrt5 + 3 * kSqrt10),
            {{"a", 0.34}, {"b", 0.11}, {"alpha", 0.42}, {"gamma", 0.54}, {"delta", 0.79}}));
    }
    {
        double beta = std::acos((kSqrt2 - 1) / 2);
        double delta = std::acos((1 - kSqrt2) / 2);
        rows.push_back(a3b_entry("S2", 16, kPi / 2, beta, 3 * kPi / 4, delta,
                                 std::acos(std::sqrt((2 * kSqrt2 - 1) / 7)),
                                 std::acos(std::sqrt((22 * kSqrt2 - 25) / 7)),
                                 {{"a", 0.33}, {"b", 0.12}, {"beta", 0.43}, {"delta", 0.57}}));
    }
    rows.push_back(a3b_entry("S3", 16, kPi, kPi / 2, kPi / 2, kPi / 4, kPi / 4, kPi / 2,
                             {{"a", 0.25}, {"b", 0.5}}));
    rows.back().notes = "triangle: half an octahedron face; S'3 shares the values";
    {
        double gamma = std::acos(std::sqrt((7 - 4 * kSqrt2) / 17));
        rows.push_back(a3b_entry("S4", 16, kPi / 2, 3 * kPi / 4, gamma, kPi - gamma,
                                 kPi / 4, std::acos((2 * kSqrt2 - 1) / 4),
                                 {{"a", 0.25}, {"b", 0.35}, {"gamma", 0.41}, {"delta", 0.59}}));
    }
    {
        double delta = std::acos((1 - kSqrt3 / 3) / 2);
        rows.push_back(a3b_entry("QP6", 24, 2 * kPi / 3, kPi - delta, kPi / 2, delta,
                                 std::acos(std::sqrt((5 + 2 * kSqrt3) / 13)),
                                 std::acos(std::sqrt(2 * (4 - kSqrt3) / 13)),
                                 {{"a", 0.20}, {"b", 0.30}, {"beta", 0.57}, {"delta", 0.43}}));
    }
    {
        double a = std::acos((std::sin(2 * kPi / 9) + 2 * std::sin(4 * kPi / 9)) /
                             (kSqrt3 * (1 + std::cos(2 * kPi / 9))));
        double b = std::acos((1.0 / 3) *
                             (4 * std::pow(std::sin(kPi / 9), 2) -
                              kSqrt3 / std::tan(4 * kPi / 9) +
                              2 * kSqrt3 * std::cos(2 * kPi / 9) / std::tan(4 * kPi / 9) +
                              4 * std::sin(4 * kPi / 9) * std::tan(kPi / 9)));
        rows.push_back(a3b_entry("S5", 36, 4 * kPi / 9, 7 * kPi / 9, kPi / 3, 5 * kPi / 9,
                                 a, b, {{"a", 0.17}, {"b", 0.26}}));
    }
    {
        double a = std::acos(4 * std::cos(kPi / 9) - 3);
        double b = std::acos(6 * std::cos(kPi / 9) + 2 * kSqrt3 * std::sin(kPi / 9) -
                             3 * kSqrt3 * std::tan(kPi / 9) - 4);
        rows.push_back(a3b_entry("S6", 36, kPi / 3, 5 * kPi / 9, 7 * kPi / 18, 5 * kPi / 6,
                                 a, b, {{"a", 0.23}, {"b", 0.12}}));
    }
    return rows;
}

std::vector<TableEntry> a2bc_tiling_rows(const std::vector<long long>& e5_f) {
    std::vector<TableEntry> rows;
    // the quadrilateral-subdivided cube family at its three edge reductions
    auto qp6_family = [&](const std::string& name, double delta) {
        double a = std::asin(1 / (kSqrt3 * std::sin(delta)));
        double disc = std::sqrt(3 * std::pow(std::sin(delta), 2) - 1);
        double b = std::acos((disc - std::cos(delta)) / (2 * std::sin(delta)));
        double c = std::acos((disc + std::cos(delta)) / (2 * std::sin(delta)));
        rows.push_back(a2bc_entry(name, 24, 2 * kPi / 3, kPi - delta, kPi / 2, delta, a,
                                  b, c, {}));
    };
    qp6_family("QP6[c=a]", std::asin(std::sqrt((4 + kSqrt3) / 6)));
    qp6_family("QP6[b=c]", kPi / 2);
    qp6_family("QP6[b=a]", kPi - std::asin(std::sqrt((4 + kSqrt3) / 6)));

    rows.push_back(a2bc_entry("QP6'", 24, 2 * kPi / 3, 2 * kPi / 3, kPi / 2, kPi / 3,
                              std::acos(kSqrt5 / 3),
                              std::acos((kSqrt5 - 1) / (2 * kSqrt3)),
                              std::acos((kSqrt5 + 1) / (2 * kSqrt3)), {}));

    for (long long f : e5_f) {
        double sec = 1 / std::cos(4 * kPi / f);
        rows.push_back(a2bc_entry(
            "E5(" + std::to_string(f) + ")", f, (1.0 - 8.0 / f) * kPi,
            (0.5 + 4.0 / f) * kPi, kPi / 2, 8 * kPi / f,
            std::acos(1 - (3 - kSqrt5) / 4 * sec * sec),
            std::acos((kSqrt5 - 1) / 4 * sec),
            std::acos((3 - kSqrt5) * std::cos(4 * kPi / f) + (kSqrt5 - 2) * sec), {}));
    }
    return rows;
}

std::vector<TableEntry> earth_map_rows(const std::vector<long long>& fs) {
    std::vector<TableEntry> rows;
    for (long long f : fs) {
        // the rearrangement family pins all four angles
        double alpha = (4.0 / 3 - 4.0 / (3 * f)) * kPi;
        double beta = 4 * kPi / f;
        double gamma = (2.0 / 3 - 2.0 / (3 * f)) * kPi;
        double delta = 2 * kPi / f;
        auto em = earth_map_edges(alpha, beta);
        TableEntry e;
        e.tiling = "E(" + std::to_string(f) + ")";
        e.f = f;
        e.kind = TileKind::A3B;
        e.closed = {{"alpha", alpha}, {"beta", beta}, {"gamma", gamma},
                    {"delta", delta}, {"a", em.a},    {"b", em.b}};
        QuadGeometry g;
        g.tile_kind = TileKind::A3B;
        g.alpha = alpha;
        g.beta = beta;
        g.gamma = gamma;
        g.delta = delta;
        g.a = em.a;
        g.b = em.b;
        g.c = em.a;
        g.shape = em.shape;
        g.degeneracy = em.degeneracy;
        g.coolsaet = coolsaet_residual(alpha, beta, gamma, delta);
        g.closure = closure_residual(g);
        g.theta_oriented = em.theta_oriented;
        e.realized = g;
        e.notes = "earth map family at the rearrangement angles";
        rows.push_back(e);
    }
    return rows;
}

std::vector<TableEntry> all_table_rows() {
    std::vector<TableEntry> rows = isolated_tiling_rows();
    auto a2bc = a2bc_tiling_rows();
    rows.insert(rows.end(), a2bc.begin(), a2bc.end());
    auto em = earth_map_rows();
    rows.insert(rows.end(), em.begin(), em.end());
    return rows;
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

double realized_value(const TableEntry& e, const std::string& key) {
    const QuadGeometry& g = e.realized;
    if (key == "alpha") return g.alpha;
    if (key == "beta") return g.beta;
    if (key == "gamma") return g.gamma;
    if (key == "delta") return g.delta;
    if (key == "a") return g.a;
    if (key == "b") return g.b;
    return g.c;
}

} // namespace

std::string tables_csv() {
    std::string out = "tiling,f,kind,quantity,closed_form,closed_form_pi,realized,approx_pi\n";
    for (const auto& e : all_table_rows()) {
        for (const auto& [key, value] : e.closed) {
            out += e.tiling + "," + std::to_string(e.f) + ",";
            out += e.kind == TileKind::A3B ? "a3b," : "a2bc,";
            out += key + "," + fmt(value) + "," + fmt(value / kPi) + ",";
            out += fmt(realized_value(e, key)) + ",";
            auto it = e.approx_pi.find(key);
            out += it != e.approx_pi.end() ? fmt(it->second) : std::string();
            out += "\n";
        }
    }
    return out;
}

std::string tables_json() {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& e : all_table_rows()) {
        nlohmann::ordered_json row;
        row["tiling"] = e.tiling;
        row["f"] = e.f;
        row["kind"] = e.kind == TileKind::A3B ? "a3b" : "a2bc";
        nlohmann::ordered_json quantities;
        for (const auto& [key, value] : e.closed) {
            nlohmann::ordered_json q;
            q["radians"] = value;
            q["pi_units"] = value / kPi;
            q["realized"] = realized_value(e, key);
            auto it = e.approx_pi.find(key);
            if (it != e.approx_pi.end()) q["approx_pi"] = it->second;
            quantities[key] = q;
        }
        row["quantities"] = quantities;
        row["closure_residual"] = e.realized.closure;
        if (!e.notes.empty()) row["notes"] = e.notes;
        doc.push_back(row);
    }
    return doc.dump(2) + "\n";
}

} // namespace quadtile
