#include "quadtile/diophantine.hpp"
#include "quadtile/rational_solver.hpp"
#include "quadtile/svg.hpp"
#include "quadtile/tables.hpp"
#include "quadtile/tilings.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace quadtile;

namespace {

AngleExpr angle_from_obj(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return AngleExpr::exact(Rational::parse(py::cast<std::string>(obj)));
    if (py::isinstance<py::tuple>(obj) || py::isinstance<py::list>(obj)) {
        auto seq = py::cast<std::vector<std::string>>(obj);
        if (seq.size() != 2) throw py::value_error("exact angle wants (c0, c1)");
        return AngleExpr::exact(Rational::parse(seq[0]), Rational::parse(seq[1]));
    }
    throw py::value_error("angle must be 'p/q' or ('c0', 'c1') in pi units");
}

std::array<Rational, 4> rationals_from(const std::vector<std::string>& values) {
    if (values.size() != 4) throw py::value_error("need four angles");
    return {Rational::parse(values[0]), Rational::parse(values[1]),
            Rational::parse(values[2]), Rational::parse(values[3])};
}

py::dict geometry_dict(const QuadGeometry& g) {
    py::dict out;
    out["kind"] = g.tile_kind == TileKind::A3B ? "a3b" : "a2bc";
    out["alpha"] = g.alpha;
    out["beta"] = g.beta;
    out["gamma"] = g.gamma;
    out["delta"] = g.delta;
    out["a"] = g.a;
    out["b"] = g.b;
    if (g.tile_kind == TileKind::A2BC) out["c"] = g.c;
    out["shape"] = shape_name(g.shape);
    out["degeneracy"] = degeneracy_name(g.degeneracy);
    out["coolsaet_residual"] = g.coolsaet;
    out["closure_residual"] = g.closure;
    if (g.simple) out["simple"] = *g.simple;
    return out;
}

py::list vertexset_list(const VertexSet& vs) {
    py::list out;
    for (const auto& v : vs) out.append(py::make_tuple(v.m, v.n, v.k, v.l));
    return out;
}

} // namespace

PYBIND11_MODULE(_quadtile, m) {
    m.doc() = "sphere tilings by congruent a3b / a2bc quadrilaterals";

    m.def(
        "eval_angle",
        [](const py::object& angle, long long f) {
            auto e = angle_from_obj(angle);
            auto v = eval_angle(e, f);
            py::dict out;
            out["radians"] = v.radians;
            if (v.pi_units) out["pi_units"] = v.pi_units->str();
            return out;
        },
        py::arg("angle"), py::arg("f"));

    m.def(
        "recalibrate",
        [](double radians) {
            auto r = recalibrate(radians);
            py::dict out;
            out["reduced"] = r.reduced;
            out["sign"] = r.sign;
            out["shift"] = r.shift;
            out["reflected"] = r.reflected;
            return out;
        },
        py::arg("radians"));

    m.def(
        "enumerate_vertices",
        [](const std::vector<std::string>& angles_pi, long long f, bool balance,
           bool max_degree_from_f) {
            EnumFilters filters;
            filters.balance = balance;
            filters.max_degree_from_f = max_degree_from_f;
            auto result = enumerate_vertices(rationals_from(angles_pi), f, filters);
            return vertexset_list(result.vertices);
        },
        py::arg("angles_pi"), py::arg("f"), py::arg("balance") = false,
        py::arg("max_degree_from_f") = false);

    m.def(
        "count_feasibility",
        [](const std::vector<std::array<int, 4>>& vertices,
           const std::vector<std::array<int, 4>>& required,
           long long f) -> py::object {
            VertexSet vs, req;
            for (const auto& v : vertices) vs.insert({v[0], v[1], v[2], v[3]});
            for (const auto& v : required) req.insert({v[0], v[1], v[2], v[3]});
            auto counts = count_feasibility(vs, req, f);
            if (!counts) return py::none();
            py::dict out;
            for (size_t i = 0; i < counts->vertices.size(); ++i) {
                const auto& v = counts->vertices[i];
                out[py::make_tuple(v.m, v.n, v.k, v.l)] = counts->counts[i];
            }
            return out;
        },
        py::arg("vertices"), py::arg("required"), py::arg("f"));

    m.def("myerson_self_check", [] {
        auto check = myerson_self_check();
        py::dict out;
        out["checks"] = check.checks;
        out["failures"] = check.failures;
        out["max_residual"] = check.max_residual;
        return out;
    });

    m.def(
        "classify_rational",
        [](long long f) {
            py::list out;
            for (const auto& row : classify_rational(f)) {
                py::dict item;
                py::list angles;
                for (const auto& v : row.assignment.at(f)) angles.append(v.str());
                item["angles_pi"] = angles;
                item["avc"] = vertexset_list(row.avc);
                item["counting_feasible"] = row.counting_feasible;
                item["notes"] = row.notes;
                out.append(item);
            }
            return out;
        },
        py::arg("f"));

    m.def(
        "classify_rational_agd",
        [](long long f) {
            py::list out;
            for (const auto& row : classify_rational_agd(f)) {
                py::dict item;
                py::list angles;
                for (const auto& v : row.assignment.at(f)) angles.append(v.str());
                item["angles_pi"] = angles;
                item["avc"] = vertexset_list(row.avc);
                py::list tags;
                for (const auto& tag : row.tilings) {
                    py::dict t;
                    t["family"] = tag.family;
                    t["avc"] = vertexset_list(tag.avc);
                    tags.append(t);
                }
                item["tilings"] = tags;
                out.append(item);
            }
            return out;
        },
        py::arg("f"));

    m.def("classify_nonrational", [] {
        py::list out;
        for (const auto& row : classify_nonrational()) {
            py::dict item;
            item["pair"] = py::make_tuple(
                py::make_tuple(row.pair.v1.m, row.pair.v1.n, row.pair.v1.k, row.pair.v1.l),
                py::make_tuple(row.pair.v2.m, row.pair.v2.n, row.pair.v2.k, row.pair.v2.l));
            if (row.f) item["f"] = *row.f;
            item["f_threshold"] = row.f_threshold;
            out.append(item);
        }
        return out;
    });

    m.def(
        "nonrational_avc_at",
        [](size_t row_index, long long f) {
            auto rows = classify_nonrational();
            if (row_index >= rows.size()) throw py::index_error();
            return vertexset_list(rows[row_index].avc_at(f));
        },
        py::arg("row_index"), py::arg("f"));

    m.def("coolsaet_residual", &coolsaet_residual, py::arg("alpha"), py::arg("beta"),
          py::arg("gamma"), py::arg("delta"));

    m.def(
        "realize_a3b",
        [](double alpha, double beta, double gamma, double delta, double tol) {
            return geometry_dict(realize_a3b(alpha, beta, gamma, delta, tol));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"),
        py::arg("tol") = 1e-9);

    m.def(
        "realize_a2bc",
        [](double alpha, double beta, double gamma, double delta, double a, double tol) {
            return geometry_dict(realize_a2bc(alpha, beta, gamma, delta, a, tol));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("delta"),
        py::arg("a"), py::arg("tol") = 1e-9);

    m.def(
        "earth_map_edges",
        [](double alpha, double beta) {
            auto e = earth_map_edges(alpha, beta);
            py::dict out;
            out["a"] = e.a;
            out["b"] = e.b;
            out["shape"] = shape_name(e.shape);
            out["degeneracy"] = degeneracy_name(e.degeneracy);
            return out;
        },
        py::arg("alpha"), py::arg("beta"));

    m.def(
        "solve_free_angle",
        [](const std::function<double(double)>& residual, double lo, double hi,
           int samples) {
            py::list out;
            for (const auto& root : solve_free_angle(residual, lo, hi, samples))
                out.append(py::make_tuple(root.x, root.residual));
            return out;
        },
        py::arg("residual"), py::arg("lo"), py::arg("hi"), py::arg("samples") = 10000);

    m.def(
        "generate_earth_map",
        [](long long f, const std::string& kind) {
            return save_tiling(
                generate_earth_map(f, kind == "a2bc" ? TileKind::A2BC : TileKind::A3B));
        },
        py::arg("f"), py::arg("kind") = "a3b");

    m.def(
        "generate_rearrangement",
        [](long long q) { return save_tiling(generate_rearrangement(q)); }, py::arg("q"));

    m.def(
        "apply_flip",
        [](const std::string& tiling_json, const std::string& kind, int s,
           const std::vector<int>& positions, const py::object& angles) {
            auto map = load_tiling(tiling_json);
            FlipSpec spec;
            spec.kind = kind == "Epp" || kind == "E''"
                            ? FlipSpec::Kind::EDoublePrime
                            : FlipSpec::Kind::EPrime;
            spec.s = s;
            spec.positions = positions;
            auto list = py::cast<std::vector<py::object>>(angles);
            if (list.size() != 4) throw py::value_error("need four angles");
            std::array<AngleExpr, 4> parsed;
            for (int i = 0; i < 4; ++i) parsed[i] = angle_from_obj(list[i]);
            return save_tiling(apply_flip(map, spec, parsed));
        },
        py::arg("tiling_json"), py::arg("kind"), py::arg("s"), py::arg("positions"),
        py::arg("angles"));

    m.def(
        "verify_tiling",
        [](const std::string& tiling_json, double tol) {
            auto report = verify_tiling(load_tiling(tiling_json), {}, {}, tol);
            py::dict out;
            out["pass"] = report.pass;
            py::dict rules;
            for (const auto& [rule, ok] : report.rules) rules[py::str(rule)] = ok;
            out["rules"] = rules;
            py::dict multiset;
            for (const auto& [v, count] : report.vertex_multiset)
                multiset[py::make_tuple(v.m, v.n, v.k, v.l)] = count;
            out["vertices"] = multiset;
            out["failures"] = report.failures;
            return out;
        },
        py::arg("tiling_json"), py::arg("tol") = 1e-9);

    m.def(
        "render_svg",
        [](const std::string& tiling_json) { return render_svg(load_tiling(tiling_json)); },
        py::arg("tiling_json"));

    m.def("tables_csv", &tables_csv);
    m.def("tables_json", &tables_json);

    py::register_exception<DomainError>(m, "DomainError");
    py::register_exception<RangeError>(m, "RangeError");
    py::register_exception<NotRealizable>(m, "NotRealizable");
    py::register_exception<IdentityViolated>(m, "IdentityViolated");
    py::register_exception<FlipPreconditionError>(m, "FlipPreconditionError");
    py::register_exception<ParseError>(m, "TilingParseError");
    py::register_exception<VersionError>(m, "TilingVersionError");
}
