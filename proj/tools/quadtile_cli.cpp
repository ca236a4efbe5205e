#include "quadtile/diophantine.hpp"
#include "quadtile/rational_solver.hpp"
#include "quadtile/svg.hpp"
#include "quadtile/tables.hpp"
#include "quadtile/tilings.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace quadtile;

namespace {

double tolerance_from_env() {
    const char* env = std::getenv("QUADTILE_TOL");
    if (!env) return 1e-9;
    double tol = std::atof(env);
    if (!(tol > 0 && tol < 1e-3)) {
        std::cerr << "QUADTILE_TOL must lie in (0, 1e-3)\n";
        std::exit(2);
    }
    return tol;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        std::exit(2);
    }
    out << content;
}

// angle spec: comma separated pi-unit values, each "p/q" (exact) or decimal
std::array<AngleExpr, 4> parse_angles(const std::string& spec) {
    std::array<AngleExpr, 4> out;
    std::stringstream ss(spec);
    std::string item;
    int i = 0;
    while (std::getline(ss, item, ',') && i < 4) {
        if (item.find('/') != std::string::npos || item.find('.') == std::string::npos) {
            out[i] = AngleExpr::exact(Rational::parse(item));
        } else {
            out[i] = AngleExpr::numeric(std::atof(item.c_str()) * kPi,
                                        item + "*pi (command line)");
        }
        ++i;
    }
    if (i != 4) throw std::invalid_argument("--angles needs four comma-separated values");
    return out;
}

std::string verdict_json(const VerificationReport& report) {
    nlohmann::ordered_json doc;
    doc["pass"] = report.pass;
    nlohmann::ordered_json rules;
    for (const auto& [rule, ok] : report.rules) rules[rule] = ok;
    doc["rules"] = rules;
    nlohmann::ordered_json multiset = nlohmann::ordered_json::array();
    for (const auto& [v, count] : report.vertex_multiset) {
        nlohmann::ordered_json item;
        item["vertex"] = v.name();
        item["exponents"] = {v.m, v.n, v.k, v.l};
        item["count"] = count;
        multiset.push_back(item);
    }
    doc["vertices"] = multiset;
    doc["failures"] = report.failures;
    return doc.dump(2) + "\n";
}

nlohmann::ordered_json geometry_json(const QuadGeometry& g) {
    nlohmann::ordered_json doc;
    doc["kind"] = g.tile_kind == TileKind::A3B ? "a3b" : "a2bc";
    auto put = [&](const char* key, double v) {
        nlohmann::ordered_json item;
        item["radians"] = v;
        item["pi_units"] = v / kPi;
        doc[key] = item;
    };
    put("alpha", g.alpha);
    put("beta", g.beta);
    put("gamma", g.gamma);
    put("delta", g.delta);
    put("a", g.a);
    put("b", g.b);
    if (g.tile_kind == TileKind::A2BC) put("c", g.c);
    doc["shape"] = shape_name(g.shape);
    doc["degeneracy"] = degeneracy_name(g.degeneracy);
    doc["coolsaet_residual"] = g.coolsaet;
    doc["closure_residual"] = g.closure;
    if (g.simple) doc["simple"] = *g.simple;
    return doc;
}

std::string classify_csv(long long f, const std::string& branch);

int run_classify(long long f, const std::string& branch, const std::string& out_path,
                 const std::string& format) {
    if (format == "csv") {
        write_output(out_path, classify_csv(f, branch));
        return 0;
    }
    nlohmann::ordered_json doc;
    doc["f"] = f;
    if (f == 6) {
        // the minimal case: the cube, uniquely
        doc["branch"] = "minimal";
        nlohmann::ordered_json row;
        row["tiling"] = "E (cube)";
        row["avc"] = {"αγδ", "β³"};
        row["angles"] = "alpha+gamma+delta=2pi, beta=2pi/3";
        auto map = generate_earth_map(6, TileKind::A3B);
        row["verified"] = verify_tiling(map).pass;
        doc["results"] = nlohmann::ordered_json::array({row});
        write_output(out_path, doc.dump(2) + "\n");
        return 0;
    }
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    if (branch == "rational" || branch == "all") {
        for (const auto& row : classify_rational(f)) {
            nlohmann::ordered_json item;
            item["branch"] = "rational";
            nlohmann::ordered_json angles = nlohmann::ordered_json::array();
            for (const auto& v : row.assignment.at(f)) angles.push_back(v.str() + " pi");
            item["angles"] = angles;
            nlohmann::ordered_json avc = nlohmann::ordered_json::array();
            for (const auto& v : row.avc) avc.push_back(v.name());
            item["avc"] = avc;
            item["counting_feasible"] = row.counting_feasible;
            if (row.counts) {
                nlohmann::ordered_json counts;
                for (size_t i = 0; i < row.counts->vertices.size(); ++i)
                    counts[row.counts->vertices[i].name()] = row.counts->counts[i];
                item["counts"] = counts;
            }
            item["notes"] = row.notes;
            try {
                auto t = row.assignment.at(f);
                auto g = realize_a3b(t[0].to_double() * kPi, t[1].to_double() * kPi,
                                     t[2].to_double() * kPi, t[3].to_double() * kPi,
                                     tolerance_from_env());
                item["realization"] = geometry_json(g);
            } catch (const GeometryError& e) {
                item["realization"] = std::string("not realizable: ") + e.what();
            }
            results.push_back(item);
        }
        for (const auto& row : classify_rational_agd(f)) {
            nlohmann::ordered_json item;
            item["branch"] = "rational+agd";
            nlohmann::ordered_json angles = nlohmann::ordered_json::array();
            for (const auto& v : row.assignment.at(f)) angles.push_back(v.str() + " pi");
            item["angles"] = angles;
            nlohmann::ordered_json avc = nlohmann::ordered_json::array();
            for (const auto& v : row.avc) avc.push_back(v.name());
            item["avc"] = avc;
            nlohmann::ordered_json tilings = nlohmann::ordered_json::array();
            for (const auto& tag : row.tilings) {
                nlohmann::ordered_json t;
                t["family"] = tag.family;
                t["avc"] = vertex_set_name(tag.avc);
                tilings.push_back(t);
            }
            item["tilings"] = tilings;
            results.push_back(item);
        }
    }
    if (branch == "nonrational" || branch == "all") {
        for (const auto& row : classify_nonrational()) {
            if (row.f && *row.f != f) continue;
            if (!row.f && f < row.f_threshold) continue;
            VertexSet avc = row.avc_at(f);
            if (avc.size() <= 2) continue;
            nlohmann::ordered_json item;
            item["branch"] = "nonrational";
            item["pair"] = row.pair.name();
            nlohmann::ordered_json set = nlohmann::ordered_json::array();
            for (const auto& v : avc) set.push_back(v.name());
            item["avc"] = set;
            item["f_threshold"] = row.f_threshold;
            results.push_back(item);
        }
        for (const auto& row : classify_nonrational_agd(f)) {
            nlohmann::ordered_json item;
            item["branch"] = "nonrational+agd";
            item["family"] = row.family;
            item["pattern"] = row.pattern;
            item["avc"] = vertex_set_name(row.avc);
            results.push_back(item);
        }
    }
    doc["results"] = results;
    write_output(out_path, doc.dump(2) + "\n");
    return 0;
}

// one row per admissible vertex, mirroring the catalog "Vertices" columns
std::string classify_csv(long long f, const std::string& branch) {
    std::string out = "branch,f,angles_pi,vertex,m,n,k,l,count,feasible\n";
    auto emit_rows = [&](const std::string& tag, const std::string& angles,
                         const VertexSet& avc, const std::optional<CountVector>& counts,
                         bool feasible) {
        std::map<VertexCombo, long long> count_map;
        if (counts)
            for (size_t i = 0; i < counts->vertices.size(); ++i)
                count_map[counts->vertices[i]] = counts->counts[i];
        for (const auto& v : avc) {
            out += tag + "," + std::to_string(f) + ",\"" + angles + "\"," + v.name() +
                   "," + std::to_string(v.m) + "," + std::to_string(v.n) + "," +
                   std::to_string(v.k) + "," + std::to_string(v.l) + ",";
            auto it = count_map.find(v);
            if (it != count_map.end()) out += std::to_string(it->second);
            out += feasible ? ",yes\n" : ",no\n";
        }
    };
    if (branch == "rational" || branch == "all") {
        for (const auto& row : classify_rational(f)) {
            std::string angles;
            for (const auto& v : row.assignment.at(f))
                angles += (angles.empty() ? "" : " ") + v.str();
            emit_rows("rational", angles, row.avc, row.counts, row.counting_feasible);
        }
        for (const auto& row : classify_rational_agd(f)) {
            std::string angles;
            for (const auto& v : row.assignment.at(f))
                angles += (angles.empty() ? "" : " ") + v.str();
            emit_rows("rational+agd", angles, row.avc, std::nullopt, true);
        }
    }
    if (branch == "nonrational" || branch == "all") {
        for (const auto& row : classify_nonrational()) {
            if (row.f && *row.f != f) continue;
            if (!row.f && f < row.f_threshold) continue;
            VertexSet avc = row.avc_at(f);
            if (avc.size() <= 2) continue;
            emit_rows("nonrational", "pair " + row.pair.name(), avc, std::nullopt, true);
        }
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"edge-to-edge sphere tilings by congruent a3b/a2bc quadrilaterals"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "enumerate angle values and AVCs");
    long long classify_f = 0;
    std::string branch = "all", classify_out;
    classify->add_option("--f", classify_f, "tile count (even, >= 6)")->required();
    classify->add_option("--branch", branch, "rational | nonrational | all")
        ->check(CLI::IsMember({"rational", "nonrational", "all"}));
    classify->add_option("--out", classify_out, "output path (default stdout)");
    std::string classify_format = "json";
    classify->add_option("--format", classify_format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* realize = app.add_subcommand("realize", "realize a tile from its angles");
    std::string angle_spec, realize_out, realize_kind = "a3b";
    double a_edge = -1;
    realize->add_option("--angles", angle_spec, "four pi-unit values, e.g. 1/2,3/4,...")
        ->required();
    realize->add_option("--a", a_edge, "a edge in radians (a2bc only)");
    realize->add_option("--kind", realize_kind, "a3b | a2bc")
        ->check(CLI::IsMember({"a3b", "a2bc"}));
    realize->add_option("--out", realize_out, "output path");

    auto* tables = app.add_subcommand("tables", "emit the tiling data catalog");
    std::string tables_out, tables_format = "csv";
    tables->add_option("--out", tables_out, "output path");
    tables->add_option("--format", tables_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* generate = app.add_subcommand("generate", "write a tiling document");
    std::string family = "E", flip_spec, generate_out, generate_kind = "a3b";
    long long generate_f = 0;
    generate->add_option("--family", family, "E | Ep | Epp | Eppp | fixture:NAME");
    generate->add_option("--f", generate_f, "tile count");
    generate->add_option("--flip", flip_spec, "s@pos[,pos...] flip specification");
    generate->add_option("--kind", generate_kind, "a3b | a2bc")
        ->check(CLI::IsMember({"a3b", "a2bc"}));
    generate->add_option("--out", generate_out, "output path");
    std::string fixtures_dir = "fixtures";
    generate->add_option("--fixtures", fixtures_dir, "fixture directory");

    auto* verify = app.add_subcommand("verify", "verify a tiling document");
    std::string verify_path, verify_out;
    verify->add_option("--tiling", verify_path, "tiling json path")->required();
    verify->add_option("--out", verify_out, "output path");

    auto* render = app.add_subcommand("render", "render a schematic net");
    std::string render_path, render_out;
    render->add_option("--tiling", render_path, "tiling json path")->required();
    render->add_option("--out", render_out, "svg output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0; // --help
        std::cerr << app.help();
        return 2;
    }

    try {
        if (classify->parsed()) {
            if (classify_f < 6 || classify_f % 2 != 0) {
                std::cerr << "--f must be even and >= 6\n";
                return 2;
            }
            return run_classify(classify_f, branch, classify_out, classify_format);
        }
        if (realize->parsed()) {
            auto angles = parse_angles(angle_spec);
            double tol = tolerance_from_env();
            double v[4];
            for (int i = 0; i < 4; ++i)
                v[i] = angles[i].is_exact() ? angles[i].c0().to_double() * kPi
                                            : angles[i].numeric_value();
            QuadGeometry g;
            if (realize_kind == "a3b") {
                g = realize_a3b(v[0], v[1], v[2], v[3], tol);
            } else {
                if (a_edge <= 0) {
                    std::cerr << "a2bc realization needs --a\n";
                    return 2;
                }
                g = realize_a2bc(v[0], v[1], v[2], v[3], a_edge, tol);
            }
            write_output(realize_out, geometry_json(g).dump(2) + "\n");
            return 0;
        }
        if (tables->parsed()) {
            write_output(tables_out, tables_format == "csv" ? tables_csv() : tables_json());
            return 0;
        }
        if (generate->parsed()) {
            TilingMap map;
            if (family.rfind("fixture:", 0) == 0) {
                std::string name = family.substr(8);
                std::ifstream in(fixtures_dir + "/" + name + ".json");
                if (!in) {
                    std::cerr << "unknown fixture " << name << "\n";
                    return 2;
                }
                std::stringstream buf;
                buf << in.rdbuf();
                map = load_tiling(buf.str());
            } else if (family == "E") {
                map = generate_earth_map(
                    generate_f, generate_kind == "a3b" ? TileKind::A3B : TileKind::A2BC);
            } else if (family == "Eppp") {
                if (generate_f % 6 != 4) {
                    std::cerr << "rearrangement needs f = 6q + 4\n";
                    return 2;
                }
                map = generate_rearrangement((generate_f - 4) / 6);
            } else if (family == "Ep" || family == "Epp") {
                if (flip_spec.empty()) {
                    std::cerr << "flip families need --flip s@pos,...\n";
                    return 2;
                }
                FlipSpec spec;
                spec.kind =
                    family == "Ep" ? FlipSpec::Kind::EPrime : FlipSpec::Kind::EDoublePrime;
                auto at = flip_spec.find('@');
                if (at == std::string::npos) {
                    std::cerr << "--flip wants s@pos[,pos...]\n";
                    return 2;
                }
                spec.s = std::atoi(flip_spec.substr(0, at).c_str());
                std::stringstream ss(flip_spec.substr(at + 1));
                std::string item;
                while (std::getline(ss, item, ','))
                    spec.positions.push_back(std::atoi(item.c_str()));
                auto base = generate_earth_map(generate_f, TileKind::A3B);
                // default angle family meeting the flip precondition
                Rational beta(4, generate_f);
                std::array<AngleExpr, 4> angles;
                if (spec.kind == FlipSpec::Kind::EPrime) {
                    Rational alpha = beta * Rational(spec.s);
                    Rational rest = Rational(2) - alpha;
                    angles = {AngleExpr::exact(alpha), AngleExpr::exact(beta),
                              AngleExpr::exact(rest * Rational(5, 9)),
                              AngleExpr::exact(rest * Rational(4, 9))};
                } else {
                    Rational gd = beta * Rational(spec.s);
                    Rational alpha = Rational(2) - gd;
                    angles = {AngleExpr::exact(alpha), AngleExpr::exact(beta),
                              AngleExpr::exact(gd * Rational(5, 9)),
                              AngleExpr::exact(gd * Rational(4, 9))};
                }
                map = apply_flip(base, spec, angles);
            } else {
                std::cerr << "unknown family " << family << "\n";
                return 2;
            }
            write_output(generate_out, save_tiling(map));
            return 0;
        }
        if (verify->parsed()) {
            std::ifstream in(verify_path);
            if (!in) {
                std::cerr << "cannot read " << verify_path << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            auto map = load_tiling(buf.str());
            auto report = verify_tiling(map, {}, {}, tolerance_from_env());
            write_output(verify_out, verdict_json(report));
            return report.pass ? 0 : 1;
        }
        if (render->parsed()) {
            std::ifstream in(render_path);
            if (!in) {
                std::cerr << "cannot read " << render_path << "\n";
                return 2;
            }
            std::stringstream buf;
            buf << in.rdbuf();
            auto map = load_tiling(buf.str());
            write_output(render_out, render_svg(map));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const VersionError& e) {
        std::cerr << "version error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
