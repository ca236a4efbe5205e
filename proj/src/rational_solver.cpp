#include "quadtile/rational_solver.hpp"

#include "quadtile/linear.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace quadtile {

namespace {

VertexCombo vc(int m, int n, int k, int l) { return VertexCombo{m, n, k, l}; }

} // namespace

const std::vector<CandidatePair>& candidate_pairs() {
    static const std::vector<CandidatePair> pairs = [] {
        std::vector<CandidatePair> out;
        auto deg3 = [&](VertexCombo a, VertexCombo b) {
            out.push_back(CandidatePair{a, b, false, 8});
        };
        auto unique3 = [&](VertexCombo a, VertexCombo b, long long thr) {
            out.push_back(CandidatePair{a, b, true, thr});
        };
        const VertexCombo a3 = vc(3, 0, 0, 0), a2b = vc(2, 1, 0, 0), ab2 = vc(1, 2, 0, 0);
        const VertexCombo ag2 = vc(1, 0, 2, 0), ad2 = vc(1, 0, 0, 2);
        const VertexCombo bg2 = vc(0, 1, 2, 0), bd2 = vc(0, 1, 0, 2);

        deg3(a3, ag2);
        deg3(a3, ad2);
        deg3(a3, bg2);
        deg3(a3, bd2);
        deg3(a2b, ag2);
        deg3(a2b, ad2);
        deg3(a2b, bd2);
        deg3(ad2, bg2);
        for (auto p : {vc(0, 0, 4, 0), vc(0, 0, 0, 4), vc(0, 0, 3, 1), vc(0, 0, 1, 3),
                       vc(0, 0, 2, 2)})
            unique3(a3, p, 24);
        for (auto p : {vc(0, 0, 4, 0), vc(0, 0, 0, 4), vc(0, 0, 3, 1), vc(0, 0, 1, 3),
                       vc(0, 0, 2, 2)})
            unique3(ab2, p, 16);
        for (auto p : {vc(4, 0, 0, 0), vc(0, 4, 0, 0), vc(0, 0, 0, 4), vc(3, 1, 0, 0),
                       vc(1, 3, 0, 0), vc(2, 2, 0, 0), vc(2, 0, 0, 2), vc(0, 2, 0, 2),
                       vc(1, 1, 0, 2)})
            unique3(ag2, p, 16);
        for (auto p : {vc(4, 0, 0, 0), vc(0, 4, 0, 0), vc(0, 0, 4, 0), vc(3, 1, 0, 0),
                       vc(1, 3, 0, 0), vc(2, 2, 0, 0), vc(2, 0, 2, 0), vc(0, 2, 2, 0),
                       vc(1, 1, 2, 0)})
            unique3(ad2, p, 16);
        return out;
    }();
    return pairs;
}

namespace {

// Unknown columns: alpha, beta, gamma, delta, theta, u = 1/f. Entries in pi units.
constexpr int kCols = 7;
constexpr int kThetaCol = 4;
constexpr int kUCol = 5;

RatRow quad_sum_row() {
    return {Rational(1), Rational(1), Rational(1), Rational(1),
            Rational(0), Rational(-4), Rational(2)};
}

RatRow vertex_row(const VertexCombo& v) {
    return {Rational(v.m), Rational(v.n), Rational(v.k), Rational(v.l),
            Rational(0),   Rational(0),   Rational(2)};
}

RatRow relation(Rational ca, Rational cb, Rational cg, Rational cd, Rational rhs) {
    return {std::move(ca), std::move(cb), std::move(cg), std::move(cd),
            Rational(0),   Rational(0),   std::move(rhs)};
}

// Relation sets of the Type I lemma, keyed by range case.
std::vector<std::vector<RatRow>> type1_relations(RangeCase c) {
    const Rational one(1), two(2), z(0);
    std::vector<RatRow> a_eq_2g_b_eq_2d = {relation(one, z, -two, z, z),
                                           relation(z, one, z, -two, z)};
    switch (c) {
        case RangeCase::Convex:
            return {a_eq_2g_b_eq_2d};
        case RangeCase::AlphaGePi:
        case RangeCase::BetaGePi:
            return {a_eq_2g_b_eq_2d,
                    {relation(one, one, z, z, two), relation(one, -one, -two, two, z)}};
        case RangeCase::GammaGePi:
            return {{relation(z, z, one, z, one), relation(z, one, z, -one, z)},
                    {relation(one, z, -two, z, -two), relation(z, one, z, -two, z)}};
        default: // DeltaGePi
            return {{relation(z, z, z, one, one), relation(one, z, -one, z, z)},
                    {relation(one, z, -two, z, z), relation(z, one, z, -two, -two)}};
    }
}

struct TupleEntry {
    Rational theta_coeff;
    Rational constant; // pi units
};

RatRow match_row(const AngleForm& x, const TupleEntry& entry) {
    return {x.ca, x.cb, x.cg, x.cd, -entry.theta_coeff, Rational(0),
            entry.constant - x.c1};
}

std::optional<AngleAssignment> assignment_from(const AngleSolve& sol, RangeCase c,
                                               const std::string& branch,
                                               const std::optional<CandidatePair>& pair) {
    AngleAssignment out;
    out.range_case = c;
    out.branch = branch;
    out.pair = pair;
    if (sol.status == AngleSolve::Status::Pinned) {
        if (sol.u.sign() <= 0 || sol.u.num() != 1) return std::nullopt;
        Int f = sol.u.den();
        if (f % 2 != 0 || f < 8 || f > 1'000'000) return std::nullopt;
        out.family = false;
        out.f = f.convert_to<long long>();
        for (int i = 0; i < 4; ++i) out.angles[i] = AngleExpr::exact(sol.c0[i]);
        return out;
    }
    if (sol.status == AngleSolve::Status::FamilyInU) {
        out.family = true;
        for (int i = 0; i < 4; ++i) out.angles[i] = AngleExpr::exact(sol.c0[i], sol.c1[i]);
        return out;
    }
    return std::nullopt;
}

using AngleKey = std::pair<std::array<Rational, 8>, int>;

// keyed on the angle family and the range case: the same family can be valid
// in one case and empty in another
AngleKey assignment_key(const AngleAssignment& a) {
    std::array<Rational, 8> k;
    for (int i = 0; i < 4; ++i) {
        k[i] = a.angles[i].c0();
        k[i + 4] = a.angles[i].c1();
    }
    return {k, static_cast<int>(a.range_case)};
}

} // namespace

std::vector<AngleAssignment> type1_angle_families(const CandidatePair& pair) {
    std::vector<AngleAssignment> out;
    std::set<AngleKey> seen;
    for (RangeCase c : {RangeCase::Convex, RangeCase::AlphaGePi, RangeCase::BetaGePi,
                        RangeCase::GammaGePi, RangeCase::DeltaGePi}) {
        for (const auto& rel : type1_relations(c)) {
            RatMatrix rows = {quad_sum_row(), vertex_row(pair.v1), vertex_row(pair.v2)};
            rows.insert(rows.end(), rel.begin(), rel.end());
            auto sol = solve_angle_system(std::move(rows), kUCol);
            auto a = assignment_from(sol, c, "I", pair);
            if (!a) continue;
            if (!a->family && validate_angles(*a).accepted == false) continue;
            if (seen.insert(assignment_key(*a)).second) out.push_back(std::move(*a));
        }
    }
    return out;
}

std::vector<AngleAssignment> type23_angle_sets(const CandidatePair& pair, RangeCase c) {
    std::vector<AngleAssignment> out;
    std::set<AngleKey> seen;

    std::vector<std::pair<std::string, std::array<TupleEntry, 4>>> tuples;
    // Type II parametric tuple (pi/6, theta, theta/2, pi/2 - theta/2)
    tuples.push_back({"II",
                      {TupleEntry{Rational(0), Rational(1, 6)},
                       TupleEntry{Rational(1), Rational(0)},
                       TupleEntry{Rational(1, 2), Rational(0)},
                       TupleEntry{Rational(-1, 2), Rational(1, 2)}}});
    for (const auto& row : myerson_sporadic()) {
        std::array<TupleEntry, 4> t;
        for (int i = 0; i < 4; ++i) t[i] = TupleEntry{Rational(0), row[i]};
        tuples.push_back({"III", t});
    }

    for (const auto& [branch, tuple] : tuples) {
        for (const auto& perm : myerson_permutations()) {
            for (const auto& recal : recalibration_rows(c)) {
                RatMatrix rows = {quad_sum_row(), vertex_row(pair.v1),
                                  vertex_row(pair.v2)};
                for (int i = 0; i < 4; ++i)
                    rows.push_back(match_row(recal.x[i], tuple[perm[i]]));
                auto sol = solve_angle_system(std::move(rows), kUCol);
                auto a = assignment_from(sol, c, branch, pair);
                if (!a) continue;
                if (!a->family && !validate_angles(*a).accepted) continue;
                if (seen.insert(assignment_key(*a)).second) out.push_back(std::move(*a));
            }
        }
    }
    return out;
}

Verdict validate_angles(const std::array<Rational, 4>& t, long long f,
                        RangeCase range_case, const CandidatePair* pair) {
    const Rational zero(0), one(1), two(2);
    const Rational &a = t[0], &b = t[1], &g = t[2], &d = t[3];
    auto reject = [](std::string why) { return Verdict{false, std::move(why)}; };

    for (int i = 0; i < 4; ++i)
        if (t[i] <= zero || t[i] >= two) return reject("angle outside (0, 2pi)");
    if (a == b) return reject("alpha == beta");
    if (g == d) return reject("gamma == delta");
    std::set<Rational> distinct(t.begin(), t.end());
    if (distinct.size() < 3) return reject("fewer than three distinct angle values");

    int reflex = 0;
    for (int i = 0; i < 4; ++i) reflex += t[i] >= one ? 1 : 0;
    if (reflex > 1) return reject("two angles >= pi");

    static const char* names[4] = {"alpha", "beta", "gamma", "delta"};
    auto case_mismatch = [&](int want_ge) -> Verdict {
        for (int i = 0; i < 4; ++i) {
            bool ge = t[i] >= one;
            if (i == want_ge && !ge)
                return reject(std::string(names[i]) + " < pi in " +
                              range_case_name(range_case) + " case");
            if (i != want_ge && ge)
                return reject(std::string(names[i]) + " >= pi in " +
                              range_case_name(range_case) + " case");
        }
        return Verdict{true, ""};
    };
    Verdict case_ok{true, ""};
    switch (range_case) {
        case RangeCase::Convex: case_ok = case_mismatch(-1); break;
        case RangeCase::AlphaGePi: case_ok = case_mismatch(0); break;
        case RangeCase::BetaGePi: case_ok = case_mismatch(1); break;
        case RangeCase::GammaGePi: case_ok = case_mismatch(2); break;
        case RangeCase::DeltaGePi: case_ok = case_mismatch(3); break;
    }
    if (!case_ok.accepted) return case_ok;

    if ((a > b) != (g > d)) return reject("exchange rule: alpha >= beta iff gamma >= delta");
    if (a < one && b < one && g < one) {
        if (!(b + one > g + d) || !(d + one > b + g))
            return reject("lune estimate violated");
    }
    if (a < one && b < one && d < one) {
        if (!(a + one > g + d) || !(g + one > a + d))
            return reject("lune estimate violated");
    }
    if (g < one && d < one && (a > g) != (b > d))
        return reject("triangle rule: alpha > gamma iff beta > delta");
    if (d < one && a == g) return reject("triangle rule: alpha == gamma forces delta == pi");
    if (g < one && b == d) return reject("triangle rule: beta == delta forces gamma == pi");
    if (a < one && b < one && d < one && g > one && !(b > d))
        return reject("reflex gamma requires beta > delta");

    if (f % 2 != 0 || f < 8) return reject("f must be even and >= 8");
    if (pair && pair->unique_degree3 && f < pair->f_threshold)
        return reject("unique degree-3 vertex needs f >= " +
                      std::to_string(pair->f_threshold));
    return Verdict{true, ""};
}

Verdict validate_angles(const AngleAssignment& a) {
    if (a.family)
        return Verdict{true, "parametric family; validated per instantiated f"};
    const CandidatePair* p = a.pair ? &*a.pair : nullptr;
    return validate_angles(a.at(a.f), a.f, a.range_case, p);
}

namespace {

// All fixed-f and family assignments across pairs and branches, cached.
const std::vector<AngleAssignment>& all_pair_assignments() {
    static const std::vector<AngleAssignment> all = [] {
        std::vector<AngleAssignment> out;
        for (const auto& pair : candidate_pairs()) {
            auto t1 = type1_angle_families(pair);
            out.insert(out.end(), t1.begin(), t1.end());
            for (RangeCase c : {RangeCase::Convex, RangeCase::AlphaGePi,
                                RangeCase::BetaGePi, RangeCase::GammaGePi,
                                RangeCase::DeltaGePi}) {
                auto t23 = type23_angle_sets(pair, c);
                out.insert(out.end(), t23.begin(), t23.end());
            }
        }
        return out;
    }();
    return all;
}

std::optional<std::array<Rational, 4>> try_instantiate(const AngleAssignment& a,
                                                       long long f) {
    std::array<Rational, 4> t = a.at(f);
    for (const auto& v : t)
        if (v <= Rational(0) || v >= Rational(2)) return std::nullopt;
    return t;
}

std::array<Rational, 4> mirror_angles(const std::array<Rational, 4>& t) {
    return {t[1], t[0], t[3], t[2]};
}

} // namespace

std::vector<std::string> curated_notes(long long f, const VertexSet& avc) {
    struct Fact {
        long long f;
        VertexSet avc;
        std::vector<std::string> notes;
    };
    static const std::vector<Fact> facts = [] {
        auto vs = [](std::initializer_list<VertexCombo> l) { return VertexSet(l); };
        std::vector<Fact> out;
        out.push_back({8,
                       vs({vc(3, 0, 0, 0), vc(0, 1, 0, 2), vc(0, 0, 0, 4), vc(2, 0, 2, 0),
                           vc(1, 0, 4, 0)}),
                       {"NoTilingKnown: adjacent-angle analysis removes the gamma "
                        "vertices, leaving no gamma at all"}});
        out.push_back({16,
                       vs({vc(1, 2, 0, 0), vc(1, 0, 2, 0), vc(1, 1, 0, 2), vc(0, 4, 0, 0),
                           vc(0, 2, 2, 0), vc(0, 0, 4, 0), vc(1, 0, 0, 4), vc(0, 3, 0, 2),
                           vc(0, 1, 2, 2), vc(0, 2, 0, 4), vc(0, 0, 2, 4), vc(0, 1, 0, 6),
                           vc(0, 0, 0, 8)}),
                       {"reduces to {" + vc(1, 0, 2, 0).name() + ", " + vc(1, 1, 0, 2).name() +
                            ", " + vc(0, 4, 0, 0).name() + "}",
                        "realized by S3 and S'3"}});
        out.push_back({20, vs({vc(1, 2, 0, 0), vc(0, 0, 1, 3), vc(2, 0, 1, 1)}),
                       {"NoTilingKnown: counting on gamma, delta fails"}});
        out.push_back({24,
                       vs({vc(1, 2, 0, 0), vc(4, 0, 0, 0), vc(0, 0, 1, 3), vc(1, 1, 2, 0),
                           vc(1, 0, 4, 0)}),
                       {"NoTilingKnown: adjacent-angle analysis"}});
        out.push_back({36,
                       vs({vc(1, 2, 0, 0), vc(2, 0, 0, 2), vc(0, 0, 1, 3), vc(3, 0, 2, 0),
                           vc(1, 0, 3, 1), vc(0, 0, 6, 0)}),
                       {"reduces to the set without " + vc(3, 0, 2, 0).name(),
                        "realized by S5"}});
        out.push_back({36,
                       vs({vc(1, 0, 0, 2), vc(1, 3, 0, 0), vc(0, 0, 3, 1), vc(2, 1, 2, 0),
                           vc(6, 0, 0, 0)}),
                       {"reduces to the set without " + vc(6, 0, 0, 0).name(),
                        "realized by S6"}});
        out.push_back({60,
                       vs({vc(1, 2, 0, 0), vc(0, 0, 1, 3), vc(3, 1, 0, 0), vc(5, 0, 0, 0),
                           vc(0, 1, 4, 0), vc(2, 0, 4, 0)}),
                       {"NoTilingKnown: adjacent-angle analysis"}});
        out.push_back({84, vs({vc(1, 2, 0, 0), vc(0, 0, 1, 3), vc(3, 0, 1, 1), vc(0, 0, 5, 1)}),
                       {"NoTilingKnown: adjacent-angle analysis"}});
        out.push_back({132, vs({vc(1, 2, 0, 0), vc(0, 0, 1, 3), vc(4, 0, 2, 0), vc(1, 0, 6, 0)}),
                       {"NoTilingKnown: adjacent-angle analysis"}});
        return out;
    }();
    for (const auto& fact : facts)
        if (fact.f == f && (fact.avc == avc || mirror(fact.avc) == avc)) return fact.notes;
    return {};
}

std::vector<RationalRow> classify_rational(long long f) {
    if (f < 8 || f % 2 != 0) throw DomainError("classify_rational needs even f >= 8");

    struct Candidate {
        AngleAssignment assignment;
        std::vector<CandidatePair> pairs; // every pair generating these angles
    };
    std::map<std::array<Rational, 4>, Candidate> by_angles;

    for (const auto& a : all_pair_assignments()) {
        if (!a.family && a.f != f) continue;
        auto t = try_instantiate(a, f);
        if (!t) continue;
        const CandidatePair* p = a.pair ? &*a.pair : nullptr;
        if (!validate_angles(*t, f, a.range_case, p).accepted) continue;
        auto it = by_angles.find(*t);
        if (it == by_angles.end()) {
            AngleAssignment inst = a;
            inst.family = false;
            inst.f = f;
            for (int i = 0; i < 4; ++i) inst.angles[i] = AngleExpr::exact((*t)[i]);
            it = by_angles.emplace(*t, Candidate{std::move(inst), {}}).first;
        }
        if (a.pair) it->second.pairs.push_back(*a.pair);
    }

    EnumFilters filters;
    filters.max_degree_from_f = true;

    std::vector<RationalRow> rows;
    for (auto& [angles, cand] : by_angles) {
        auto enumd = enumerate_vertices(angles, f, filters);
        bool beyond_pair = false;
        bool contains_some_pair = false;
        for (const auto& pair : cand.pairs) {
            VertexSet pair_set = {pair.v1, pair.v2};
            bool contained = std::includes(enumd.vertices.begin(), enumd.vertices.end(),
                                           pair_set.begin(), pair_set.end());
            contains_some_pair = contains_some_pair || contained;
            beyond_pair = beyond_pair || (contained && enumd.vertices != pair_set);
        }
        if (!contains_some_pair || !beyond_pair) continue;
        RationalRow row;
        row.assignment = cand.assignment;
        row.avc = enumd.vertices;
        for (const auto& pair : cand.pairs) {
            auto counts = count_feasibility(row.avc, VertexSet{pair.v1, pair.v2}, f);
            if (counts) {
                row.counts = std::move(counts);
                break;
            }
        }
        row.counting_feasible = row.counts.has_value();
        row.notes = curated_notes(f, row.avc);
        if (!row.counting_feasible) row.notes.push_back("Infeasible-by-counting");
        rows.push_back(std::move(row));
    }

    // Mirror twins (alpha<->beta, gamma<->delta) describe the same tiling; keep
    // the lexicographically larger angle tuple.
    std::map<std::array<Rational, 4>, size_t> index;
    for (size_t i = 0; i < rows.size(); ++i) index[rows[i].assignment.at(f)] = i;
    std::vector<bool> drop(rows.size(), false);
    for (size_t i = 0; i < rows.size(); ++i) {
        auto t = rows[i].assignment.at(f);
        auto m = mirror_angles(t);
        auto it = index.find(m);
        if (it == index.end() || it->second == i) continue;
        if (t < m) drop[i] = true;
    }
    std::vector<RationalRow> out;
    for (size_t i = 0; i < rows.size(); ++i)
        if (!drop[i]) out.push_back(std::move(rows[i]));
    return out;
}

namespace {

// set reductions specific to the alpha-gamma-delta branch
void apply_agd_filters(VertexSet& vs) {
    // alpha^2... cannot carry gamma or delta
    for (auto it = vs.begin(); it != vs.end();)
        it = (it->m >= 2 && it->is_b_vertex()) ? vs.erase(it) : std::next(it);
    bool has_a2 = false;
    for (const auto& v : vs) has_a2 = has_a2 || v.m >= 2;
    if (!has_a2) {
        // more deltas than gammas only at alpha delta^2 / alpha beta^n delta^2
        for (auto it = vs.begin(); it != vs.end();) {
            bool drop = it->l > it->k && !(it->m == 1 && it->k == 0 && it->l == 2);
            it = drop ? vs.erase(it) : std::next(it);
        }
    }
    // with the delta-heavy candidates settled, the balance reduction applies
    apply_balance(vs);
}

std::vector<TilingTag> match_tiling_rows(const VertexSet& avc, long long f) {
    std::vector<TilingTag> tags;
    const VertexCombo agd = vc(1, 0, 1, 1);
    if (!avc.count(agd)) return tags;
    auto add = [&](std::string family, std::initializer_list<VertexCombo> extra) {
        VertexSet s = {agd};
        for (const auto& v : extra) s.insert(v);
        tags.push_back(TilingTag{std::move(family), std::move(s)});
    };

    for (const auto& v : avc) {
        if (v.m == 0 && v.k == 0 && v.l == 0 && v.n == f / 2)
            add("E", {v}); // beta^(f/2)
    }
    // E': alpha^m beta^n1 (or alpha^3) with beta^n gamma delta, m*n + n1 = f/2
    for (const auto& w : avc) {
        if (w.k != 0 || w.l != 0 || w.m < 1) continue;
        if (w.degree() < 3) continue;
        for (const auto& x : avc) {
            if (!(x.m == 0 && x.k == 1 && x.l == 1 && x.n >= 1)) continue;
            if (w.m * x.n + w.n == f / 2) add("E'", {w, x});
        }
    }
    // E'': alpha beta^n1 with beta^n2 gamma^2 delta^2, n2 = f/2 - 2*n1
    for (const auto& w : avc) {
        if (!(w.m == 1 && w.k == 0 && w.l == 0 && w.n >= 1)) continue;
        long long n2 = f / 2 - 2 * w.n;
        if (n2 < 0) continue;
        VertexCombo x = vc(0, static_cast<int>(n2), 2, 2);
        if (avc.count(x)) add("E''", {w, x});
    }
    // E''': gamma^3 delta, alpha beta^((f+2)/6), alpha beta^((f-4)/6) delta^2
    if (f % 6 == 4) {
        VertexCombo g3d = vc(0, 0, 3, 1);
        VertexCombo w1 = vc(1, static_cast<int>((f + 2) / 6), 0, 0);
        VertexCombo w2 = vc(1, static_cast<int>((f - 4) / 6), 0, 2);
        if (avc.count(g3d) && avc.count(w1) && avc.count(w2))
            add("E'''", {g3d, w1, w2});
    }
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end(),
                           [](const TilingTag& a, const TilingTag& b) {
                               return a.family == b.family && a.avc == b.avc;
                           }),
               tags.end());
    return tags;
}

Verdict validate_agd(const std::array<Rational, 4>& t, long long f, RangeCase c) {
    Verdict v = validate_angles(t, f, c, nullptr);
    if (!v.accepted) return v;
    if (!(t[0] > t[1]) || !(t[2] > t[3]))
        return Verdict{false, "alpha > beta and gamma > delta required with alpha gamma delta"};
    return v;
}

const std::vector<AngleAssignment>& all_agd_assignments() {
    static const std::vector<AngleAssignment> all = [] {
        std::vector<AngleAssignment> out;
        std::set<AngleKey> seen;
        const VertexCombo agd = vc(1, 0, 1, 1);
        auto push = [&](std::optional<AngleAssignment> a) {
            if (a && seen.insert(assignment_key(*a)).second) out.push_back(std::move(*a));
        };
        for (RangeCase c :
             {RangeCase::Convex, RangeCase::AlphaGePi, RangeCase::GammaGePi}) {
            for (const auto& rel : type1_relations(c)) {
                RatMatrix rows = {quad_sum_row(), vertex_row(agd)};
                rows.insert(rows.end(), rel.begin(), rel.end());
                auto sol = solve_angle_system(std::move(rows), kUCol);
                auto a = assignment_from(sol, c, "I", std::nullopt);
                push(std::move(a));
            }
            std::vector<std::pair<std::string, std::array<TupleEntry, 4>>> tuples;
            tuples.push_back({"II",
                              {TupleEntry{Rational(0), Rational(1, 6)},
                               TupleEntry{Rational(1), Rational(0)},
                               TupleEntry{Rational(1, 2), Rational(0)},
                               TupleEntry{Rational(-1, 2), Rational(1, 2)}}});
            for (const auto& row : myerson_sporadic()) {
                std::array<TupleEntry, 4> t;
                for (int i = 0; i < 4; ++i) t[i] = TupleEntry{Rational(0), row[i]};
                tuples.push_back({"III", t});
            }
            for (const auto& [branch, tuple] : tuples)
                for (const auto& perm : myerson_permutations())
                    for (const auto& recal : recalibration_rows(c)) {
                        RatMatrix rows = {quad_sum_row(), vertex_row(agd)};
                        for (int i = 0; i < 4; ++i)
                            rows.push_back(match_row(recal.x[i], tuple[perm[i]]));
                        auto sol = solve_angle_system(std::move(rows), kUCol);
                        push(assignment_from(sol, c, branch, std::nullopt));
                    }
        }
        return out;
    }();
    return all;
}

} // namespace

std::vector<AgdRow> classify_rational_agd(long long f) {
    if (f < 8 || f % 2 != 0)
        throw DomainError("classify_rational_agd needs even f >= 8");

    EnumFilters filters;
    filters.balance = true;
    filters.max_degree_from_f = true;

    std::map<std::array<Rational, 4>, AgdRow> by_angles;
    for (const auto& a : all_agd_assignments()) {
        if (!a.family && a.f != f) continue;
        auto t = try_instantiate(a, f);
        if (!t) continue;
        if (!validate_agd(*t, f, a.range_case).accepted) continue;
        if (by_angles.count(*t)) continue;

        AgdRow row;
        row.assignment = a;
        row.assignment.family = false;
        row.assignment.f = f;
        for (int i = 0; i < 4; ++i) row.assignment.angles[i] = AngleExpr::exact((*t)[i]);
        auto enumd = enumerate_vertices(*t, f, filters);
        apply_agd_filters(enumd.vertices);
        row.avc = enumd.vertices;
        row.tilings = match_tiling_rows(row.avc, f);
        by_angles.emplace(*t, std::move(row));
    }

    std::vector<AgdRow> out;
    for (auto& [k, row] : by_angles) out.push_back(std::move(row));
    return out;
}

std::vector<TilingTag> agd_tiling_instantiations(long long f) {
    std::set<TilingTag> tags;
    for (const auto& row : classify_rational_agd(f))
        for (const auto& tag : row.tilings) tags.insert(tag);
    return std::vector<TilingTag>(tags.begin(), tags.end());
}

} // namespace quadtile
