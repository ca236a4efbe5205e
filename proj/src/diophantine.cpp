#include "quadtile/diophantine.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace quadtile {

namespace {

struct QForm {
    Rational m, n, k, l, c;

    bool is_zero() const {
        return m.is_zero() && n.is_zero() && k.is_zero() && l.is_zero() && c.is_zero();
    }
    QForm& sub_scaled(const QForm& o, const Rational& s) {
        m -= o.m * s;
        n -= o.n * s;
        k -= o.k * s;
        l -= o.l * s;
        c -= o.c * s;
        return *this;
    }
};

Int lcm_int(const Int& a, const Int& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

IntForm to_int_form(const QForm& q, Int& scale_out) {
    Int denom = 1;
    for (const Rational* r : {&q.m, &q.n, &q.k, &q.l, &q.c}) denom = lcm_int(denom, r->den());
    auto conv = [&](const Rational& r) {
        return ((r * Rational(denom)).num()).convert_to<long long>();
    };
    scale_out = denom;
    return IntForm{conv(q.m), conv(q.n), conv(q.k), conv(q.l), conv(q.c)};
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

void divide(IntForm& f, long long g) {
    if (g == 0) return;
    f.m /= g;
    f.n /= g;
    f.k /= g;
    f.l /= g;
    f.c /= g;
}

long long content(const IntForm& f) {
    long long g = 0;
    for (long long v : {f.m, f.n, f.k, f.l, f.c}) g = gcd_ll(g, std::llabs(v));
    return g;
}

int leading_sign(const IntForm& f) {
    for (long long v : {f.m, f.n, f.k, f.l, f.c})
        if (v != 0) return v > 0 ? 1 : -1;
    return 0;
}

void negate(IntForm& f) {
    f.m = -f.m;
    f.n = -f.n;
    f.k = -f.k;
    f.l = -f.l;
    f.c = -f.c;
}

} // namespace

std::string IntForm::str() const {
    std::string out;
    auto term = [&](long long v, const char* name) {
        if (v == 0) return;
        if (!out.empty()) out += v > 0 ? " + " : " - ";
        else if (v < 0) out += "-";
        long long a = std::llabs(v);
        if (a != 1 || name[0] == '\0') out += std::to_string(a);
        out += name;
    };
    term(m, "m");
    term(n, "n");
    term(k, "k");
    term(l, "l");
    term(c, "");
    return out.empty() ? "0" : out;
}

DiophantineCondition nonrationality_conditions(const CandidatePair& pair) {
    if (pair.v1 == pair.v2) throw DegeneratePair("pair has identical vertices");

    // rows: quadrilateral sum, the two fixed vertex sums (pi units),
    // rhs split into a constant part and a u = 1/f part
    struct Row {
        std::array<Rational, 4> a;
        Rational rc, ru;
    };
    std::vector<Row> rows = {
        {{Rational(1), Rational(1), Rational(1), Rational(1)}, Rational(2), Rational(4)},
        {{Rational(pair.v1.m), Rational(pair.v1.n), Rational(pair.v1.k),
          Rational(pair.v1.l)},
         Rational(2),
         Rational(0)},
        {{Rational(pair.v2.m), Rational(pair.v2.n), Rational(pair.v2.k),
          Rational(pair.v2.l)},
         Rational(2),
         Rational(0)},
    };

    // fraction-free style forward elimination, normalized pivots
    std::vector<int> pivot_cols;
    size_t r = 0;
    for (int c = 0; c < 4 && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel].a[c].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[r]);
        Rational inv = Rational(1) / rows[r].a[c];
        for (int j = 0; j < 4; ++j) rows[r].a[j] *= inv;
        rows[r].rc *= inv;
        rows[r].ru *= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r) continue;
            Rational factor = rows[i].a[c];
            if (factor.is_zero()) continue;
            for (int j = 0; j < 4; ++j) rows[i].a[j] -= factor * rows[r].a[j];
            rows[i].rc -= factor * rows[r].rc;
            rows[i].ru -= factor * rows[r].ru;
        }
        pivot_cols.push_back(c);
        ++r;
    }
    if (pivot_cols.size() != 3)
        throw DegeneratePair("pair rows dependent with the quadrilateral row");

    // generic row [m n k l | 2] with symbolic entries
    std::array<QForm, 4> coeff = {
        QForm{Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)},
        QForm{Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)},
        QForm{Rational(0), Rational(0), Rational(1), Rational(0), Rational(0)},
        QForm{Rational(0), Rational(0), Rational(0), Rational(1), Rational(0)},
    };
    QForm rhs_c{Rational(0), Rational(0), Rational(0), Rational(0), Rational(2)};
    QForm rhs_u{Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};

    for (size_t i = 0; i < pivot_cols.size(); ++i) {
        int c = pivot_cols[i];
        QForm factor = coeff[c];
        if (factor.is_zero()) continue;
        for (int j = 0; j < 4; ++j) coeff[j].sub_scaled(factor, rows[i].a[j]);
        rhs_c.sub_scaled(factor, rows[i].rc);
        rhs_u.sub_scaled(factor, rows[i].ru);
    }

    int free_col = -1;
    for (int j = 0; j < 4; ++j) {
        bool is_pivot = std::find(pivot_cols.begin(), pivot_cols.end(), j) != pivot_cols.end();
        if (!is_pivot) free_col = j;
    }

    DiophantineCondition cond;
    Int scale;
    cond.lambda = to_int_form(coeff[free_col], scale);
    // mu = rhs_c + u * rhs_u == 0  <=>  P*f + Q = 0 (multiply by f > 0)
    Int sp, sq;
    IntForm P = to_int_form(rhs_c, sp);
    IntForm Q = to_int_form(rhs_u, sq);
    // rescale so both sides use one common multiplier
    if (sp != sq) {
        Int l = lcm_int(sp, sq);
        long long fp = (l / sp).convert_to<long long>();
        long long fq = (l / sq).convert_to<long long>();
        P.m *= fp; P.n *= fp; P.k *= fp; P.l *= fp; P.c *= fp;
        Q.m *= fq; Q.n *= fq; Q.k *= fq; Q.l *= fq; Q.c *= fq;
    }

    long long g = content(cond.lambda);
    if (g > 1) divide(cond.lambda, g);
    if (leading_sign(cond.lambda) < 0) negate(cond.lambda);

    long long gpq = gcd_ll(content(P), content(Q));
    if (gpq > 1) {
        divide(P, gpq);
        divide(Q, gpq);
    }
    int s = leading_sign(P);
    if (s == 0) s = leading_sign(Q);
    if (s < 0) {
        negate(P);
        negate(Q);
    }
    cond.P = P;
    cond.Q = Q;
    return cond;
}

namespace {

// nonnegative integer solutions of lambda(v) == 0 up to a box, calling fn(v)
template <typename Fn>
void for_lambda_solutions(const IntForm& lambda, int box, Fn&& fn) {
    for (int m = 0; m <= box; ++m)
        for (int n = 0; n <= box; ++n)
            for (int k = 0; k <= box; ++k) {
                long long partial = lambda.m * m + lambda.n * n + lambda.k * k + lambda.c;
                if (lambda.l != 0) {
                    if (partial % lambda.l != 0) continue;
                    long long l = -partial / lambda.l;
                    if (l < 0 || l > box) continue;
                    fn(VertexCombo{m, n, k, static_cast<int>(l)});
                } else {
                    if (partial != 0) continue;
                    for (int l = 0; l <= box; ++l) fn(VertexCombo{m, n, k, l});
                }
            }
}

bool leq(const VertexCombo& a, const VertexCombo& b) {
    return a.m <= b.m && a.n <= b.n && a.k <= b.k && a.l <= b.l;
}

VertexCombo minus(const VertexCombo& a, const VertexCombo& b) {
    return {a.m - b.m, a.n - b.n, a.k - b.k, a.l - b.l};
}

VertexCombo plus_scaled(const VertexCombo& a, const VertexCombo& d, int t) {
    return {a.m + t * d.m, a.n + t * d.n, a.k + t * d.k, a.l + t * d.l};
}

} // namespace

VertexFamily solve_vertex_families(const DiophantineCondition& cond,
                                   const CandidatePair& pair, long long f_threshold) {
    constexpr int kBox = 64;
    VertexFamily out;
    out.pair = pair;
    out.cond = cond;
    out.f_threshold = f_threshold;

    const IntForm lam_h = cond.lambda.homogeneous();
    const IntForm P_h = cond.P.homogeneous();
    const IntForm Q_h = cond.Q.homogeneous();

    // ray directions: homogeneous part of lambda and of the f-coefficient;
    // directions must preserve the Parity Lemma
    std::vector<VertexCombo> dirs;
    for_lambda_solutions(lam_h, 12, [&](const VertexCombo& v) {
        if (v.degree() == 0) return;
        if (!v.parity_ok()) return;
        if (P_h.eval(v) != 0) return;
        dirs.push_back(v);
    });
    std::sort(dirs.begin(), dirs.end());
    std::vector<VertexCombo> minimal;
    for (const auto& d : dirs) {
        bool dominated = false;
        for (const auto& m : minimal) dominated = dominated || leq(m, d);
        if (!dominated) minimal.push_back(d);
    }
    dirs = std::move(minimal);

    // f-free solutions: lambda = P = Q = 0 (Parity Lemma applies throughout)
    std::set<VertexCombo> case1;
    for_lambda_solutions(cond.lambda, kBox, [&](const VertexCombo& v) {
        if (!v.parity_ok()) return;
        if (cond.P.eval(v) == 0 && cond.Q.eval(v) == 0) case1.insert(v);
    });
    std::vector<VertexCombo> case1_rays;
    for (const auto& d : dirs)
        if (lam_h.eval(d) == 0 && P_h.eval(d) == 0 && Q_h.eval(d) == 0) case1_rays.push_back(d);

    for (const auto& v : case1) {
        if (v.degree() < 3) continue;
        bool reachable = false;
        for (const auto& d : case1_rays) {
            VertexCombo w = minus(v, d);
            if (w.m >= 0 && w.n >= 0 && w.k >= 0 && w.l >= 0 && case1.count(w) &&
                w.degree() >= 3)
                reachable = true;
        }
        if (reachable) continue;
        FamilyMember mem;
        mem.base = v;
        mem.f_free = true;
        out.members.push_back(mem);
        for (const auto& d : case1_rays) {
            if (!case1.count(plus_scaled(v, d, 1))) continue;
            FamilyMember ray = mem;
            ray.dir = d;
            out.members.push_back(ray);
        }
    }

    // f-pinned solutions: lambda = 0 and P*f + Q = 0 with P != 0
    std::map<VertexCombo, long long> pinned;
    for_lambda_solutions(cond.lambda, kBox, [&](const VertexCombo& v) {
        if (!v.parity_ok()) return;
        long long p = cond.P.eval(v);
        if (p == 0) return;
        long long q = cond.Q.eval(v);
        if (q % p != 0) return;
        long long f = -q / p;
        if (f < 6 || f % 2 != 0) return;
        if (v.degree() < 3) return;
        pinned[v] = f;
    });

    std::set<VertexCombo> covered;
    for (const auto& d : dirs) {
        if (d.degree() == 0) continue;
        for (const auto& [v, f] : pinned) {
            VertexCombo prev = minus(v, d);
            bool has_prev = prev.m >= 0 && prev.n >= 0 && prev.k >= 0 && prev.l >= 0 &&
                            pinned.count(prev) > 0;
            if (has_prev) continue; // not a chain base
            auto next_it = pinned.find(plus_scaled(v, d, 1));
            if (next_it == pinned.end()) continue;
            long long step = next_it->second - f;
            int t = 1;
            while (true) {
                auto it = pinned.find(plus_scaled(v, d, t));
                if (it == pinned.end() || it->second != f + t * step) break;
                ++t;
            }
            if (t < 2) continue;
            FamilyMember mem;
            mem.base = v;
            mem.dir = d;
            mem.f_base = f;
            mem.f_step = step;
            out.members.push_back(mem);
            for (int i = 0; i < t; ++i) covered.insert(plus_scaled(v, d, i));
        }
    }
    for (const auto& [v, f] : pinned) {
        if (covered.count(v)) continue;
        FamilyMember mem;
        mem.base = v;
        mem.f_base = f;
        out.members.push_back(mem);
    }
    return out;
}

VertexSet instantiate(const VertexFamily& family, long long f, int cap,
                      bool enforce_threshold) {
    VertexSet out;
    if (enforce_threshold && f < family.f_threshold) return out;
    auto fits = [&](const VertexCombo& v) {
        return v.m <= cap && v.n <= cap && v.k <= cap && v.l <= cap && v.degree() >= 3;
    };
    for (const auto& mem : family.members) {
        if (!mem.parametric()) {
            if ((mem.f_free || mem.f_base == f) && fits(mem.base)) out.insert(mem.base);
            continue;
        }
        if (mem.f_free) {
            for (int t = 0;; ++t) {
                VertexCombo v = plus_scaled(mem.base, mem.dir, t);
                if (!fits(v)) break;
                out.insert(v);
            }
        } else {
            if (mem.f_step == 0) {
                if (mem.f_base != f) continue;
                for (int t = 0;; ++t) {
                    VertexCombo v = plus_scaled(mem.base, mem.dir, t);
                    if (!fits(v)) break;
                    out.insert(v);
                }
            } else {
                long long diff = f - mem.f_base;
                if (diff % mem.f_step != 0) continue;
                long long t = diff / mem.f_step;
                if (t < 0) continue;
                VertexCombo v = plus_scaled(mem.base, mem.dir, static_cast<int>(t));
                if (fits(v)) out.insert(v);
            }
        }
    }
    return out;
}

VertexSet diophantine_oracle(const DiophantineCondition& cond, long long f, int cap) {
    VertexSet out;
    for_lambda_solutions(cond.lambda, cap, [&](const VertexCombo& v) {
        if (v.degree() < 3 || !v.parity_ok()) return;
        if (cond.P.eval(v) * f + cond.Q.eval(v) != 0) return;
        out.insert(v);
    });
    return out;
}

VertexSet NonRationalRow::avc_at(long long f_value, int cap) const {
    VertexSet out = {pair.v1, pair.v2};
    VertexFamily fam;
    fam.pair = pair;
    fam.members = extras;
    fam.f_threshold = f_threshold;
    VertexSet inst = instantiate(fam, f_value, cap, false);
    out.insert(inst.begin(), inst.end());
    return out;
}

std::vector<NonRationalRow> classify_nonrational() {
    std::vector<NonRationalRow> rows;
    for (const auto& pair : candidate_pairs()) {
        DiophantineCondition cond;
        try {
            cond = nonrationality_conditions(pair);
        } catch (const DegeneratePair&) {
            continue;
        }
        VertexFamily fam = solve_vertex_families(cond, pair, pair.f_threshold);

        std::vector<FamilyMember> parametric, f_free_extra;
        std::map<long long, std::vector<FamilyMember>> by_f;
        for (const auto& mem : fam.members) {
            bool is_pair_member =
                !mem.parametric() && mem.f_free &&
                (mem.base == pair.v1 || mem.base == pair.v2);
            if (is_pair_member) continue;
            if (mem.parametric()) {
                parametric.push_back(mem);
            } else if (mem.f_free) {
                f_free_extra.push_back(mem);
            } else if (mem.f_base >= pair.f_threshold) {
                by_f[mem.f_base].push_back(mem);
            }
        }

        if (!parametric.empty() || !f_free_extra.empty()) {
            NonRationalRow row;
            row.pair = pair;
            row.f_threshold = pair.f_threshold;
            row.extras = parametric;
            row.extras.insert(row.extras.end(), f_free_extra.begin(), f_free_extra.end());
            rows.push_back(std::move(row));
        }
        for (auto& [f, extras] : by_f) {
            NonRationalRow row;
            row.pair = pair;
            row.f = f;
            row.f_threshold = pair.f_threshold;
            row.extras = std::move(extras);
            rows.push_back(std::move(row));
        }
    }

    // A pinned row repeats a parametric one when its vertex set (or the
    // alpha<->beta, gamma<->delta mirror of it) instantiates that family.
    std::vector<NonRationalRow> out;
    for (const auto& row : rows) {
        bool duplicate = false;
        if (row.f) {
            VertexSet avc = row.avc_at(*row.f);
            VertexSet mirrored = mirror(avc);
            for (const auto& other : rows) {
                if (other.f) continue;
                VertexSet inst = other.avc_at(*row.f);
                // a mirrored copy is the same tiling regardless of which pair
                // regime found it; direct copies only collide above the
                // parametric row's own tile-count threshold
                bool direct = *row.f >= other.f_threshold &&
                              std::includes(inst.begin(), inst.end(), avc.begin(),
                                            avc.end());
                bool via_mirror = std::includes(inst.begin(), inst.end(),
                                                mirrored.begin(), mirrored.end());
                if (direct || via_mirror) {
                    duplicate = true;
                    break;
                }
            }
        }
        if (!duplicate) out.push_back(row);
    }
    return out;
}

std::vector<NonRationalAgdRow> classify_nonrational_agd(long long f) {
    if (f < 8 || f % 2 != 0)
        throw DomainError("classify_nonrational_agd needs even f >= 8");
    std::vector<NonRationalAgdRow> out;
    const VertexCombo agd{1, 0, 1, 1};
    auto add = [&](std::string family, std::string pattern,
                   std::initializer_list<VertexCombo> extra) {
        NonRationalAgdRow row;
        row.family = std::move(family);
        row.pattern = std::move(pattern);
        row.avc = {agd};
        for (const auto& v : extra) row.avc.insert(v);
        out.push_back(std::move(row));
    };
    const long long half = f / 2;

    add("E", "{agd, b^(f/2)}", {VertexCombo{0, static_cast<int>(half), 0, 0}});

    // the full admissible set when gamma, delta are the conjugate non-rational
    // pair: equal gamma/delta counts at every vertex
    {
        NonRationalAgdRow row;
        row.family = "general";
        row.pattern = "{agd, a^m, a^m b^n, b^n, b^n g^k d^k, g^k d^k}";
        row.avc = {agd, VertexCombo{0, static_cast<int>(half), 0, 0}};
        if (f % 6 == 0) row.avc.insert(VertexCombo{3, 0, 0, 0});
        for (int m = 1; m <= 3; ++m)
            for (int n2 = 1; m * n2 < half; ++n2) {
                long long n1 = half - static_cast<long long>(m) * n2;
                if (8 * n2 <= f || 8 * n2 >= 3 * f) continue;
                if (n1 >= 1)
                    row.avc.insert(VertexCombo{m, static_cast<int>(n1), 0, 0});
            }
        for (int k = 2; k <= 3; ++k) {
            for (long long n = 0; k * n <= half; ++n) {
                long long n1 = half - k * n;
                if (8 * n <= f || 8 * n >= 3 * f) continue;
                row.avc.insert(VertexCombo{0, static_cast<int>(n1), k, k});
                if (n1 == 0) row.avc.insert(VertexCombo{0, 0, k, k});
            }
        }
        out.push_back(std::move(row));
    }

    // E': alpha^m with beta^n gamma delta; alpha in (pi/2, 3pi/2) forces m = 3
    if (f % 6 == 0)
        add("E'", "{agd, a^m, b^n gd}",
            {VertexCombo{3, 0, 0, 0}, VertexCombo{0, static_cast<int>(f / 6), 1, 1}});

    // E': alpha^m beta^n1 with beta^n2 gamma delta, m*n2 + n1 = f/2
    for (int m = 1; m <= 3; ++m)
        for (int n2 = 2; n2 < half; ++n2) {
            if (8 * n2 <= f || 8 * n2 >= 3 * f) continue; // alpha = n2*beta in range
            long long n1 = half - static_cast<long long>(m) * n2;
            if (n1 < 1) continue;
            add("E'", "{agd, a^m b^n1, b^n2 gd}",
                {VertexCombo{m, static_cast<int>(n1), 0, 0},
                 VertexCombo{0, n2, 1, 1}});
        }

    // E'': alpha beta^n with gamma^k delta^k, k*n = f/2
    for (int k = 2; k <= 3; ++k) {
        if (half % k != 0) continue;
        long long n = half / k;
        if (n < 1) continue;
        if (8 * n <= f || 8 * n >= 3 * f) continue;
        add("E''", "{agd, a b^n, g^k d^k}",
            {VertexCombo{1, static_cast<int>(n), 0, 0}, VertexCombo{0, 0, k, k}});
    }

    // E'': alpha beta^n with beta^n1 gamma^k delta^k, k*n + n1 = f/2
    for (int k = 2; k <= 3; ++k)
        for (long long n = 1; k * n < half; ++n) {
            if (8 * n <= f || 8 * n >= 3 * f) continue;
            long long n1 = half - k * n;
            if (n1 < 1) continue;
            add("E''", "{agd, a b^n, b^n1 g^k d^k}",
                {VertexCombo{1, static_cast<int>(n), 0, 0},
                 VertexCombo{0, static_cast<int>(n1), k, k}});
        }
    return out;
}

} // namespace quadtile
