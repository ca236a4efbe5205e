#include "quadtile/vertex_enum.hpp"

#include <algorithm>
#include <cmath>

namespace quadtile {

namespace {

const char* kGreek[4] = {"α", "β", "γ", "δ"};

std::string superscript(int e) {
    static const char* digits[10] = {"⁰", "¹", "²", "³", "⁴",
                                     "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char c : std::to_string(e)) out += digits[c - '0'];
    return out;
}

// Post filters shared by the exact and numeric paths.
void apply_filters(VertexSet& vs, long long f, const EnumFilters& filters) {
    if (filters.max_degree_from_f) {
        for (auto it = vs.begin(); it != vs.end();) {
            int h = it->degree();
            if (h >= 4 && f < 6 + (h - 3))
                it = vs.erase(it);
            else
                ++it;
        }
    }
    if (filters.balance) apply_balance(vs);
}

} // namespace

void apply_balance(VertexSet& vs) {
    bool has_k2 = false, has_l2 = false;
    for (const auto& v : vs) {
        has_k2 = has_k2 || v.k >= 2;
        has_l2 = has_l2 || v.l >= 2;
    }
    if (has_k2 != has_l2) {
        // gamma^2... exists without delta^2... (or vice versa): neither can
        // appear in a tiling, and every b-vertex keeps one gamma, one delta.
        for (auto it = vs.begin(); it != vs.end();) {
            bool drop = it->k >= 2 || it->l >= 2 ||
                        (it->is_b_vertex() && !(it->k == 1 && it->l == 1));
            it = drop ? vs.erase(it) : std::next(it);
        }
    } else if (!has_k2 && !has_l2) {
        for (auto it = vs.begin(); it != vs.end();) {
            bool drop = it->is_b_vertex() && !(it->k == 1 && it->l == 1);
            it = drop ? vs.erase(it) : std::next(it);
        }
    }
}

std::string VertexCombo::name() const {
    std::string out;
    const int e[4] = {m, n, k, l};
    for (int i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        out += kGreek[i];
        if (e[i] > 1) out += superscript(e[i]);
    }
    if (out.empty()) out = "1";
    return out;
}

std::string vertex_set_name(const VertexSet& vs) {
    std::string out = "{";
    bool first = true;
    for (const auto& v : vs) {
        if (!first) out += ", ";
        out += v.name();
        first = false;
    }
    return out + "}";
}

VertexSet mirror(const VertexSet& vs) {
    VertexSet out;
    for (const auto& v : vs) out.insert(mirror(v));
    return out;
}

EnumResult enumerate_vertices(const std::array<Rational, 4>& angles_pi, long long f,
                              const EnumFilters& filters) {
    for (const auto& a : angles_pi)
        if (a <= Rational(0) || a >= Rational(2))
            throw DomainError("vertex enumeration needs angles in (0, 2pi)");

    int bound[4];
    for (int i = 0; i < 4; ++i) {
        Int b = (Rational(2) / angles_pi[i]).floor();
        bound[i] = static_cast<int>(std::min<Int>(b, filters.hard_cap).convert_to<long long>());
    }

    EnumResult out;
    const Rational two(2);
    for (int m = 0; m <= bound[0]; ++m) {
        Rational sm = angles_pi[0] * Rational(m);
        if (sm > two) break;
        for (int n = 0; n <= bound[1]; ++n) {
            Rational sn = sm + angles_pi[1] * Rational(n);
            if (sn > two) break;
            for (int k = 0; k <= bound[2]; ++k) {
                Rational sk = sn + angles_pi[2] * Rational(k);
                if (sk > two) break;
                for (int l = 0; l <= bound[3]; ++l) {
                    Rational sl = sk + angles_pi[3] * Rational(l);
                    if (sl > two) break;
                    VertexCombo v{m, n, k, l};
                    if (sl == two && v.degree() >= 3 && v.parity_ok())
                        out.vertices.insert(v);
                }
            }
        }
    }
    apply_filters(out.vertices, f, filters);
    return out;
}

EnumResult enumerate_vertices(const std::array<double, 4>& angles, long long f,
                              const EnumFilters& filters, double tol) {
    for (double a : angles)
        if (!(a > 0.0 && a < 2.0 * kPi))
            throw DomainError("vertex enumeration needs angles in (0, 2pi)");

    constexpr double kAmbiguousBand = 1e-6;
    int bound[4];
    for (int i = 0; i < 4; ++i) {
        bound[i] = std::min(filters.hard_cap,
                            static_cast<int>(std::floor(2.0 * kPi / angles[i] + tol)));
    }

    EnumResult out;
    const double target = 2.0 * kPi;
    for (int m = 0; m <= bound[0]; ++m)
        for (int n = 0; n <= bound[1]; ++n)
            for (int k = 0; k <= bound[2]; ++k)
                for (int l = 0; l <= bound[3]; ++l) {
                    double s = m * angles[0] + n * angles[1] + k * angles[2] + l * angles[3];
                    if (s > target + kAmbiguousBand) break;
                    VertexCombo v{m, n, k, l};
                    if (v.degree() < 3 || !v.parity_ok()) continue;
                    double err = std::fabs(s - target);
                    if (err < tol)
                        out.vertices.insert(v);
                    else if (err <= kAmbiguousBand)
                        out.ambiguous.insert(v);
                }
    apply_filters(out.vertices, f, filters);
    return out;
}

std::optional<CountVector> count_feasibility(const AVC& avc, long long f) {
    return count_feasibility(avc.vertices, avc.required, f);
}

namespace {

bool count_dfs(const std::vector<VertexCombo>& vs, const std::vector<bool>& required,
               size_t idx, std::array<long long, 4>& budget, long long vertex_budget,
               std::vector<long long>& counts) {
    if (idx == vs.size()) {
        return budget[0] == 0 && budget[1] == 0 && budget[2] == 0 && budget[3] == 0 &&
               vertex_budget == 0;
    }
    const VertexCombo& v = vs[idx];
    long long max_x = vertex_budget;
    for (int a = 0; a < 4; ++a)
        if (v.count(a) > 0) max_x = std::min(max_x, budget[a] / v.count(a));
    long long min_x = required[idx] ? 1 : 0;
    if (max_x < min_x) return false;
    for (long long x = min_x; x <= max_x; ++x) {
        for (int a = 0; a < 4; ++a) budget[a] -= x * v.count(a);
        counts[idx] = x;
        bool ok = count_dfs(vs, required, idx + 1, budget, vertex_budget - x, counts);
        for (int a = 0; a < 4; ++a) budget[a] += x * v.count(a);
        if (ok) return true;
        counts[idx] = 0;
    }
    return false;
}

} // namespace

std::optional<CountVector> count_feasibility(const VertexSet& vertices,
                                             const VertexSet& required, long long f) {
    std::vector<VertexCombo> vs(vertices.begin(), vertices.end());
    if (vs.empty()) return std::nullopt;
    for (int a = 0; a < 4; ++a) {
        bool all_zero = true;
        for (const auto& v : vs) all_zero = all_zero && v.count(a) == 0;
        if (all_zero)
            throw DomainError("count system has an all-zero angle column");
    }
    std::vector<bool> req(vs.size(), false);
    for (size_t i = 0; i < vs.size(); ++i) req[i] = required.count(vs[i]) > 0;

    // Process high-degree vertices first; their multiplicities are small.
    std::vector<size_t> order(vs.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return vs[a].degree() > vs[b].degree(); });
    std::vector<VertexCombo> sorted;
    std::vector<bool> sorted_req;
    for (size_t i : order) {
        sorted.push_back(vs[i]);
        sorted_req.push_back(req[i]);
    }

    std::array<long long, 4> budget = {f, f, f, f};
    std::vector<long long> counts(vs.size(), 0);
    if (!count_dfs(sorted, sorted_req, 0, budget, f + 2, counts)) return std::nullopt;

    CountVector out;
    out.vertices = vs;
    out.counts.resize(vs.size());
    for (size_t i = 0; i < order.size(); ++i) out.counts[order[i]] = counts[i];
    return out;
}

std::optional<long long> check_degree_counts(const DegreeHistogram& hist) {
    long long f = 6, v3_expect = 8, v3 = 0;
    for (const auto& [h, count] : hist.v) {
        if (h < 3 || count < 0) return std::nullopt;
        if (h == 3) {
            v3 = count;
        } else {
            f += (h - 3) * count;
            v3_expect += (h - 4) * count;
        }
    }
    if (v3 != v3_expect) return std::nullopt;
    if (f % 2 != 0) return std::nullopt;
    return f;
}

} // namespace quadtile
