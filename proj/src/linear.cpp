#include "quadtile/linear.hpp"

namespace quadtile {

std::vector<int> rref(RatMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Rational inv = Rational(1) / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational factor = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

AngleSolve solve_angle_system(RatMatrix rows, int u_col) {
    AngleSolve out;
    if (rows.empty()) {
        out.status = AngleSolve::Status::Underdetermined;
        return out;
    }
    const int n = static_cast<int>(rows[0].size()) - 1;
    std::vector<int> pivots = rref(rows);

    for (size_t i = pivots.size(); i < rows.size(); ++i) {
        if (!rows[i][n].is_zero()) {
            out.status = AngleSolve::Status::Inconsistent;
            return out;
        }
    }
    for (int p : pivots) {
        if (p == n) {
            out.status = AngleSolve::Status::Inconsistent;
            return out;
        }
    }

    std::vector<int> pivot_row(n, -1);
    for (size_t i = 0; i < pivots.size(); ++i) pivot_row[pivots[i]] = static_cast<int>(i);

    bool u_free = pivot_row[u_col] < 0;
    for (int a = 0; a < 4; ++a) {
        int r = pivot_row[a];
        if (r < 0) {
            out.status = AngleSolve::Status::Underdetermined;
            return out;
        }
        // the angle may depend on u but on no other free unknown
        for (int j = 0; j < n; ++j) {
            if (j == a || j == u_col || pivot_row[j] >= 0) continue;
            if (!rows[r][j].is_zero()) {
                out.status = AngleSolve::Status::Underdetermined;
                return out;
            }
        }
        out.c0[a] = rows[r][n];
        out.c1[a] = u_free ? -rows[r][u_col] : Rational(0);
    }

    if (u_free) {
        out.status = AngleSolve::Status::FamilyInU;
        return out;
    }
    int ur = pivot_row[u_col];
    for (int j = 0; j < n; ++j) {
        if (j == u_col || pivot_row[j] >= 0) continue;
        if (!rows[ur][j].is_zero()) {
            out.status = AngleSolve::Status::Underdetermined;
            return out;
        }
    }
    out.u = rows[ur][n];
    out.status = AngleSolve::Status::Pinned;
    return out;
}

} // namespace quadtile
