#include "matgerm/simplex.hpp"

namespace mg {

namespace {

// Tableau with rows 0..m-1 the constraints and row m the objective.
struct Tableau {
    int m, n;
    std::vector<std::vector<Rat>> t; // (m+1) x (n+1), last column = rhs
    std::vector<int> basis;          // basic variable per row

    void pivot(int row, int col) {
        Rat p = t[row][col];
        for (auto& v : t[row]) v /= p;
        for (int r = 0; r <= m; ++r) {
            if (r == row || t[r][col] == 0) continue;
            Rat f = t[r][col];
            for (int c = 0; c <= n; ++c) t[r][c] -= f * t[row][c];
        }
        basis[row] = col;
    }

    // Bland's rule; returns false when optimal.
    bool step() {
        int col = -1;
        for (int c = 0; c < n; ++c)
            if (t[m][c] < 0) { col = c; break; }
        if (col < 0) return false;
        int row = -1;
        for (int r = 0; r < m; ++r) {
            if (t[r][col] <= 0) continue;
            if (row < 0) { row = r; continue; }
            Rat lhs = t[r][n] * t[row][col];
            Rat rhs = t[row][n] * t[r][col];
            if (lhs < rhs || (lhs == rhs && basis[r] < basis[row])) row = r;
        }
        if (row < 0) throw error("lp unbounded");
        pivot(row, col);
        return true;
    }
};

} // namespace

LpResult solve_lp_max(const std::vector<std::vector<Rat>>& a, const std::vector<Rat>& b,
                      const std::vector<Rat>& c) {
    int m = (int)a.size();
    int n = m == 0 ? (int)c.size() : (int)a[0].size();
    for (auto& bi : b)
        if (bi < 0) throw error("lp rhs must be nonnegative");

    // Phase 1 with one artificial variable per row.
    Tableau tab;
    tab.m = m;
    tab.n = n + m;
    tab.t.assign(m + 1, std::vector<Rat>(tab.n + 1, Rat(0)));
    tab.basis.assign(m, 0);
    for (int r = 0; r < m; ++r) {
        for (int cc = 0; cc < n; ++cc) tab.t[r][cc] = a[r][cc];
        tab.t[r][n + r] = 1;
        tab.t[r][tab.n] = b[r];
        tab.basis[r] = n + r;
    }
    for (int cc = 0; cc < n; ++cc) {
        Rat s = 0;
        for (int r = 0; r < m; ++r) s += a[r][cc];
        tab.t[m][cc] = -s;
    }
    {
        Rat s = 0;
        for (int r = 0; r < m; ++r) s += b[r];
        tab.t[m][tab.n] = -s;
    }
    try {
        while (tab.step()) {}
    } catch (const error&) {
        return {LpResult::Status::Infeasible, 0, {}};
    }
    if (tab.t[m][tab.n] != 0) return {LpResult::Status::Infeasible, 0, {}};

    // Drive leftover artificial variables out of the basis where possible.
    for (int r = 0; r < m; ++r) {
        if (tab.basis[r] < n) continue;
        int col = -1;
        for (int cc = 0; cc < n; ++cc)
            if (tab.t[r][cc] != 0) { col = cc; break; }
        if (col >= 0) tab.pivot(r, col);
    }

    // Phase 2: restrict to the original columns.
    Tableau t2;
    t2.m = 0;
    std::vector<int> keep_rows;
    for (int r = 0; r < m; ++r)
        if (tab.basis[r] < n) keep_rows.push_back(r);
    t2.m = (int)keep_rows.size();
    t2.n = n;
    t2.t.assign(t2.m + 1, std::vector<Rat>(n + 1, Rat(0)));
    t2.basis.assign(t2.m, 0);
    for (int r = 0; r < t2.m; ++r) {
        for (int cc = 0; cc < n; ++cc) t2.t[r][cc] = tab.t[keep_rows[r]][cc];
        t2.t[r][n] = tab.t[keep_rows[r]][tab.n];
        t2.basis[r] = tab.basis[keep_rows[r]];
    }
    for (int cc = 0; cc < n; ++cc) t2.t[t2.m][cc] = -c[cc];
    for (int r = 0; r < t2.m; ++r) {
        Rat f = t2.t[t2.m][t2.basis[r]];
        if (f == 0) continue;
        for (int cc = 0; cc <= n; ++cc) t2.t[t2.m][cc] -= f * t2.t[r][cc];
    }
    try {
        while (t2.step()) {}
    } catch (const error&) {
        return {LpResult::Status::Unbounded, 0, {}};
    }

    LpResult res;
    res.status = LpResult::Status::Optimal;
    res.x.assign(n, Rat(0));
    for (int r = 0; r < t2.m; ++r) res.x[t2.basis[r]] = t2.t[r][n];
    res.objective = t2.t[t2.m][n];
    return res;
}

} // namespace mg
