#include "matgerm/determinator.hpp"

#include "matgerm/localalg.hpp"

#include <algorithm>
#include <sstream>

namespace mg {

std::string SingClass::str() const {
    switch (tag) {
        case Tag::Regular: return "Regular";
        case Tag::A: return "A(" + std::to_string(mu) + ")";
        case Tag::D: return "D(" + std::to_string(mu) + ")";
        case Tag::E6: return "E6";
        case Tag::E7: return "E7";
        case Tag::E8: return "E8";
        case Tag::P8: return "P8";
        case Tag::X9: return "X9";
        case Tag::J10: return "J10";
        case Tag::NonSimple: return "NonSimple";
        case Tag::Undetermined: return "Undetermined(" + reason + ")";
    }
    return "?";
}

std::optional<SingClass> sing_class_from_text(const std::string& text) {
    auto open = text.find('(');
    if (open != std::string::npos && text.back() == ')') {
        std::string head = text.substr(0, open);
        long mu = std::stol(text.substr(open + 1, text.size() - open - 2));
        if (head == "A") return mu == 0 ? SingClass::regular() : SingClass::a(mu);
        if (head == "D") return SingClass::d(mu);
        return std::nullopt;
    }
    if (text == "Regular") return SingClass::regular();
    if (text == "E6") return SingClass::simple(SingClass::Tag::E6);
    if (text == "E7") return SingClass::simple(SingClass::Tag::E7);
    if (text == "E8") return SingClass::simple(SingClass::Tag::E8);
    if (text == "P8") return SingClass::simple(SingClass::Tag::P8);
    if (text == "X9") return SingClass::simple(SingClass::Tag::X9);
    if (text == "J10") return SingClass::simple(SingClass::Tag::J10);
    if (text == "NonSimple") return SingClass::non_simple();
    return std::nullopt;
}

namespace {

std::vector<std::vector<Rat>> hessian_at_zero(const Poly& f) {
    int s = f.nvars();
    std::vector<std::vector<Rat>> h(s, std::vector<Rat>(s, Rat(0)));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) h[i][j] = f.derivative(i).derivative(j).constant_term();
    return h;
}

int rat_rank(std::vector<std::vector<Rat>> a) {
    int rows = (int)a.size();
    if (rows == 0) return 0;
    int cols = (int)a[0].size(), rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat fac = a[r][c] / a[rank][c];
            for (int cc = c; cc < cols; ++cc) a[r][cc] -= fac * a[rank][cc];
        }
        ++rank;
    }
    return rank;
}

bool df_zero_at_origin(const Poly& f) {
    for (int v = 0; v < f.nvars(); ++v)
        if (f.derivative(v).constant_term() != 0) return false;
    return true;
}

} // namespace

int hessian_corank(const Poly& f) {
    if (f.constant_term() != 0) throw error("hessian corank needs f(0) = 0");
    if (!df_zero_at_origin(f)) throw error("hessian corank needs df(0) = 0");
    return f.nvars() - rat_rank(hessian_at_zero(f));
}

namespace {

// Substitution replacing one variable, identity on the rest.
PolyMap one_var_map(const VarList& vars, int v, const Poly& image) {
    std::vector<Poly> images;
    for (size_t i = 0; i < vars.size(); ++i)
        images.push_back((int)i == v ? image : Poly::variable(vars, (int)i));
    return PolyMap(VarList(vars), std::move(images));
}

// u-linear part of f with the u-free coefficient: f = ... + u * g(rest) + ...
Poly u_linear_coeff(const Poly& f, int u) {
    Poly g(f.vars());
    for (auto& [m, c] : f.terms()) {
        if (m.e[u] != 1) continue;
        Monomial m2 = m;
        m2.e[u] = 0;
        g.add_term(m2, c);
    }
    return g;
}

} // namespace

Poly residual_part(const Poly& f_in, int jet_degree) {
    if (f_in.constant_term() != 0) throw error("residual part needs f(0) = 0");
    if (!df_zero_at_origin(f_in)) throw error("residual part needs df(0) = 0");
    Poly f = f_in.truncate_total(jet_degree);
    const VarList& vars = f.vars();
    int s = f.nvars();
    std::vector<bool> used(s, false);

    while (true) {
        auto h = hessian_at_zero(f);
        int pivot = -1;
        for (int v = 0; v < s && pivot < 0; ++v)
            if (!used[v] && h[v][v] != 0) pivot = v;
        if (pivot < 0) {
            // look for an off-diagonal entry and rotate it onto the diagonal
            int a = -1, b = -1;
            for (int i = 0; i < s && a < 0; ++i)
                for (int j = i + 1; j < s; ++j)
                    if (!used[i] && !used[j] && h[i][j] != 0) { a = i; b = j; break; }
            if (a < 0) break;
            Poly img = Poly::variable(vars, a) + Poly::variable(vars, b);
            f = f.substitute(one_var_map(vars, a, img)).truncate_total(jet_degree);
            pivot = a;
        }
        Rat c2 = f.derivative(pivot).derivative(pivot).constant_term() / 2;
        // kill all terms linear in the pivot variable, raising their order
        for (int round = 0; round <= jet_degree + 1; ++round) {
            Poly g = u_linear_coeff(f, pivot);
            if (g.is_zero()) break;
            Poly img = Poly::variable(vars, pivot) - g * (1 / (2 * c2));
            f = f.substitute(one_var_map(vars, pivot, img)).truncate_total(jet_degree);
        }
        // the pivot variable now only occurs in its quadratic block
        f = f.substitute(one_var_map(vars, pivot, Poly(vars))).truncate_total(jet_degree);
        // re-add nothing: the square block is split off entirely
        used[pivot] = true;
        Poly sq = Poly::variable(vars, pivot) * Poly::variable(vars, pivot) * c2;
        (void)sq; // dropped: residual lives in the remaining variables
    }

    // restrict the roster to the surviving variables
    VarList keep_names;
    std::vector<int> keep_idx;
    for (int v = 0; v < s; ++v)
        if (!used[v]) {
            keep_idx.push_back(v);
            keep_names.push_back(vars[v]);
        }
    Poly out(keep_names);
    for (auto& [m, c] : f.terms()) {
        Monomial m2{std::vector<int>(keep_names.size(), 0)};
        bool fits = true;
        for (int v = 0; v < s && fits; ++v) {
            if (m.e[v] == 0) continue;
            auto it = std::find(keep_idx.begin(), keep_idx.end(), v);
            if (it == keep_idx.end()) fits = false;
            else m2.e[it - keep_idx.begin()] = m.e[v];
        }
        if (fits) out.add_term(m2, c);
        else throw error("residual still involves a split variable"); // unreachable
    }
    return out;
}

namespace {

// ----- binary form analysis --------------------------------------------------

// A binary form of degree d as coefficients c[i] of x^i y^(d-i).
struct BinaryForm {
    int d = 0;
    std::vector<Rat> c;
    bool zero() const {
        for (auto& v : c)
            if (v != 0) return false;
        return true;
    }
};

BinaryForm binary_form(const Poly& p, int degree) {
    if (p.nvars() != 2) throw error("binary form needs 2 variables");
    BinaryForm f;
    f.d = degree;
    f.c.assign(degree + 1, Rat(0));
    for (auto& [m, coef] : p.terms()) {
        if (m.total_degree() != degree) continue;
        f.c[m.e[0]] = coef;
    }
    return f;
}

std::vector<Rat> trim(std::vector<Rat> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    a = trim(a);
    while (a.size() >= b.size()) {
        Rat f = a.back() / b.back();
        for (size_t i = 0; i < b.size(); ++i)
            a[a.size() - b.size() + i] -= f * b[i];
        a = trim(a);
        if (a.empty()) break;
    }
    return a;
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
    a = trim(a);
    b = trim(b);
    while (!b.empty()) {
        auto r = poly_mod(a, b);
        a = b;
        b = r;
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& v : a) v /= lead;
    }
    return a;
}

// Degree of gcd of a list of binary forms (zero forms skipped), counting
// common powers of x and y as well as the finite part.
int binary_gcd_degree(const std::vector<BinaryForm>& forms) {
    int min_xpow = -1, min_ypow = -1;
    std::vector<std::vector<Rat>> finite;
    for (auto& f : forms) {
        if (f.zero()) continue;
        int lo = 0;
        while (f.c[lo] == 0) ++lo; // power of y ... careful: c[i] multiplies x^i
        int hi = f.d;
        while (f.c[hi] == 0) --hi;
        // x^lo divides, y^(d-hi) divides
        int xpow = lo, ypow = f.d - hi;
        min_xpow = min_xpow < 0 ? xpow : std::min(min_xpow, xpow);
        min_ypow = min_ypow < 0 ? ypow : std::min(min_ypow, ypow);
        finite.push_back(std::vector<Rat>(f.c.begin() + lo, f.c.begin() + hi + 1));
    }
    if (finite.empty()) return -1; // all zero
    std::vector<Rat> g = finite[0];
    for (size_t i = 1; i < finite.size(); ++i) g = poly_gcd(g, finite[i]);
    return min_xpow + min_ypow + (int)(g.empty() ? 0 : g.size() - 1);
}

BinaryForm partial_x(const BinaryForm& f) {
    BinaryForm g;
    g.d = f.d - 1;
    g.c.assign(f.d, Rat(0));
    for (int i = 1; i <= f.d; ++i) g.c[i - 1] = f.c[i] * i;
    return g;
}

BinaryForm partial_y(const BinaryForm& f) {
    BinaryForm g;
    g.d = f.d - 1;
    g.c.assign(f.d, Rat(0));
    for (int i = 0; i < f.d; ++i) g.c[i] = f.c[i] * (f.d - i);
    return g;
}

// gcd degree of {C, C_x, C_y}: 0 = squarefree, 1 = one double line,
// d-1 = a single line to full multiplicity.
int form_degeneracy(const BinaryForm& f) {
    return binary_gcd_degree({f, partial_x(f), partial_y(f)});
}

Poly degree_part(const Poly& p, int d) {
    Poly out(p.vars());
    for (auto& [m, c] : p.terms())
        if (m.total_degree() == d) out.add_term(m, c);
    return out;
}

// Strict Newton-data check for J10: after straightening the cubed line to
// the first axis, the (2,1)-weighted principal part must be exactly
// c*x^3 + a*x*y^4 + b*y^6 with b != 0 and -4a^3c - 27b^2c^2 != 0. Anything
// murkier (an x^2y^2 term, lower-weight terms, b = 0) returns NonSimple,
// which is the safe direction for a fencing cutoff.
bool j10_pattern(const Poly& residual) {
    const VarList& vars = residual.vars();
    Poly cubic = degree_part(residual, 3);
    BinaryForm c3 = binary_form(cubic, 3);
    // triple line l = x + beta*y or l = y; rational since the triple root is unique
    Poly r = residual;
    if (c3.c[3] != 0) {
        Rat beta = c3.c[2] / (3 * c3.c[3]);
        if (beta != 0) {
            Poly img = Poly::variable(vars, 0) - Poly::constant(vars, beta) * Poly::variable(vars, 1);
            r = residual.substitute(one_var_map(vars, 0, img));
        }
    } else {
        // cube line is y: swap the roles of x and y
        std::vector<Poly> images = {Poly::variable(vars, 1), Poly::variable(vars, 0)};
        r = residual.substitute(PolyMap(VarList(vars), std::move(images)));
    }
    std::vector<Rat> w = {Rat(2), Rat(1)};
    auto parts = weighted_decompose(r, w);
    if (parts.empty() || parts.front().first != 6) return false;
    const Poly& p6 = parts.front().second;
    Rat c = 0, a = 0, b = 0, e = 0;
    for (auto& [m, coef] : p6.terms()) {
        if (m.e[0] == 3 && m.e[1] == 0) c = coef;
        else if (m.e[0] == 1 && m.e[1] == 4) a = coef;
        else if (m.e[0] == 0 && m.e[1] == 6) b = coef;
        else if (m.e[0] == 2 && m.e[1] == 2) e = coef;
    }
    if (c == 0 || e != 0 || b == 0) return false;
    Rat disc = -4 * a * a * a * c - 27 * b * b * c * c;
    return disc != 0;
}

} // namespace

SingClass classify_function(const Poly& f) {
    if (f.constant_term() != 0) throw error("classify needs f(0) = 0");
    if (!df_zero_at_origin(f)) return SingClass::regular();

    MilnorNumber mu = milnor_number(f);
    if (!mu.finite)
        return SingClass::undetermined("milnor number not certified finite");
    int corank = hessian_corank(f);

    if (corank == 0) return SingClass::a(1);
    if (corank == 1) return SingClass::a(mu.value);

    int jet = (int)std::max<long>(mu.value + 2, 6);
    if (corank == 2) {
        Poly r = residual_part(f, jet);
        Poly cubic = degree_part(r, 3);
        if (!cubic.is_zero()) {
            int deg = form_degeneracy(binary_form(cubic, 3));
            if (deg == 0) {
                if (mu.value != 4) return SingClass::undetermined("distinct cubic but mu != 4");
                return SingClass::d(4);
            }
            if (deg == 1) {
                if (mu.value < 5) return SingClass::undetermined("double line but mu < 5");
                return SingClass::d(mu.value);
            }
            // perfect cube
            if (mu.value == 6) return SingClass::simple(SingClass::Tag::E6);
            if (mu.value == 7) return SingClass::simple(SingClass::Tag::E7);
            if (mu.value == 8) return SingClass::simple(SingClass::Tag::E8);
            if (mu.value == 10 && j10_pattern(r)) return SingClass::simple(SingClass::Tag::J10);
            return SingClass::non_simple();
        }
        Poly quartic = degree_part(r, 4);
        if (!quartic.is_zero() && form_degeneracy(binary_form(quartic, 4)) == 0) {
            if (mu.value != 9) return SingClass::undetermined("nondegenerate quartic but mu != 9");
            return SingClass::simple(SingClass::Tag::X9);
        }
        return SingClass::non_simple();
    }
    if (corank == 3) {
        Poly r = residual_part(f, jet);
        Poly cubic = degree_part(r, 3);
        if (!cubic.is_zero()) {
            // smooth projective cubic curve: the partials vanish only at 0
            std::vector<Poly> partials;
            for (int v = 0; v < 3; ++v) partials.push_back(cubic.derivative(v));
            bool nonzero = false;
            for (auto& p : partials)
                if (!p.is_zero()) nonzero = true;
            if (nonzero) {
                WeightSystem w;
                w.weights.assign(3, Rat(1));
                bool all_vanish = true;
                for (auto& p : partials)
                    if (p.constant_term() != 0) all_vanish = false;
                if (all_vanish) {
                    GradedQuotient q = ideal_codimension(partials, w, 24);
                    if (q.exactness == Exactness::Exact && q.finite) {
                        if (mu.value != 8)
                            return SingClass::undetermined("smooth cubic cone but mu != 8");
                        return SingClass::simple(SingClass::Tag::P8);
                    }
                }
            }
        }
        return SingClass::non_simple();
    }
    return SingClass::non_simple();
}

// ----- one-variable reductions ----------------------------------------------

namespace {

int x_order(const Poly& p) { return p.min_total_degree(); } // 1 variable; -1 if zero

// Truncated inverse of a unit u = c(1 + h), modulo x^(trunc+1).
Poly unit_inverse(const Poly& u, int trunc) {
    Rat c = u.constant_term();
    if (c == 0) throw error("unit inverse of a non-unit");
    Poly h = u * (1 / c) - Poly::constant(u.vars(), 1);
    Poly acc = Poly::constant(u.vars(), 1);
    Poly pw = Poly::constant(u.vars(), 1);
    for (int i = 1; i <= trunc; ++i) {
        pw = (pw * -h).truncate_total(trunc);
        if (pw.is_zero()) break;
        acc += pw;
    }
    return (acc * (1 / c)).truncate_total(trunc);
}

// Exact division by x^k (every term must have exponent >= k).
Poly shift_down(const Poly& p, int k) {
    Poly out(p.vars());
    for (auto& [m, c] : p.terms()) {
        if (m.e[0] < k) throw error("shift_down: term of too-low order");
        Monomial m2 = m;
        m2.e[0] -= k;
        out.add_term(m2, c);
    }
    return out;
}

struct WorkMat {
    PolyMatrix m;
    Kind kind;
    VarList vars;
    int n, trunc;
    std::vector<RowColOp>* ops;

    void apply(RowColOp op) {
        PolyMatrix g = poly_identity(vars, n);
        switch (op.type) {
            case RowColOp::Type::Transvection: g[op.i][op.j] = op.coeff; break;
            case RowColOp::Type::Scale: g[op.i][op.i] = op.coeff; break;
            case RowColOp::Type::Swap: {
                g[op.i][op.i] = Poly(vars);
                g[op.j][op.j] = Poly(vars);
                g[op.i][op.j] = Poly::constant(vars, 1);
                g[op.j][op.i] = Poly::constant(vars, 1);
                break;
            }
        }
        if (op.side == OpSide::Both || op.side == OpSide::Rows)
            m = poly_mat_mul(poly_mat_transpose(g), m);
        if (op.side == OpSide::Both || op.side == OpSide::Cols) m = poly_mat_mul(m, g);
        for (auto& row : m)
            for (auto& p : row) p = p.truncate_total(trunc);
        ops->push_back(std::move(op));
    }
};

} // namespace

Reduce1Result reduce_one_variable_sk(const MatrixFamily& fam, int trunc) {
    if (fam.kind() != Kind::Sk) throw error("reduce_one_variable_sk needs an sk family");
    if (fam.vars().size() != 1) throw error("reduce_one_variable_sk needs one variable");
    Reduce1Result res;
    WorkMat wm{fam.entries(), fam.kind(), fam.vars(), fam.size(), trunc, &res.ops};
    for (auto& row : wm.m)
        for (auto& p : row) p = p.truncate_total(trunc);
    int n = fam.size();

    for (int cur = 0; cur + 1 < n; cur += 2) {
        // minimal-order entry in the remaining block
        int bi = -1, bj = -1, best = trunc + 1;
        for (int i = cur; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int o = x_order(wm.m[i][j]);
                if (o >= 0 && o < best) { best = o; bi = i; bj = j; }
            }
        if (bi < 0) {
            res.status = Reduce1Result::Status::Undetermined;
            res.note = "remaining block vanishes modulo x^" + std::to_string(trunc + 1);
            return res;
        }
        if (bi != cur) wm.apply(RowColOp::swap(cur, bi));
        if (bj == cur) bj = bi; // the partner moved with the swap
        if (bj != cur + 1) wm.apply(RowColOp::swap(cur + 1, bj));
        int a = x_order(wm.m[cur][cur + 1]);
        // normalize the pivot to exactly x^a
        Poly unit = shift_down(wm.m[cur][cur + 1], a);
        Poly inv = unit_inverse(unit, trunc);
        wm.apply(RowColOp::scale(cur, inv));
        // clear the two pivot rows/columns
        for (int r = cur + 2; r < n; ++r) {
            Poly top = wm.m[cur][r];
            if (!top.is_zero()) wm.apply(RowColOp::transvection(cur + 1, r, -shift_down(top, a)));
            Poly second = wm.m[cur + 1][r];
            if (!second.is_zero()) wm.apply(RowColOp::transvection(cur, r, shift_down(second, a)));
        }
        res.orders.push_back(a);
    }
    return res;
}

Reduce1Result reduce_one_variable_sq(const MatrixFamily& fam, int trunc) {
    if (fam.kind() != Kind::Sq) throw error("reduce_one_variable_sq needs an sq family");
    if (fam.vars().size() != 1) throw error("reduce_one_variable_sq needs one variable");
    Reduce1Result res;
    WorkMat wm{fam.entries(), fam.kind(), fam.vars(), fam.size(), trunc, &res.ops};
    for (auto& row : wm.m)
        for (auto& p : row) p = p.truncate_total(trunc);
    int n = fam.size();

    for (int cur = 0; cur < n; ++cur) {
        int bi = -1, bj = -1, best = trunc + 1;
        for (int i = cur; i < n; ++i)
            for (int j = cur; j < n; ++j) {
                int o = x_order(wm.m[i][j]);
                if (o >= 0 && o < best) { best = o; bi = i; bj = j; }
            }
        if (bi < 0) {
            res.status = Reduce1Result::Status::Undetermined;
            res.note = "remaining block vanishes modulo x^" + std::to_string(trunc + 1);
            return res;
        }
        if (bi != cur) wm.apply(RowColOp::swap(cur, bi, OpSide::Rows));
        if (bj != cur) wm.apply(RowColOp::swap(cur, bj, OpSide::Cols));
        int a = x_order(wm.m[cur][cur]);
        Poly inv = unit_inverse(shift_down(wm.m[cur][cur], a), trunc);
        wm.apply(RowColOp::scale(cur, inv, OpSide::Rows));
        for (int r = cur + 1; r < n; ++r) {
            Poly below = wm.m[r][cur];
            if (!below.is_zero())
                wm.apply(RowColOp::transvection(cur, r, -shift_down(below, a), OpSide::Rows));
            Poly right = wm.m[cur][r];
            if (!right.is_zero())
                wm.apply(RowColOp::transvection(cur, r, -shift_down(right, a), OpSide::Cols));
        }
        res.orders.push_back(a);
    }
    std::sort(res.orders.begin(), res.orders.end());
    return res;
}

std::vector<ConstMatrix> perp(const std::vector<ConstMatrix>& span, int n) {
    std::vector<std::pair<int, int>> comps;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) comps.emplace_back(i, j);
    int nc = (int)comps.size();
    for (auto& x : span) {
        if ((int)x.size() != n) throw error("perp: matrix size mismatch");
        for (int i = 0; i < n; ++i) {
            if (x[i][i] != 0) throw error("perp: matrix not skew");
            for (int j = 0; j < n; ++j)
                if (x[i][j] != -x[j][i]) throw error("perp: matrix not skew");
        }
    }
    // tr(X * Ehat_kl) = -2 X_kl, so the pairing matrix rows are the
    // component vectors of the span elements (up to the factor -2).
    std::vector<std::vector<Rat>> rows;
    for (auto& x : span) {
        std::vector<Rat> row(nc);
        for (int c = 0; c < nc; ++c) row[c] = x[comps[c].first][comps[c].second];
        rows.push_back(std::move(row));
    }
    // nullspace by rref
    int rank = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < nc && rank < (int)rows.size(); ++c) {
        int piv = -1;
        for (int r = rank; r < (int)rows.size(); ++r)
            if (rows[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        Rat lead = rows[rank][c];
        for (auto& v : rows[rank]) v /= lead;
        for (int r = 0; r < (int)rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rat f = rows[r][c];
            for (int cc = 0; cc < nc; ++cc) rows[r][cc] -= f * rows[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<ConstMatrix> basis;
    for (int c = 0; c < nc; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) != pivot_col.end()) continue;
        std::vector<Rat> y(nc, Rat(0));
        y[c] = 1;
        for (int r = 0; r < rank; ++r) y[pivot_col[r]] = -rows[r][c];
        ConstMatrix m(n, std::vector<Rat>(n, Rat(0)));
        for (int cc = 0; cc < nc; ++cc) {
            m[comps[cc].first][comps[cc].second] = y[cc];
            m[comps[cc].second][comps[cc].first] = -y[cc];
        }
        basis.push_back(std::move(m));
    }
    return basis;
}

DimVerdict simple_dimension_cases(int s, int k, int r) {
    if (k < 1 || s < 0) throw error("dims: need k >= 1 and s >= 0");
    long n = (long)k * (2 * k - 1);
    if (r < 0 || r > std::min<long>(s, n)) throw error("dims: r out of range [0, min(s, N)]");
    DimVerdict v;
    v.inequality_holds = (long)r * (n - r) <= 4L * k * k - 1;

    std::ostringstream rule;
    if (s == 1 && (r == 0 || r == 1)) {
        v.allowed = true;
        rule << "case a: s=1, r in {0,1}, any k";
    } else if (k >= 3 && s >= n - 1 && (r == n || r == n - 1)) {
        v.allowed = true;
        rule << "case b: s >= N-1, r in {N-1, N}, k >= 3";
    } else if (k == 3 && s == 2 && r <= 2) {
        v.allowed = true;
        rule << "case c: k=3, s=2 >= r";
    } else if (k == 3 && r == 13 && s >= 13) {
        v.allowed = true;
        rule << "case d: k=3, r=13 <= s";
        if (s > 13) rule << "; refined: no simple rank-13 families exist for s > 13";
    } else if (k == 2 && s >= 2) {
        v.allowed = true;
        rule << "case e: k=2, s >= 2";
    } else if (k == 1) {
        v.allowed = true;
        rule << "size 2: equivalent to contact equivalence of the pfaffian function";
    } else {
        v.allowed = false;
        rule << "no allowed dimension triplet covers (s,k,r)";
    }
    v.rule = rule.str();
    return v;
}

} // namespace mg
