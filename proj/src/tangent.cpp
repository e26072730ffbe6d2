#include "matgerm/tangent.hpp"

#include <algorithm>

namespace mg {

std::vector<std::pair<int, int>> independent_components(Kind kind, int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (kind == Kind::Sym && j < i) continue;
            if (kind == Kind::Sk && j <= i) continue;
            out.emplace_back(i, j);
        }
    return out;
}

int ambient_rank(Kind kind, int n) {
    switch (kind) {
        case Kind::Sq: return n * n;
        case Kind::Sym: return n * (n + 1) / 2;
        case Kind::Sk: return n * (n - 1) / 2;
    }
    return 0;
}

namespace {

std::vector<Poly> flatten(const PolyMatrix& g, Kind kind, int n,
                          const std::vector<std::pair<int, int>>& comps) {
    std::vector<Poly> v;
    v.reserve(comps.size());
    for (auto& [i, j] : comps) v.push_back(g[i][j]);
    (void)kind;
    (void)n;
    return v;
}

// E_jl * M: row l of M placed in row j.
PolyMatrix left_unit_mul(const MatrixFamily& m, int j, int l) {
    int n = m.size();
    PolyMatrix g(n, std::vector<Poly>(n, Poly(m.vars())));
    for (int q = 0; q < n; ++q) g[j][q] = m.at(l, q);
    return g;
}

// M * E_pq: column p of M placed in column q.
PolyMatrix right_unit_mul(const MatrixFamily& m, int p, int q) {
    int n = m.size();
    PolyMatrix g(n, std::vector<Poly>(n, Poly(m.vars())));
    for (int i = 0; i < n; ++i) g[i][q] = m.at(i, p);
    return g;
}

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) r[i][j] = a[i][j] + b[i][j];
    return r;
}

} // namespace

ModuleGeneratorSet tangent_generators(const MatrixFamily& m) {
    int n = m.size();
    auto comps = independent_components(m.kind(), n);
    ModuleGeneratorSet t;
    t.ambient_rank = (int)comps.size();
    t.vars = m.vars();

    for (int v = 0; v < (int)m.vars().size(); ++v) {
        PolyMatrix d(n, std::vector<Poly>(n, Poly(m.vars())));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) d[i][j] = m.at(i, j).derivative(v);
        t.gens.push_back(flatten(d, m.kind(), n, comps));
    }
    if (m.kind() == Kind::Sq) {
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l)
                t.gens.push_back(flatten(left_unit_mul(m, j, l), m.kind(), n, comps));
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                t.gens.push_back(flatten(right_unit_mul(m, p, q), m.kind(), n, comps));
    } else {
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                PolyMatrix g = mat_add(left_unit_mul(m, j, l), right_unit_mul(m, l, j));
                t.gens.push_back(flatten(g, m.kind(), n, comps));
            }
    }
    return t;
}

GradedQuotient tjurina(const MatrixFamily& m, const WeightSystem& w, const Rat& max_degree) {
    ModuleGeneratorSet t = tangent_generators(m);
    auto comps = independent_components(m.kind(), m.size());
    if ((int)w.row_deg.size() != m.size() || (int)w.col_deg.size() != m.size())
        throw error("weight system row/col degrees do not match the family size");
    for (auto& [i, j] : comps) t.comp_degree.push_back(w.row_deg[i] + w.col_deg[j]);
    return graded_codimension(t, w, max_degree);
}

GradedQuotient tjurina_auto(const MatrixFamily& m, const Rat& max_degree) {
    if (auto w = find_weights(m)) return tjurina(m, *w, max_degree);
    WeightSystem w;
    w.weights.assign(m.vars().size(), Rat(1));
    w.row_deg.assign(m.size(), Rat(0));
    w.col_deg.assign(m.size(), Rat(0));
    return tjurina(m, w, max_degree);
}

MatrixFamily direction_pattern(const MatrixFamily& m, const QuotientBasisElem& b) {
    auto comps = independent_components(m.kind(), m.size());
    auto [i, j] = comps.at(b.comp);
    Poly mono(m.vars());
    mono.add_term(b.mono, 1);
    int n = m.size();
    PolyMatrix g(n, std::vector<Poly>(n, Poly(m.vars())));
    g[i][j] = mono;
    if (m.kind() == Kind::Sym && i != j) g[j][i] = mono;
    if (m.kind() == Kind::Sk) g[j][i] = -mono;
    return MatrixFamily(m.kind(), std::move(g), m.vars());
}

MatrixFamily MiniversalDeformation::total_family() const {
    VarList ext = base.vars();
    for (auto& p : parameter_names) ext.push_back(p);
    MatrixFamily lifted = [&] {
        PolyMatrix g(base.size(), std::vector<Poly>(base.size(), Poly(ext)));
        for (int i = 0; i < base.size(); ++i)
            for (int j = 0; j < base.size(); ++j) {
                Poly p(ext);
                for (auto& [mono, c] : base.at(i, j).terms()) {
                    Monomial m2 = mono;
                    m2.e.resize(ext.size(), 0);
                    p.add_term(m2, c);
                }
                g[i][j] = p;
            }
        return MatrixFamily(base.kind(), std::move(g), ext);
    }();
    PolyMatrix acc = lifted.entries();
    auto comps = independent_components(base.kind(), base.size());
    for (size_t d = 0; d < directions.size(); ++d) {
        auto [i, j] = comps.at(directions[d].comp);
        Monomial m2 = directions[d].mono;
        m2.e.resize(ext.size(), 0);
        m2.e[base.vars().size() + d] = 1;
        Poly term(ext);
        term.add_term(m2, 1);
        acc[i][j] = acc[i][j] + term;
        if (base.kind() == Kind::Sym && i != j) acc[j][i] = acc[j][i] + term;
        if (base.kind() == Kind::Sk) acc[j][i] = acc[j][i] - term;
    }
    return MatrixFamily(base.kind(), std::move(acc), ext);
}

MiniversalDeformation miniversal(const MatrixFamily& m, const GradedQuotient& q) {
    if (q.exactness != Exactness::Exact)
        throw error("miniversal deformation needs an EXACT tjurina result");
    if (!q.finite) throw error("miniversal deformation needs finite tjurina number");
    MiniversalDeformation out{m, q.basis, {}};
    for (size_t i = 0; i < q.basis.size(); ++i) {
        std::string name = "lam" + std::to_string(i + 1);
        // collision avoidance against the family roster
        while (std::find(m.vars().begin(), m.vars().end(), name) != m.vars().end())
            name += "_p";
        out.parameter_names.push_back(name);
    }
    return out;
}

} // namespace mg
