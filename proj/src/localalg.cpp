#include "matgerm/localalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mg {

std::string GradedQuotient::exactness_str() const {
    switch (exactness) {
        case Exactness::Exact: return "EXACT";
        case Exactness::Truncated: return "TRUNCATED(" + truncated_at.get_str() + ")";
        case Exactness::Undetermined: return "UNDETERMINED(" + truncated_at.get_str() + ")";
    }
    return "?";
}

namespace {

// ----- exact sparse row reduction ------------------------------------------
//
// Columns are pre-assigned integer ids in pivot-priority order. Incoming
// rows are reduced against the stored pivots; a surviving row is normalized
// and becomes a new pivot at its leading id.

struct SparseRow {
    std::vector<std::pair<int, Rat>> nz; // sorted by column id
};

SparseRow axpy(const SparseRow& r, const Rat& s, const SparseRow& p) {
    // r + s*p
    SparseRow out;
    out.nz.reserve(r.nz.size() + p.nz.size());
    size_t i = 0, j = 0;
    while (i < r.nz.size() || j < p.nz.size()) {
        if (j == p.nz.size() || (i < r.nz.size() && r.nz[i].first < p.nz[j].first)) {
            out.nz.push_back(r.nz[i++]);
        } else if (i == r.nz.size() || p.nz[j].first < r.nz[i].first) {
            Rat v = s * p.nz[j].second;
            if (v != 0) out.nz.emplace_back(p.nz[j].first, v);
            ++j;
        } else {
            Rat v = r.nz[i].second + s * p.nz[j].second;
            if (v != 0) out.nz.emplace_back(r.nz[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

class Eliminator {
public:
    // Returns the pivot id claimed by this row, or -1 if it reduced to zero.
    int add_row(SparseRow row) {
        while (!row.nz.empty()) {
            int lead = row.nz.front().first;
            auto it = pivots_.find(lead);
            if (it == pivots_.end()) {
                Rat inv = 1 / row.nz.front().second;
                for (auto& [c, v] : row.nz) v *= inv;
                pivots_.emplace(lead, std::move(row));
                return lead;
            }
            row = axpy(row, -row.nz.front().second, it->second);
        }
        return -1;
    }
    bool has_pivot(int col) const { return pivots_.count(col) != 0; }
    size_t rank() const { return pivots_.size(); }

private:
    std::map<int, SparseRow> pivots_;
};

// ----- degree bookkeeping ----------------------------------------------------

long lcm_long(long a, long b) {
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), mpz_class(a).get_mpz_t(), (unsigned long)b);
    return a / g.get_si() * b;
}

struct Grading {
    std::vector<long> w;     // scaled positive integer weights
    std::vector<long> shift; // scaled component degrees d_c
    long scale = 1;

    long mono_degree(const Monomial& m) const {
        long d = 0;
        for (size_t i = 0; i < w.size(); ++i) d += w[i] * m.e[i];
        return d;
    }
    long vec_degree(const Monomial& m, int comp) const { return mono_degree(m) - shift[comp]; }
};

Grading make_grading(const ModuleGeneratorSet& t, const WeightSystem& ws) {
    int s = (int)t.vars.size();
    if ((int)ws.weights.size() != s) throw error("weight count does not match roster");
    for (auto& w : ws.weights)
        if (w <= 0) throw error("weights must be positive");
    std::vector<Rat> shifts = t.comp_degree;
    if (shifts.empty()) shifts.assign(t.ambient_rank, Rat(0));
    if ((int)shifts.size() != t.ambient_rank) throw error("component degree count mismatch");

    long denom = 1;
    for (auto& w : ws.weights) denom = lcm_long(denom, w.get_den().get_si());
    for (auto& d : shifts) denom = lcm_long(denom, d.get_den().get_si());

    Grading g;
    g.scale = denom;
    for (auto& w : ws.weights) g.w.push_back(to_long(Rat(w * denom)));
    for (auto& d : shifts) g.shift.push_back(to_long(Rat(d * denom)));
    return g;
}

// Per-generator graded degree; nullopt if the generator is not homogeneous.
std::optional<long> generator_degree(const std::vector<Poly>& gen, const Grading& g) {
    std::optional<long> deg;
    for (int c = 0; c < (int)gen.size(); ++c) {
        for (auto& [m, coef] : gen[c].terms()) {
            long d = g.vec_degree(m, c);
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
    }
    return deg ? deg : std::optional<long>(0); // zero generator: degree irrelevant
}

void enumerate_monomials(const std::vector<long>& w, long target, int var, Monomial& cur,
                         std::vector<Monomial>& out) {
    if (var == (int)w.size()) {
        if (target == 0) out.push_back(cur);
        return;
    }
    if (var == (int)w.size() - 1) {
        if (target >= 0 && target % w[var] == 0) {
            cur.e[var] = (int)(target / w[var]);
            out.push_back(cur);
            cur.e[var] = 0;
        }
        return;
    }
    for (long k = 0; k * w[var] <= target; ++k) {
        cur.e[var] = (int)k;
        enumerate_monomials(w, target - k * w[var], var + 1, cur, out);
    }
    cur.e[var] = 0;
}

std::vector<Monomial> monomials_of_degree(const std::vector<long>& w, long target) {
    std::vector<Monomial> out;
    if (target < 0) return out;
    Monomial cur{std::vector<int>(w.size(), 0)};
    enumerate_monomials(w, target, 0, cur, out);
    return out;
}

// Column priority: descending graded-lex monomial, then descending component.
// Pivots then consume the highest monomial-vectors first, so the surviving
// quotient basis consists of the lowest ones (the local-ring convention; it
// is what makes the basis of L_a come out as the constant patterns E14, E25).
struct ColKey {
    long deg;
    Monomial mono;
    int comp;
};

bool col_priority_less(const ColKey& a, const ColKey& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    GrlexLess less;
    if (less(a.mono, b.mono)) return false;
    if (less(b.mono, a.mono)) return true;
    return a.comp > b.comp;
}

struct SliceResult {
    long quotient_dim = 0;
    std::vector<QuotientBasisElem> basis;
};

// One graded slice: exact rank of the degree-e part of T inside the
// degree-e part of O^N.
SliceResult graded_slice(const ModuleGeneratorSet& t, const Grading& g,
                         const std::vector<std::pair<int, long>>& gen_degrees, long e) {
    std::vector<ColKey> cols;
    for (int c = 0; c < t.ambient_rank; ++c) {
        long m = e + g.shift[c];
        for (auto& mono : monomials_of_degree(g.w, m)) cols.push_back({e, mono, c});
    }
    SliceResult res;
    if (cols.empty()) return res;
    std::sort(cols.begin(), cols.end(), col_priority_less);
    std::map<std::pair<std::vector<int>, int>, int> col_id;
    for (int i = 0; i < (int)cols.size(); ++i) col_id[{cols[i].mono.e, cols[i].comp}] = i;

    Eliminator elim;
    for (auto& [gi, hdeg] : gen_degrees) {
        const auto& gen = t.gens[gi];
        for (auto& beta : monomials_of_degree(g.w, e - hdeg)) {
            SparseRow row;
            for (int c = 0; c < t.ambient_rank; ++c) {
                for (auto& [m, coef] : gen[c].terms()) {
                    Monomial prod = m;
                    for (size_t v = 0; v < prod.e.size(); ++v) prod.e[v] += beta.e[v];
                    row.nz.emplace_back(col_id.at({prod.e, c}), coef);
                }
            }
            std::sort(row.nz.begin(), row.nz.end(),
                      [](auto& x, auto& y) { return x.first < y.first; });
            elim.add_row(std::move(row));
        }
    }
    res.quotient_dim = (long)cols.size() - (long)elim.rank();
    for (int i = 0; i < (int)cols.size(); ++i)
        if (!elim.has_pivot(i))
            res.basis.push_back({cols[i].mono, cols[i].comp, Rat(e, g.scale)});
    return res;
}

GradedQuotient run_graded(const ModuleGeneratorSet& t, const Grading& g,
                          const std::vector<std::pair<int, long>>& gen_degrees,
                          long max_deg_scaled) {
    GradedQuotient out;
    long max_w = *std::max_element(g.w.begin(), g.w.end());
    long e_min = 0, bare_max = 0;
    for (long s : g.shift) {
        e_min = std::min(e_min, -s);
        bare_max = std::max(bare_max, -s);
    }

    // Stabilization: once every slice in (d, d+max_w] is zero and every bare
    // component vector e_c lies at degree <= d+max_w, each higher
    // monomial-vector is a variable multiple of a covered one, so the
    // quotient vanishes in all higher degrees.
    long last_nonzero = e_min - 1;
    for (long e = e_min; e <= max_deg_scaled; ++e) {
        SliceResult slice = graded_slice(t, g, gen_degrees, e);
        if (slice.quotient_dim > 0) {
            last_nonzero = e;
            out.codim += slice.quotient_dim;
            out.slices.emplace_back(Rat(e, g.scale), slice.quotient_dim);
            for (auto& b : slice.basis) out.basis.push_back(b);
        }
        if (e - last_nonzero >= max_w && e >= bare_max) {
            out.exactness = Exactness::Exact;
            out.stabilized_at = Rat(last_nonzero, g.scale);
            out.finite = true;
            return out;
        }
    }
    out.finite = false;
    out.exactness = Exactness::Undetermined;
    out.truncated_at = Rat(max_deg_scaled, g.scale);
    out.note = "quotient window still open at degree " + Rat(last_nonzero, g.scale).get_str();
    return out;
}

// Filtration mode for inhomogeneous generators: computes
// c(e) = dim O^N / (T + F^{e+1}) for the order filtration F. A window of
// width max_i w_i on which c is constant certifies c = codim T (Nakayama
// plus the Krull intersection theorem), so EXACT answers are still possible.
GradedQuotient run_filtered(const ModuleGeneratorSet& t, const Grading& g, long max_deg_scaled) {
    GradedQuotient out;
    long max_w = *std::max_element(g.w.begin(), g.w.end());

    std::vector<ColKey> cols;
    long e_min = 0;
    for (long s : g.shift) e_min = std::min(e_min, -s);
    for (int c = 0; c < t.ambient_rank; ++c) {
        for (long m = 0; m + 0 <= max_deg_scaled + g.shift[c]; ++m) {
            for (auto& mono : monomials_of_degree(g.w, m))
                cols.push_back({m - g.shift[c], mono, c});
        }
    }
    std::sort(cols.begin(), cols.end(), col_priority_less);
    std::map<std::pair<std::vector<int>, int>, int> col_id;
    for (int i = 0; i < (int)cols.size(); ++i) col_id[{cols[i].mono.e, cols[i].comp}] = i;

    // Least vector-degree of each generator bounds the multipliers needed.
    Eliminator elim;
    std::vector<bool> row_seen;
    for (auto& gen : t.gens) {
        std::optional<long> ord;
        for (int c = 0; c < t.ambient_rank; ++c)
            for (auto& [m, coef] : gen[c].terms()) {
                long d = g.vec_degree(m, c);
                if (!ord || d < *ord) ord = d;
            }
        if (!ord) continue;
        for (long bdeg = 0; bdeg + *ord <= max_deg_scaled; ++bdeg) {
            for (auto& beta : monomials_of_degree(g.w, bdeg)) {
                SparseRow row;
                for (int c = 0; c < t.ambient_rank; ++c) {
                    for (auto& [m, coef] : gen[c].terms()) {
                        Monomial prod = m;
                        for (size_t v = 0; v < prod.e.size(); ++v) prod.e[v] += beta.e[v];
                        long d = g.mono_degree(prod) - g.shift[c];
                        if (d > max_deg_scaled) continue; // projection past the cutoff
                        row.nz.emplace_back(col_id.at({prod.e, c}), coef);
                    }
                }
                std::sort(row.nz.begin(), row.nz.end(),
                          [](auto& x, auto& y) { return x.first < y.first; });
                elim.add_row(std::move(row));
            }
        }
    }

    // Cumulative codimension per degree, read off the echelon pivots.
    std::map<long, long> quotient_per_degree;
    std::vector<int> free_cols;
    for (int i = 0; i < (int)cols.size(); ++i) {
        if (!elim.has_pivot(i)) {
            quotient_per_degree[cols[i].deg]++;
            free_cols.push_back(i);
        }
    }
    // first_tail: last degree contributing new quotient elements. A constant
    // window of width max_w above it certifies the codimension (Nakayama and
    // the Krull intersection theorem); the bare component vectors must have
    // been inside the scanned range.
    long bare_max = 0;
    for (long s : g.shift) bare_max = std::max(bare_max, -s);
    long first_tail = e_min - 1;
    for (auto& [d, n] : quotient_per_degree) first_tail = std::max(first_tail, d);
    bool certified = (max_deg_scaled - first_tail) >= max_w && max_deg_scaled >= bare_max;

    for (auto& [d, n] : quotient_per_degree) out.slices.emplace_back(Rat(d, g.scale), n);
    if (certified) {
        out.exactness = Exactness::Exact;
        out.finite = true;
        out.stabilized_at = Rat(first_tail, g.scale);
        for (int i : free_cols) {
            if (cols[i].deg <= first_tail)
                out.basis.push_back({cols[i].mono, cols[i].comp, Rat(cols[i].deg, g.scale)});
        }
        out.codim = (long)out.basis.size();
        out.note = "certified through the order filtration";
    } else {
        out.exactness = Exactness::Truncated;
        out.finite = true; // finite-by-truncation; see note
        out.truncated_at = Rat(max_deg_scaled, g.scale);
        for (int i : free_cols)
            out.basis.push_back({cols[i].mono, cols[i].comp, Rat(cols[i].deg, g.scale)});
        out.codim = (long)out.basis.size();
        out.note = "codimension of T + F^(>cutoff); window still open";
    }
    return out;
}

} // namespace

GradedQuotient graded_codimension(const ModuleGeneratorSet& t, const WeightSystem& ws,
                                  const Rat& max_degree) {
    if (t.ambient_rank <= 0) throw error("ambient rank must be positive");
    for (auto& gen : t.gens)
        if ((int)gen.size() != t.ambient_rank)
            throw error("generator vector length does not match ambient rank");
    Grading g = make_grading(t, ws);
    long max_deg_scaled = to_long(Rat(max_degree * g.scale));

    std::vector<std::pair<int, long>> gen_degrees;
    bool homogeneous = true;
    for (int i = 0; i < (int)t.gens.size(); ++i) {
        auto d = generator_degree(t.gens[i], g);
        if (!d) {
            homogeneous = false;
            break;
        }
        bool zero = true;
        for (auto& p : t.gens[i])
            if (!p.is_zero()) zero = false;
        if (!zero) gen_degrees.emplace_back(i, *d);
    }
    if (homogeneous) return run_graded(t, g, gen_degrees, max_deg_scaled);
    return run_filtered(t, g, max_deg_scaled);
}

GradedQuotient ideal_codimension(const std::vector<Poly>& gens, const WeightSystem& ws,
                                 const Rat& max_degree) {
    if (gens.empty()) throw error("ideal needs at least one generator");
    for (auto& p : gens)
        if (p.constant_term() != 0) throw error("ideal generators must vanish at 0");
    ModuleGeneratorSet t;
    t.ambient_rank = 1;
    t.vars = gens[0].vars();
    for (auto& p : gens) t.gens.push_back({p});
    return graded_codimension(t, ws, max_degree);
}

MilnorNumber milnor_number(const Poly& f, const Rat& max_degree) {
    if (f.constant_term() != 0) throw error("milnor number needs f(0) = 0");
    std::vector<Poly> jac;
    bool all_zero = true;
    for (int v = 0; v < f.nvars(); ++v) {
        jac.push_back(f.derivative(v));
        if (!jac.back().is_zero()) all_zero = false;
    }
    if (all_zero || f.nvars() == 0) return {false, 0};
    WeightSystem ws;
    ws.weights.assign(f.nvars(), Rat(1));
    GradedQuotient q = ideal_codimension(jac, ws, max_degree);
    if (q.exactness == Exactness::Exact) return {true, q.codim};
    return {false, q.codim};
}

} // namespace mg
