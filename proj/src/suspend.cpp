#include "matgerm/suspend.hpp"

#include "matgerm/tangent.hpp"

#include <algorithm>
#include <sstream>

namespace mg {

std::string suspension_name(SuspensionKind k) {
    switch (k) {
        case SuspensionKind::SqToSk_Trivial: return "trivial";
        case SuspensionKind::SqToSk_Full: return "full";
        case SuspensionKind::SqToSk_Intermediate: return "intermediate";
        case SuspensionKind::SymToSq_Trivial: return "sym-trivial";
        case SuspensionKind::SymToSq_Full: return "sym-full";
    }
    return "?";
}

std::optional<SuspensionKind> suspension_from_name(const std::string& name) {
    if (name == "trivial") return SuspensionKind::SqToSk_Trivial;
    if (name == "full") return SuspensionKind::SqToSk_Full;
    if (name == "intermediate") return SuspensionKind::SqToSk_Intermediate;
    if (name == "sym-trivial") return SuspensionKind::SymToSq_Trivial;
    if (name == "sym-full") return SuspensionKind::SymToSq_Full;
    return std::nullopt;
}

namespace {

std::string fresh_name(std::string base, const VarList& used) {
    while (std::find(used.begin(), used.end(), base) != used.end()) base += "_";
    return base;
}

// 0 / M / -M^T / 0 block placement over the (possibly extended) roster.
PolyMatrix trivial_blocks(const MatrixFamily& src, const VarList& ext) {
    int k = src.size(), n = 2 * k;
    PolyMatrix g(n, std::vector<Poly>(n, Poly(ext)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Poly p = extend_roster(src.at(i, j), ext);
            g[i][k + j] = p;
            g[k + j][i] = -p;
        }
    return g;
}

} // namespace

MatrixFamily suspend(const MatrixFamily& src, SuspensionKind kind) {
    int k = src.size();
    switch (kind) {
        case SuspensionKind::SqToSk_Trivial: {
            if (src.kind() != Kind::Sq) throw error("trivial suspension needs an sq source");
            return MatrixFamily(Kind::Sk, trivial_blocks(src, src.vars()), src.vars());
        }
        case SuspensionKind::SqToSk_Full: {
            if (src.kind() != Kind::Sq) throw error("full suspension needs an sq source");
            VarList ext = src.vars();
            std::vector<std::pair<int, int>> slots;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
            std::vector<int> vidx, widx;
            for (auto& [i, j] : slots) {
                std::string nm =
                    fresh_name("v" + std::to_string(i + 1) + std::to_string(j + 1), ext);
                vidx.push_back((int)ext.size());
                ext.push_back(nm);
            }
            for (auto& [i, j] : slots) {
                std::string nm =
                    fresh_name("w" + std::to_string(i + 1) + std::to_string(j + 1), ext);
                widx.push_back((int)ext.size());
                ext.push_back(nm);
            }
            PolyMatrix g = trivial_blocks(src, ext);
            for (size_t t = 0; t < slots.size(); ++t) {
                auto [i, j] = slots[t];
                Poly v = Poly::variable(ext, vidx[t]);
                Poly w = Poly::variable(ext, widx[t]);
                g[i][j] = v;
                g[j][i] = -v;
                g[k + i][k + j] = w;
                g[k + j][k + i] = -w;
            }
            return MatrixFamily(Kind::Sk, std::move(g), ext);
        }
        case SuspensionKind::SqToSk_Intermediate: {
            if (src.kind() != Kind::Sq) throw error("intermediate suspension needs an sq source");
            if (k != 2) throw error("intermediate suspension is defined for 2x2 sources only");
            VarList ext = src.vars();
            std::string nm = fresh_name("z", ext);
            int zi = (int)ext.size();
            ext.push_back(nm);
            PolyMatrix g = trivial_blocks(src, ext);
            Poly z = Poly::variable(ext, zi);
            g[0][1] = g[0][1] + z;
            g[1][0] = g[1][0] - z;
            g[2][3] = g[2][3] + z;
            g[3][2] = g[3][2] - z;
            return MatrixFamily(Kind::Sk, std::move(g), ext);
        }
        case SuspensionKind::SymToSq_Trivial: {
            if (src.kind() != Kind::Sym) throw error("sym-trivial suspension needs a sym source");
            return src.with_kind(Kind::Sq);
        }
        case SuspensionKind::SymToSq_Full: {
            if (src.kind() != Kind::Sym) throw error("sym-full suspension needs a sym source");
            VarList ext = src.vars();
            std::vector<std::pair<int, int>> slots;
            std::vector<int> vidx;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) slots.emplace_back(i, j);
            for (auto& [i, j] : slots) {
                std::string nm =
                    fresh_name("v" + std::to_string(i + 1) + std::to_string(j + 1), ext);
                vidx.push_back((int)ext.size());
                ext.push_back(nm);
            }
            PolyMatrix g(k, std::vector<Poly>(k, Poly(ext)));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) g[i][j] = extend_roster(src.at(i, j), ext);
            for (size_t t = 0; t < slots.size(); ++t) {
                auto [i, j] = slots[t];
                Poly v = Poly::variable(ext, vidx[t]);
                g[i][j] = g[i][j] + v;
                g[j][i] = g[j][i] - v;
            }
            return MatrixFamily(Kind::Sq, std::move(g), ext);
        }
    }
    throw error("unknown suspension kind");
}

std::string TauRelationReport::str() const {
    std::ostringstream out;
    out << "suspension: " << suspension_name(kind) << "\n";
    out << "k: " << k << "\n";
    out << "s_source: " << s_source << "\n";
    out << "s_suspension: " << s_susp << "\n";
    out << "tau_source: " << tau_source << "\n";
    out << "tau_suspension: " << tau_susp << "\n";
    if (kappa) out << "kappa: " << *kappa << "\n";
    out << "relation: " << relation << "\n";
    if (expected) out << "expected: " << *expected << "\n";
    out << "verdict: "
        << (verdict == Verdict::Pass ? "PASS"
                                     : verdict == Verdict::Fail ? "FAIL" : "NO_PREDICTION")
        << "\n";
    return out.str();
}

TauRelationReport tau_relation_report(const MatrixFamily& src, SuspensionKind kind,
                                      const Rat& max_degree) {
    TauRelationReport rep;
    rep.kind = kind;
    rep.k = src.size();
    rep.s_source = (int)src.vars().size();

    auto ws = find_weights(src);
    if (!ws) throw error("tau relation report needs a quasi-homogeneous source");
    GradedQuotient qs = tjurina(src, *ws, max_degree);
    if (!qs.finite || qs.exactness != Exactness::Exact)
        throw error("source tjurina number is not finite/EXACT");
    rep.tau_source = qs.codim;

    MatrixFamily susp = suspend(src, kind);
    rep.s_susp = (int)susp.vars().size();
    GradedQuotient qk = tjurina_auto(susp, max_degree);
    if (!qk.finite || qk.exactness != Exactness::Exact)
        throw error("suspension tjurina number is not finite/EXACT");
    rep.tau_susp = qk.codim;

    auto compute_kappa = [&]() {
        std::vector<Poly> gens;
        for (int i = 0; i < src.size(); ++i)
            for (int j = 0; j < src.size(); ++j)
                if (!src.at(i, j).is_zero()) gens.push_back(src.at(i, j));
        WeightSystem w1;
        w1.weights = ws->weights;
        GradedQuotient kq = ideal_codimension(gens, w1, max_degree);
        if (!kq.finite || kq.exactness != Exactness::Exact)
            throw error("entry ideal codimension is not finite/EXACT");
        rep.kappa = kq.codim;
    };

    switch (kind) {
        case SuspensionKind::SqToSk_Trivial:
            if (rep.s_source == 1) {
                rep.relation = "tau_sk = 2*tau_sq + 1 (one-variable trivial suspension)";
                rep.expected = 2 * rep.tau_source + 1;
            } else if (rep.k == 2 && rep.s_source == 2) {
                compute_kappa();
                rep.relation = "tau_sk = tau_sq + 2*kappa";
                rep.expected = rep.tau_source + 2 * *rep.kappa;
            } else if (rep.k == 3 && rep.s_source == 2) {
                rep.relation = "k=3, s=2 trivial suspension: no closed relation (tabulated values only)";
            } else {
                rep.relation = "no tabulated prediction for this (k, s)";
            }
            break;
        case SuspensionKind::SqToSk_Intermediate:
            compute_kappa();
            rep.relation = "tau_sk = tau_sq + kappa";
            rep.expected = rep.tau_source + *rep.kappa;
            break;
        case SuspensionKind::SqToSk_Full: {
            bool in_table = (rep.k == 2 && rep.s_susp >= 4) ||
                            (rep.k == 3 && rep.s_susp == 13) ||
                            (rep.k >= 3 && rep.s_susp >= rep.k * (2 * rep.k - 1) - 1);
            if (in_table) {
                rep.relation = "tau_sk = tau_sq (full suspension)";
                rep.expected = rep.tau_source;
            } else {
                rep.relation = "full suspension outside the tabulated (k, s) rows";
            }
            break;
        }
        case SuspensionKind::SymToSq_Trivial:
        case SuspensionKind::SymToSq_Full:
            rep.relation = "sym-to-sq suspensions carry no tabulated tau relation";
            break;
    }
    if (rep.expected)
        rep.verdict = (*rep.expected == rep.tau_susp) ? TauRelationReport::Verdict::Pass
                                                      : TauRelationReport::Verdict::Fail;
    return rep;
}

bool pfaffian_relation_check(const MatrixFamily& src, SuspensionKind kind) {
    if (src.kind() != Kind::Sq) throw error("pfaffian relation check needs an sq source");
    int k = src.size();
    MatrixFamily susp = suspend(src, kind);
    Poly pf = pfaffian(susp);
    Poly det = extend_roster(determinant(src), susp.vars());
    switch (kind) {
        case SuspensionKind::SqToSk_Trivial: {
            int sign = (k * (k - 1) / 2) % 2 == 0 ? 1 : -1;
            return pf == det * Rat(sign);
        }
        case SuspensionKind::SqToSk_Intermediate: {
            Poly z = Poly::variable(susp.vars(), (int)susp.vars().size() - 1);
            return pf == z * z - det;
        }
        case SuspensionKind::SqToSk_Full: {
            if (k != 2) throw error("full pfaffian relation is stated for 2x2 sources");
            int nv = (int)susp.vars().size();
            Poly v = Poly::variable(susp.vars(), nv - 2);
            Poly w = Poly::variable(susp.vars(), nv - 1);
            return pf == v * w - det;
        }
        default: throw error("pfaffian relation check applies to sq-to-sk suspensions");
    }
}

} // namespace mg
