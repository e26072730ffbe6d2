#include "matgerm/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mg {

Poly Poly::constant(VarList vars, const Rat& c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_[Monomial{std::vector<int>(p.vars_.size(), 0)}] = c;
    return p;
}

Poly Poly::variable(VarList vars, int index) {
    if (index < 0 || index >= (int)vars.size()) throw error("variable index out of range");
    Poly p(std::move(vars));
    std::vector<int> e(p.vars_.size(), 0);
    e[index] = 1;
    p.terms_[Monomial{std::move(e)}] = 1;
    return p;
}

Rat Poly::constant_term() const {
    Monomial z{std::vector<int>(vars_.size(), 0)};
    return coeff(z);
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::set_coeff(const Monomial& m, const Rat& c) {
    if ((int)m.e.size() != nvars()) throw error("monomial length does not match roster");
    if (c == 0) terms_.erase(m);
    else terms_[m] = c;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if ((int)m.e.size() != nvars()) throw error("monomial length does not match roster");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (c != 0) terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void Poly::check_same_roster(const Poly& o) const {
    if (vars_ != o.vars_) throw error("variable roster mismatch");
}

bool Poly::operator==(const Poly& o) const {
    check_same_roster(o);
    return terms_ == o.terms_;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_roster(o);
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_roster(o);
    Poly r = *this;
    for (auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_roster(o);
    Poly r(vars_);
    for (auto& [ma, ca] : terms_) {
        for (auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw error("negative exponent");
    Poly r = Poly::constant(vars_, 1);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Poly Poly::derivative(int var) const {
    if (var < 0 || var >= nvars()) throw error("derivative variable out of range");
    Poly r(vars_);
    for (auto& [m, c] : terms_) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        int k = d.e[var]--;
        r.add_term(d, c * k);
    }
    return r;
}

Poly Poly::substitute(const PolyMap& map) const {
    if (vars_ != map.source_vars()) throw error("substitution map does not cover the roster");
    const auto& images = map.images();
    VarList tv = images.empty() ? vars_ : images[0].vars();
    Poly r(tv);
    // Memoized powers of each image keep repeated exponents cheap.
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](int v, int k) -> const Poly& {
        auto& tab = powers[v];
        if (tab.empty()) tab.push_back(Poly::constant(tv, 1));
        while ((int)tab.size() <= k) tab.push_back(tab.back() * images[v]);
        return tab[k];
    };
    for (auto& [m, c] : terms_) {
        Poly t = Poly::constant(tv, c);
        for (int v = 0; v < (int)m.e.size(); ++v)
            if (m.e[v] > 0) t = t * power(v, m.e[v]);
        r += t;
    }
    return r;
}

Poly Poly::truncate_total(int cutoff) const {
    Poly r(vars_);
    for (auto& [m, c] : terms_)
        if (m.total_degree() <= cutoff) r.terms_[m] = c;
    return r;
}

int Poly::min_total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.total_degree();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Reverse iteration prints in descending graded-lex order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Rat a = neg ? Rat(-c) : c;
        bool has_vars = m.total_degree() > 0;
        if (a != 1 || !has_vars) {
            out << a.get_str();
            if (has_vars) out << "*";
        }
        bool firstv = true;
        for (size_t v = 0; v < m.e.size(); ++v) {
            if (m.e[v] == 0) continue;
            if (!firstv) out << "*";
            firstv = false;
            out << vars_[v];
            if (m.e[v] > 1) out << "^" << m.e[v];
        }
    }
    return out.str();
}

PolyMap::PolyMap(VarList source_vars, std::vector<Poly> images)
    : src_(std::move(source_vars)), images_(std::move(images)) {
    if (src_.size() != images_.size()) throw error("substitution map arity mismatch");
    for (size_t i = 1; i < images_.size(); ++i)
        if (images_[i].vars() != images_[0].vars())
            throw error("substitution images use inconsistent rosters");
}

PolyMap PolyMap::identity(const VarList& vars) {
    std::vector<Poly> images;
    for (size_t i = 0; i < vars.size(); ++i) images.push_back(Poly::variable(vars, (int)i));
    return PolyMap(vars, std::move(images));
}

const VarList& PolyMap::target_vars() const {
    if (images_.empty()) return src_;
    return images_[0].vars();
}

bool PolyMap::is_germ_map() const {
    for (auto& p : images_)
        if (p.constant_term() != 0) return false;
    return true;
}

Poly extend_roster(const Poly& p, const VarList& bigger) {
    if (bigger.size() < p.vars().size()) throw error("extend_roster target is smaller");
    for (size_t i = 0; i < p.vars().size(); ++i)
        if (bigger[i] != p.vars()[i]) throw error("extend_roster needs the old roster as prefix");
    Poly out(bigger);
    for (auto& [m, c] : p.terms()) {
        Monomial m2 = m;
        m2.e.resize(bigger.size(), 0);
        out.add_term(m2, c);
    }
    return out;
}

Rat weighted_degree(const Monomial& m, const std::vector<Rat>& w) {
    if (m.e.size() != w.size()) throw error("weight vector length mismatch");
    Rat d = 0;
    for (size_t i = 0; i < w.size(); ++i) d += w[i] * m.e[i];
    return d;
}

std::vector<std::pair<Rat, Poly>> weighted_decompose(const Poly& p, const std::vector<Rat>& w) {
    for (auto& wi : w)
        if (wi <= 0) throw error("weights must be positive");
    std::map<Rat, Poly> parts;
    for (auto& [m, c] : p.terms()) {
        Rat d = weighted_degree(m, w);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, Poly(p.vars())).first;
        it->second.add_term(m, c);
    }
    std::vector<std::pair<Rat, Poly>> out;
    for (auto& [d, q] : parts) out.emplace_back(d, q);
    return out;
}

std::optional<Rat> weighted_order(const Poly& p, const std::vector<Rat>& w) {
    std::optional<Rat> best;
    for (auto& [m, c] : p.terms()) {
        Rat d = weighted_degree(m, w);
        if (!best || d < *best) best = d;
    }
    return best;
}

} // namespace mg
