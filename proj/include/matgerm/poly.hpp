#pragma once

#include "matgerm/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mg {

using VarList = std::vector<std::string>;

// Exponent vector; length always equals the roster size of the owning Poly.
struct Monomial {
    std::vector<int> e;

    int total_degree() const {
        int d = 0;
        for (int k : e) d += k;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic order by variable position. The map below iterates
// ascending; reverse iteration yields the canonical printing order.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db;
        for (size_t i = 0; i < a.e.size() && i < b.e.size(); ++i)
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
        return a.e.size() < b.e.size();
    }
};

class PolyMap;

class Poly {
public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    Poly() = default;
    explicit Poly(VarList vars) : vars_(std::move(vars)) {}

    static Poly constant(VarList vars, const Rat& c);
    static Poly variable(VarList vars, int index);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    int nvars() const { return (int)vars_.size(); }

    bool is_zero() const { return terms_.empty(); }
    Rat constant_term() const;
    // Coefficient of a given exponent vector (zero if absent).
    Rat coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const Rat& c);
    void add_term(const Monomial& m, const Rat& c);

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& c) const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }

    Poly pow(int k) const;
    Poly derivative(int var) const;
    Poly substitute(const PolyMap& m) const;
    // Drops every term of total degree > cutoff; the jet arithmetic used by
    // the one-variable reductions and the splitting lemma.
    Poly truncate_total(int cutoff) const;

    int min_total_degree() const; // order w.r.t. weight 1; -1 for the zero poly

    std::string str() const;

private:
    void check_same_roster(const Poly& o) const;
    VarList vars_;
    TermMap terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// Substitution target: one image per source variable, all images over a
// common roster. A valid germ substitution has zero constant terms.
class PolyMap {
public:
    PolyMap() = default;
    PolyMap(VarList source_vars, std::vector<Poly> images);

    static PolyMap identity(const VarList& vars);

    const VarList& source_vars() const { return src_; }
    const std::vector<Poly>& images() const { return images_; }
    const VarList& target_vars() const;
    bool is_germ_map() const; // every image vanishes at 0

private:
    VarList src_;
    std::vector<Poly> images_;
};

// Same polynomial over a larger roster; the old roster must be a prefix.
Poly extend_roster(const Poly& p, const VarList& bigger);

// Weighted-degree utilities. Weights are positive rationals per variable.
Rat weighted_degree(const Monomial& m, const std::vector<Rat>& w);
// Parts in strictly increasing degree, summing to p; empty for 0.
std::vector<std::pair<Rat, Poly>> weighted_decompose(const Poly& p, const std::vector<Rat>& w);
// Least weighted degree; nullopt for the zero polynomial.
std::optional<Rat> weighted_order(const Poly& p, const std::vector<Rat>& w);

} // namespace mg
