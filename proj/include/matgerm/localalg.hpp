#pragma once

#include "matgerm/poly.hpp"
#include "matgerm/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mg {

// Finitely generated submodule T of O_s^N presented by generators. The
// optional component degrees induce the grading deg(x^a e_c) =
// <a, w> - comp_degree[c]; tangent modules of quasi-homogeneous families
// become graded this way.
struct ModuleGeneratorSet {
    int ambient_rank = 1;
    std::vector<std::vector<Poly>> gens;
    VarList vars;
    std::vector<Rat> comp_degree; // empty means all zero
};

enum class Exactness { Exact, Truncated, Undetermined };

struct QuotientBasisElem {
    Monomial mono;
    int comp = 0;
    Rat degree; // graded (shifted) degree
};

struct GradedQuotient {
    bool finite = true; // false: INFINITE-or-undetermined
    long codim = 0;
    std::vector<QuotientBasisElem> basis;
    Exactness exactness = Exactness::Exact;
    Rat stabilized_at = 0;
    Rat truncated_at = 0;                    // cutoff used in Truncated/Undetermined
    std::vector<std::pair<Rat, long>> slices; // nonzero per-degree quotient dims
    std::string note;

    std::string exactness_str() const;
};

// Codimension of T in O_s^N by exact rational rank computation, degree
// slice by degree slice. With homogeneous generators the computation is
// graded and certified EXACT once the quotient vanishes on a full window
// of width max_i w_i (see stabilization notes in the implementation).
// Inhomogeneous generators run through the order filtration; one constant
// window likewise certifies (Nakayama + Krull intersection), otherwise the
// result is TRUNCATED at max_degree.
GradedQuotient graded_codimension(const ModuleGeneratorSet& t, const WeightSystem& w,
                                  const Rat& max_degree);

// kappa = dim O_s / (gens); specialization with N = 1.
GradedQuotient ideal_codimension(const std::vector<Poly>& gens, const WeightSystem& w,
                                 const Rat& max_degree = 48);

struct MilnorNumber {
    bool finite = true;
    long value = 0; // meaningful when finite
};

// Codimension of the Jacobian ideal, weights all 1. A window that never
// closes before the budget is reported as non-finite, which for the
// isolated-singularity inputs of this library means INFINITE.
MilnorNumber milnor_number(const Poly& f, const Rat& max_degree = 48);

} // namespace mg
