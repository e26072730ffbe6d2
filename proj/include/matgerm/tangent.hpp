#pragma once

#include "matgerm/family.hpp"
#include "matgerm/localalg.hpp"

#include <string>
#include <vector>

namespace mg {

// Independent components of the matrix space: all n^2 positions for Sq,
// the upper triangle including the diagonal for Sym, the strict upper
// triangle for Sk. Flattening is row-major over this set.
std::vector<std::pair<int, int>> independent_components(Kind kind, int n);
int ambient_rank(Kind kind, int n);

// Extended tangent space generators: the s partial derivatives plus
// E_jl M and M E_pq for Sq, or E_jl M + M E_lj for Sym/Sk, flattened to
// the independent components. No grading is attached here.
ModuleGeneratorSet tangent_generators(const MatrixFamily& m);

// Tjurina number: graded codimension of the tangent module. The weight
// system induces the component grading d_ij = r_i + c_j, which turns the
// generators of a quasi-homogeneous family into homogeneous vectors and
// makes the stabilization window a certificate.
GradedQuotient tjurina(const MatrixFamily& m, const WeightSystem& w, const Rat& max_degree = 48);
// Convenience: derives weights via find_weights, falling back to weight 1
// per variable (filtration mode) when the family is not quasi-homogeneous.
GradedQuotient tjurina_auto(const MatrixFamily& m, const Rat& max_degree = 48);

struct MiniversalDeformation {
    MatrixFamily base;
    std::vector<QuotientBasisElem> directions;
    std::vector<std::string> parameter_names;

    // base + sum lambda_i * phi_i over the roster extended by the lambdas
    MatrixFamily total_family() const;
};

MiniversalDeformation miniversal(const MatrixFamily& m, const GradedQuotient& q);

// Deformation direction as a matrix family term: monomial times the unit
// pattern of the component (E_jl for Sq, E_jl + E_lj for Sym, E_jl - E_lj
// for Sk).
MatrixFamily direction_pattern(const MatrixFamily& m, const QuotientBasisElem& b);

} // namespace mg
