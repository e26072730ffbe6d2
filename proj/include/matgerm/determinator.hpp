#pragma once

#include "matgerm/family.hpp"
#include "matgerm/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mg {

// Function-singularity class of a germ f with f(0) = 0.
struct SingClass {
    enum class Tag { Regular, A, D, E6, E7, E8, P8, X9, J10, NonSimple, Undetermined } tag;
    long mu = 0;        // for A(mu) / D(mu)
    std::string reason; // for Undetermined

    static SingClass regular() { return {Tag::Regular, 0, ""}; }
    static SingClass a(long mu) { return {Tag::A, mu, ""}; }
    static SingClass d(long mu) { return {Tag::D, mu, ""}; }
    static SingClass simple(Tag t) { return {t, 0, ""}; }
    static SingClass non_simple() { return {Tag::NonSimple, 0, ""}; }
    static SingClass undetermined(std::string why) {
        return {Tag::Undetermined, 0, std::move(why)};
    }

    bool operator==(const SingClass& o) const { return tag == o.tag && mu == o.mu; }
    std::string str() const;
};

std::optional<SingClass> sing_class_from_text(const std::string& text);

// Corank of the Hessian of f at 0; needs f(0) = 0, df(0) = 0.
int hessian_corank(const Poly& f);

// Splitting lemma on jets: completes squares on the nondegenerate block
// and returns the residual germ in the corank variables, truncated at
// jet_degree. All steps are exact rational substitutions.
Poly residual_part(const Poly& f, int jet_degree);

// Recognition of R-simple classes plus the fencing classes P8/X9/J10;
// anything outside the recognized range comes back NonSimple or
// Undetermined, never a wrong label.
SingClass classify_function(const Poly& f);

// One-variable normal form reduction. Everything is computed modulo
// x^(trunc+1); the op list replays the reduction via apply_ops.
struct Reduce1Result {
    enum class Status { Done, Undetermined } status = Status::Done;
    std::vector<long> orders; // ascending; possibly partial when Undetermined
    std::vector<RowColOp> ops;
    std::string note;
};

Reduce1Result reduce_one_variable_sk(const MatrixFamily& m, int trunc);
Reduce1Result reduce_one_variable_sq(const MatrixFamily& m, int trunc);

// Trace-form orthogonal complement of a span of constant skew matrices
// inside Sk_n: perp(Z) = { Y skew : tr(XY) = 0 for all X in Z }.
using ConstMatrix = std::vector<std::vector<Rat>>;
std::vector<ConstMatrix> perp(const std::vector<ConstMatrix>& span, int n);

// Dimension constraints for simple skew families: the Grassmannian orbit
// inequality r(N - r) <= 4k^2 - 1 and the sharper allowed-triplet list,
// with N = k(2k-1).
struct DimVerdict {
    bool inequality_holds = false;
    bool allowed = false; // the sharper triplet verdict
    std::string rule;
};

DimVerdict simple_dimension_cases(int s, int k, int r);

} // namespace mg
