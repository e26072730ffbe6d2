#pragma once

#include "matgerm/poly.hpp"
#include "matgerm/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mg {

enum class Kind { Sq, Sym, Sk };

std::string kind_name(Kind k);

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_identity(const VarList& vars, int n);
PolyMatrix poly_mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix poly_mat_transpose(const PolyMatrix& a);
Poly poly_mat_det(const PolyMatrix& a);

// An n x n matrix of polynomial germs with a kind tag. Sym entries must be
// symmetric, Sk entries skew with zero diagonal and even n; inputs are
// validated, never symmetrized.
class MatrixFamily {
public:
    MatrixFamily(Kind kind, PolyMatrix entries, VarList vars);

    Kind kind() const { return kind_; }
    int size() const { return n_; }
    const VarList& vars() const { return vars_; }
    const PolyMatrix& entries() const { return m_; }
    const Poly& at(int i, int j) const { return m_[i][j]; }

    MatrixFamily transposed() const;
    MatrixFamily with_kind(Kind k) const;            // revalidates
    MatrixFamily rename_vars(VarList new_vars) const; // same exponents, new roster

    bool operator==(const MatrixFamily& o) const;

private:
    void validate() const;
    Kind kind_;
    int n_;
    PolyMatrix m_;
    VarList vars_;
};

MatrixFamily direct_sum(const MatrixFamily& a, const MatrixFamily& b);
MatrixFamily constant_identity_family(Kind kind, const VarList& vars, int n);
// J_n = J_2 + J_2 + ... along the diagonal; n even.
MatrixFamily j_block_family(const VarList& vars, int n);

Poly determinant(const MatrixFamily& m);
// First-row recursive expansion; Pf of the empty matrix is 1.
Poly pfaffian(const MatrixFamily& m);
int matrix_corank(const MatrixFamily& m);

// Row/column operations. Sym/Sk ops act by congruence (same move on rows
// and columns); Sq ops carry a side flag since the two sides of the
// equivalence are independent.
enum class OpSide { Both, Rows, Cols };

struct RowColOp {
    enum class Type { Transvection, Scale, Swap } type;
    int i = 0, j = 0; // Transvection: add (coeff * line i) to line j
    Poly coeff;       // Transvection coefficient, or Scale unit
    OpSide side = OpSide::Both;

    static RowColOp transvection(int i, int j, Poly a, OpSide s = OpSide::Both);
    static RowColOp scale(int i, Poly unit, OpSide s = OpSide::Both);
    static RowColOp swap(int i, int j, OpSide s = OpSide::Both);
    std::string str(const VarList& vars) const;
};

MatrixFamily apply_ops(const MatrixFamily& m, const std::vector<RowColOp>& ops);
// Accumulated op matrices: applying the list sends M to A^T M B (B == A for
// congruence sides).
void ops_to_matrices(const std::vector<RowColOp>& ops, const VarList& vars, int n,
                     PolyMatrix& a, PolyMatrix& b);

// Certificate for M1 o phi = A^T M2 B (Sq) or A^T M2 A (Sym/Sk; B absent).
struct EquivalenceCertificate {
    PolyMap phi;
    PolyMatrix a;
    std::optional<PolyMatrix> b;
};

bool check_certificate(const MatrixFamily& m1, const MatrixFamily& m2,
                       const EquivalenceCertificate& cert);

// Splits off the invertible part of M(0). The certificate relates M to
// core (+) unit_block exactly; for Sq the unit block is the identity, for
// Sym a diagonal of unit polynomials and for Sk a block sum of u*J_2 with
// u(0) = 1. Exact polynomial certificates cannot normalize non-constant
// units to 1 (that needs power-series square roots), so the unit block is
// returned explicitly.
struct StableSplit {
    MatrixFamily core;
    MatrixFamily unit_block;
    EquivalenceCertificate cert;
};

StableSplit stable_split(const MatrixFamily& m);

// Solves the quasi-homogeneity constraints exactly: each monomial of each
// nonzero entry (i,j) must satisfy <exponents, w> = r_i + c_j with all
// weights positive. Weights are normalized so the minimum weight is 1.
std::optional<WeightSystem> find_weights(const MatrixFamily& m);

} // namespace mg
