#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

namespace tq {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix, row-major. 0×n and n×0 shapes are legal.
class ZMat {
  public:
    ZMat() = default;
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static ZMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    BigInt& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    ZMat transpose() const;
    ZMat mul(const ZMat& o) const;
    std::vector<BigInt> apply(const std::vector<BigInt>& v) const;  // this · v
    ZMat column(int j) const;
    std::vector<BigInt> column_vec(int j) const;
    bool is_zero() const;
    bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    // Columns of `cols` appended on the right (row counts must agree).
    ZMat hcat(const ZMat& cols) const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<BigInt> a_;
};

/*
 * Smith normal form  left · A · right = diag(d1, ..., dr, 0, ..., 0)
 * with d1 | d2 | ... | dr, all positive.  Pivot rule: nonzero entry of least
 * absolute value in the remaining block, ties broken by lowest (row, col);
 * rows and columns are eliminated alternately until divisibility holds.
 */
struct SNFResult {
    std::vector<BigInt> diag;  // length min(m, n), trailing zeros kept
    int rank = 0;
    std::optional<ZMat> left, left_inv, right, right_inv;
};
SNFResult smith_normal_form(ZMat a, bool with_transforms = false);

/*
 * Finitely generated abelian group in invariant-factor form.
 * modulus == 0: Z^free_rank ⊕ Z/d for d in torsion (1 < d1 | d2 | ...).
 * modulus == m: coefficient group Z/m; free_rank counts Z/m summands and
 * torsion holds the factors properly dividing m.
 */
struct AbelianGroup {
    long long free_rank = 0;
    std::vector<BigInt> torsion;
    long long modulus = 0;
    bool truncated = false;  // top built degree: lower bound only

    std::string str() const;
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
};

// Structural equality under the same coefficient convention.
bool operator==(const AbelianGroup& a, const AbelianGroup& b);

// Isomorphism test across conventions: free parts equal and finite parts
// equal after re-canonicalizing prime powers into invariant factors.
bool same_group(const AbelianGroup& a, const AbelianGroup& b);

// Invariant factors (ascending divisibility) of ⊕ Z/c for the given cyclic
// orders; order 0 entries are rejected, order 1 dropped.
std::vector<BigInt> invariant_factors(std::vector<BigInt> cyclic_orders);

int rank_z(const ZMat& a);

// Columns form a basis of ker(a) as a saturated sublattice of Z^cols.
ZMat kernel_basis(const ZMat& a);

// Canonical column-style Hermite form of the column lattice; zero columns
// dropped.  Used to make documented bases reproducible bit-for-bit.
ZMat hnf_columns(const ZMat& g);

// Integral solutions of A x = b through the SNF transforms of A.
class LinearSolver {
  public:
    explicit LinearSolver(const ZMat& a);
    std::optional<std::vector<BigInt>> solve(const std::vector<BigInt>& b) const;

  private:
    int m_, n_;
    std::vector<BigInt> diag_;
    int rank_;
    ZMat left_, right_;
};

bool lattice_contains(const LinearSolver& gens, const std::vector<BigInt>& v);
bool lattice_equal(const ZMat& g1, const ZMat& g2);

// Determinant by Bareiss fraction-free elimination (used by the
// gcd-of-minors oracle; independent of the SNF code path).
BigInt determinant_bareiss(ZMat a);

}  // namespace tq
