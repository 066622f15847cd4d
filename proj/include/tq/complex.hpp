#pragma once

#include <string>
#include <vector>

#include "tq/topology.hpp"
#include "tq/zlinalg.hpp"

namespace tq {

enum class ComplexKind { BarR, BarD, BarQ, ClassicalR, ClassicalD, ClassicalQ };

std::string kind_name(ComplexKind k);
bool kind_is_bar(ComplexKind k);

// Boundary matrix stored as column lists of (row, coefficient).
struct SparseMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, long long>>> col;

    SparseMat() = default;
    SparseMat(int r, int c) : rows(r), cols(c), col(c) {}
    ZMat dense() const;
    bool is_zero() const;
};

// Product this · o with exact integer arithmetic.
SparseMat sparse_mul(const SparseMat& a, const SparseMat& b);

/*
 * Chain complex of free Z-modules with explicit tuple bases.
 *
 * Bar kinds: degree-n basis vectors are the component-homogeneous
 * (n+1)-tuples; ∂_n(x1,...,x_{n+1}) = Σ_{i=2}^{n+1} (-1)^i [
 *   (x1,...,x̂_i,...,x_{n+1}) - (x1▷x_i,...,x_{i-1}▷x_i, x_{i+1},...,x_{n+1}) ].
 * D keeps the tuples with a consecutive repeat (zero in degree 0), Q keeps
 * the rest and projects boundary terms that leave it to zero.
 *
 * Classical kinds: degree-n basis vectors are all n-tuples (degree 0 is the
 * empty tuple), with the same boundary shape summed over i = 2..n.
 */
struct ChainComplexZ {
    ComplexKind kind = ComplexKind::BarR;
    int max_degree = 0;
    std::vector<std::vector<std::vector<int>>> basis;  // basis[n] = tuples, canonical order
    std::vector<SparseMat> boundary;                   // boundary[n]: C_n -> C_{n-1}; boundary[0] is 0 x rank(0)

    int rank(int n) const {
        return (n < 0 || n > max_degree) ? 0 : static_cast<int>(basis[n].size());
    }
    // ∂_n as a sparse matrix; degrees outside the built range give a zero
    // matrix of the right shape.
    SparseMat boundary_or_zero(int n) const;
};

ChainComplexZ bar_complex(const TopologicalQuandle& tq, ComplexKind kind, int n_max = 3);
ChainComplexZ classical_complex(const FiniteQuandle& q, ComplexKind kind, int n_max = 3);

// Z[X] / ⟨σ_a - σ_{a▷b} : a, b in the same path component⟩.
AbelianGroup full_H0(const TopologicalQuandle& tq);

}  // namespace tq
