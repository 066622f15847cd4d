#pragma once

#include <string>
#include <vector>

#include "tq/complex.hpp"
#include "tq/zlinalg.hpp"

namespace tq {

/*
 * H_n = ker ∂_n / im ∂_{n+1} with integer coefficients (modulus 0) or Z/m
 * coefficients (modulus m, computed over Z on the stacked matrix [∂ | m·I]).
 * Cohomology uses δ^n = (∂_{n+1})ᵀ.  If n is the top built degree the
 * missing ∂_{n+1} is treated as zero and the result flagged truncated.
 */
AbelianGroup homology(const ChainComplexZ& cx, int n, long long modulus = 0);
AbelianGroup cohomology(const ChainComplexZ& cx, int n, long long modulus = 0);

// Integral H_n with explicit generators: `cycles` has a kernel-lattice basis
// in its columns, `rels` expresses the columns of ∂_{n+1} in that basis, so
// H_n = Z^k / col-span(rels).
struct HomologyPresentation {
    ZMat cycles;
    ZMat rels;
};
HomologyPresentation homology_presentation(const ChainComplexZ& cx, int n);

/*
 * Universal-coefficient check at degree n: the directly computed H_n(C; G)
 * and H^n(C; G) against (H_n ⊗ G) ⊕ Tor(H_{n-1}, G) and
 * Hom(H_n, G) ⊕ Ext(H_{n-1}, G) on canonical forms.  G = Z when modulus 0.
 */
struct UctReport {
    bool ok = true;
    AbelianGroup homology_direct, homology_predicted;
    AbelianGroup cohomology_direct, cohomology_predicted;
};
UctReport uct_check(const ChainComplexZ& cx, int n, long long modulus);

AbelianGroup tensor_with(const AbelianGroup& a, long long modulus);
AbelianGroup tor_with(const AbelianGroup& a, long long modulus);
AbelianGroup hom_into(const AbelianGroup& a, long long modulus);
AbelianGroup ext_into(const AbelianGroup& a, long long modulus);

/*
 * Exactness of ... → H̄_n(D) → H̄_n(R) → H̄_n(Q) → H̄_{n-1}(D) → ...
 * for the inclusion, projection and connecting maps built from the three
 * bar complexes of one topological quandle.  Each node is checked at the
 * integral level (image lattice = preimage lattice inside the cycle
 * coordinates) while the chain rank stays at or below
 * `integral_threshold`, and by Q-rank comparison beyond it.
 */
struct LesNode {
    int degree = 0;
    char part = 'R';  // 'D', 'R', 'Q'
    long long image_rank = 0, kernel_rank = 0;
    bool exact = false;
    bool integral = true;
};
struct LesReport {
    bool ok = true;
    std::vector<LesNode> nodes;
    std::string str() const;
};
LesReport les_check(const TopologicalQuandle& tq, int n_max = 2, int integral_threshold = 4096);

}  // namespace tq
