#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tq/topology.hpp"
#include "tq/zlinalg.hpp"

namespace tq {

// Multiplicative coefficient group, stored through exponents: the infinite
// cyclic group ⟨t⟩ (modulus 0) or Z/m written multiplicatively (modulus m).
struct CoefficientGroup {
    long long modulus = 0;

    static CoefficientGroup infinite_cyclic() { return {0}; }
    static CoefficientGroup cyclic(long long m);

    long long reduce(long long e) const {
        if (modulus == 0) return e;
        long long r = e % modulus;
        return r < 0 ? r + modulus : r;
    }
};

/*
 * Degree-1 cochain of the quotient bar complex: a sparse map from
 * non-degenerate pairs (x, y), x ≠ y in one path component, to exponents.
 * Degenerate pairs are identically zero and never stored.
 */
struct Cochain1 {
    std::map<std::pair<int, int>, long long> entries;

    long long value(int x, int y) const {
        auto it = entries.find({x, y});
        return it == entries.end() ? 0 : it->second;
    }
    void set(int x, int y, long long e) {
        if (e == 0) entries.erase({x, y});
        else entries[{x, y}] = e;
    }
    Cochain1 sub(const Cochain1& o) const;
    Cochain1 scaled(long long k) const;
    Cochain1 reduced(const CoefficientGroup& a) const;
    bool operator==(const Cochain1& o) const { return entries == o.entries; }
};

// Admissible pairs of tq in lexicographic order: x ≠ y, same path component.
std::vector<std::pair<int, int>> admissible_pairs(const TopologicalQuandle& tq);

// DomainError when (x, y) is degenerate or crosses components.
Cochain1 characteristic_cochain(const TopologicalQuandle& tq, int x, int y);

// Every stored pair must be admissible for tq.
void validate_cochain(const TopologicalQuandle& tq, const Cochain1& c);

// φ(x,z) − φ(x▷y,z) − φ(x,y) + φ(x▷z,y▷z) ≡ 0 (mod a) over every
// component-homogeneous triple (x,y,z) with x ≠ y, y ≠ z.
bool is_cocycle(const TopologicalQuandle& tq, const Cochain1& phi, const CoefficientGroup& a);

// δ⁰ψ(x, y) = ψ(x) − ψ(x▷y) for a point cochain ψ.
Cochain1 coboundary_of(const TopologicalQuandle& tq, const std::map<int, long long>& psi);

struct CochainBasis {
    std::vector<Cochain1> generators;
    std::vector<long long> orders;  // 0 = infinite order, else order dividing m
};

// Solution space of the cocycle system, canonical echelon generators.
CochainBasis cocycle_space(const TopologicalQuandle& tq, const CoefficientGroup& a);

// Image of δ⁰, canonical echelon generators.
CochainBasis coboundary_space(const TopologicalQuandle& tq, const CoefficientGroup& a);

// Membership of phi in the span of basis over the coefficient group.
bool in_span(const TopologicalQuandle& tq, const CochainBasis& basis, const Cochain1& phi,
             const CoefficientGroup& a);

struct CohomologousResult {
    bool cohomologous = false;
    std::map<int, long long> witness;  // ψ with δ⁰ψ = φ − φ'
};

// Both inputs must be cocycles (DomainError otherwise).
CohomologousResult are_cohomologous(const TopologicalQuandle& tq, const CoefficientGroup& a,
                                    const Cochain1& phi, const Cochain1& phi2);

}  // namespace tq
