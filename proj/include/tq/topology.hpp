#pragma once

#include <cstdint>
#include <vector>

#include "tq/quandle.hpp"
#include "tq/report.hpp"

namespace tq {

// Open sets of an n-point space as bitmasks, n <= 62.
class FiniteTopology {
  public:
    FiniteTopology() = default;
    // Throws StructureError on malformed masks, DomainError if the family
    // is not a topology.
    FiniteTopology(int n, std::vector<std::uint64_t> opens);

    static FiniteTopology discrete(int n);
    static FiniteTopology indiscrete(int n);

    int size() const { return n_; }
    const std::vector<std::uint64_t>& opens() const { return opens_; }  // sorted, deduped
    std::uint64_t full_mask() const { return n_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - n_)); }
    std::uint64_t min_open(int x) const { return min_open_[x]; }  // U_x
    bool is_open(std::uint64_t s) const;
    bool is_discrete() const;
    bool is_indiscrete() const { return opens_.size() <= 2; }

    bool operator==(const FiniteTopology& o) const { return n_ == o.n_ && opens_ == o.opens_; }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> opens_;
    std::vector<std::uint64_t> min_open_;
};

// Rules: "missing-empty-set", "missing-full-set", "union-closure",
// "intersection-closure" (witness: the two offending open masks).
ValidationReport validate_topology(int n, const std::vector<std::uint64_t>& opens);

// f(U_x) ⊆ U_{f(x)} for every x; f maps points of dom to points of cod.
bool is_continuous(const std::vector<int>& f, const FiniteTopology& dom,
                   const FiniteTopology& cod);

// Specialization graph: x — y when x ∈ U_y or y ∈ U_x.  Components ordered
// by smallest element, elements ascending.
std::vector<std::vector<int>> path_components(const FiniteTopology& t);

/*
 * Quandle whose operation is jointly continuous and whose translations are
 * homeomorphisms.  Joint continuity is checked by the product criterion
 * x' ∈ U_x, y' ∈ U_y  ⇒  x' ▷ y' ∈ U_{x▷y}; each β_y must additionally map
 * every open onto an open.
 */
class TopologicalQuandle {
  public:
    TopologicalQuandle() = default;
    // Throws DomainError when validate_topological_quandle fails.
    TopologicalQuandle(FiniteQuandle q, FiniteTopology t);

    int size() const { return q_.size(); }
    const FiniteQuandle& quandle() const { return q_; }
    const FiniteTopology& topology() const { return t_; }
    int op(int x, int y) const { return q_.op(x, y); }
    int op_inv(int x, int y) const { return q_.op_inv(x, y); }

    const std::vector<std::vector<int>>& components() const { return comps_; }
    int component_of(int x) const { return comp_of_[x]; }

  private:
    FiniteQuandle q_;
    FiniteTopology t_;
    std::vector<std::vector<int>> comps_;
    std::vector<int> comp_of_;
};

// Rules: "size-mismatch", "joint-continuity" (x, y, x', y'),
// "open-image" (y, open mask).
ValidationReport validate_topological_quandle(const FiniteQuandle& q, const FiniteTopology& t);

}  // namespace tq
