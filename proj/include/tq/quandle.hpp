#pragma once

#include <string>
#include <vector>

#include "tq/report.hpp"

namespace tq {

/*
 * Finite quandle on points 0..n-1 with x ▷ y = table[x][y].
 * Every column y of the table is the translation β_y, a permutation of
 * the points; inverse translations are precomputed.
 */
class FiniteQuandle {
  public:
    FiniteQuandle() = default;
    // Throws StructureError for malformed tables, DomainError for axiom failures.
    explicit FiniteQuandle(std::vector<std::vector<int>> table, std::string name = "");

    int size() const { return static_cast<int>(table_.size()); }
    int op(int x, int y) const { return table_[x][y]; }       // x ▷ y
    int op_inv(int x, int y) const { return inv_[x][y]; }     // β_y⁻¹(x)
    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::string& name() const { return name_; }

    bool operator==(const FiniteQuandle& o) const { return table_ == o.table_; }

  private:
    std::vector<std::vector<int>> table_;
    std::vector<std::vector<int>> inv_;
    std::string name_;
};

// Structural screening happens first and throws StructureError; axiom
// violations are collected, one lexicographically-smallest witness per axiom.
// Rules: "idempotency" (x), "column-bijectivity" (y, x1, x2 with
// β_y(x1) = β_y(x2)), "self-distributivity" (x, y, z).
ValidationReport validate_quandle(const std::vector<std::vector<int>>& table);

FiniteQuandle dihedral_quandle(int n);  // x ▷ y = (2y - x) mod n
FiniteQuandle trivial_quandle(int n);   // x ▷ y = x

// Both take a group multiplication table g[i][j] = i·j (any identity label)
// and verify the group axioms first (DomainError on failure).
FiniteQuandle conjugation_quandle(const std::vector<std::vector<int>>& group);  // x ▷ y = y x y⁻¹
FiniteQuandle core_quandle(const std::vector<std::vector<int>>& group);         // x ▷ y = y x⁻¹ y

ValidationReport validate_group(const std::vector<std::vector<int>>& group);

// Orbit of a single point under all β_y^{±1}, explored in ascending y order.
bool is_indecomposable(const FiniteQuandle& q);

struct Subquandle {
    FiniteQuandle quandle;
    std::vector<int> embedding;  // new label -> original label, ascending
};

// subset must be closed under ▷ and all β_y⁻¹ for y in the subset;
// DomainError carries the first offending pair otherwise.
Subquandle make_subquandle(const FiniteQuandle& q, const std::vector<int>& subset);

}  // namespace tq
