#include "tq/quandle.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace tq {

namespace {

void check_table_shape(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw StructureError("table: empty");
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(table[x].size()) != n)
            throw StructureError("table: row " + std::to_string(x + 1) + " has " +
                                 std::to_string(table[x].size()) + " entries, expected " +
                                 std::to_string(n));
        for (int y = 0; y < n; ++y)
            if (table[x][y] < 0 || table[x][y] >= n)
                throw StructureError("table: entry at (" + std::to_string(x + 1) + "," +
                                     std::to_string(y + 1) + ") out of range");
    }
}

std::string point(int x) { return std::to_string(x + 1); }

}  // namespace

ValidationReport validate_quandle(const std::vector<std::vector<int>>& table) {
    check_table_shape(table);
    const int n = static_cast<int>(table.size());
    ValidationReport report;

    for (int x = 0; x < n; ++x) {
        if (table[x][x] != x) {
            report.add("idempotency", {x},
                       point(x) + " ▷ " + point(x) + " = " + point(table[x][x]));
            break;
        }
    }

    bool column_bad = false;
    for (int y = 0; y < n && !column_bad; ++y) {
        for (int x1 = 0; x1 < n && !column_bad; ++x1)
            for (int x2 = x1 + 1; x2 < n; ++x2)
                if (table[x1][y] == table[x2][y]) {
                    report.add("column-bijectivity", {y, x1, x2},
                               "column " + point(y) + " sends both " + point(x1) + " and " +
                                   point(x2) + " to " + point(table[x1][y]));
                    column_bad = true;
                    break;
                }
    }

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = table[table[x][y]][z];
                int rhs = table[table[x][z]][table[y][z]];
                if (lhs != rhs) {
                    report.add("self-distributivity", {x, y, z},
                               "(" + point(x) + " ▷ " + point(y) + ") ▷ " + point(z) +
                                   " = " + point(lhs) + " but (" + point(x) + " ▷ " +
                                   point(z) + ") ▷ (" + point(y) + " ▷ " + point(z) +
                                   ") = " + point(rhs));
                    return report;
                }
            }
    return report;
}

FiniteQuandle::FiniteQuandle(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
    auto report = validate_quandle(table_);
    if (!report.ok) throw DomainError("not a quandle: " + report.summary());
    const int n = size();
    inv_.assign(n, std::vector<int>(n, 0));
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) inv_[table_[x][y]][y] = x;
}

FiniteQuandle dihedral_quandle(int n) {
    if (n <= 0) throw StructureError("dihedral: size must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = ((2 * y - x) % n + n) % n;
    return FiniteQuandle(std::move(t), "dihedral(" + std::to_string(n) + ")");
}

FiniteQuandle trivial_quandle(int n) {
    if (n <= 0) throw StructureError("trivial: size must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = x;
    return FiniteQuandle(std::move(t), "trivial(" + std::to_string(n) + ")");
}

ValidationReport validate_group(const std::vector<std::vector<int>>& g) {
    check_table_shape(g);
    const int n = static_cast<int>(g.size());
    ValidationReport report;

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (g[e][x] != x || g[x][e] != x) { ok = false; break; }
        if (ok) { identity = e; break; }
    }
    if (identity < 0) {
        report.add("group-identity", {}, "no two-sided identity element");
        return report;
    }
    for (int x = 0; x < n; ++x) {
        bool has_inverse = false;
        for (int y = 0; y < n; ++y)
            if (g[x][y] == identity && g[y][x] == identity) { has_inverse = true; break; }
        if (!has_inverse) {
            report.add("group-inverse", {x}, point(x) + " has no inverse");
            return report;
        }
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (g[g[x][y]][z] != g[x][g[y][z]]) {
                    report.add("group-associativity", {x, y, z},
                               "(" + point(x) + point(y) + ")" + point(z) + " ≠ " + point(x) +
                                   "(" + point(y) + point(z) + ")");
                    return report;
                }
    return report;
}

namespace {

struct GroupOps {
    const std::vector<std::vector<int>>& g;
    std::vector<int> inv;
};

GroupOps group_ops(const std::vector<std::vector<int>>& g) {
    auto report = validate_group(g);
    if (!report.ok) throw DomainError("not a group table: " + report.summary());
    const int n = static_cast<int>(g.size());
    int identity = 0;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n; ++x)
            if (g[e][x] != x) { ok = false; break; }
        if (ok) { identity = e; break; }
    }
    std::vector<int> inv(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (g[x][y] == identity) { inv[x] = y; break; }
    return {g, std::move(inv)};
}

}  // namespace

FiniteQuandle conjugation_quandle(const std::vector<std::vector<int>>& group) {
    auto ops = group_ops(group);
    const int n = static_cast<int>(group.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = group[group[y][x]][ops.inv[y]];
    return FiniteQuandle(std::move(t), "conj");
}

FiniteQuandle core_quandle(const std::vector<std::vector<int>>& group) {
    auto ops = group_ops(group);
    const int n = static_cast<int>(group.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = group[group[y][ops.inv[x]]][y];
    return FiniteQuandle(std::move(t), "core");
}

bool is_indecomposable(const FiniteQuandle& q) {
    const int n = q.size();
    std::vector<char> seen(n, 0);
    std::queue<int> work;
    seen[0] = 1;
    work.push(0);
    int reached = 1;
    while (!work.empty()) {
        int x = work.front();
        work.pop();
        for (int y = 0; y < n; ++y)
            for (int next : {q.op(x, y), q.op_inv(x, y)})
                if (!seen[next]) {
                    seen[next] = 1;
                    ++reached;
                    work.push(next);
                }
    }
    return reached == n;
}

Subquandle make_subquandle(const FiniteQuandle& q, const std::vector<int>& subset) {
    const int n = q.size();
    std::set<int> s(subset.begin(), subset.end());
    if (s.empty()) throw StructureError("subquandle: empty subset");
    for (int x : s)
        if (x < 0 || x >= n) throw StructureError("subquandle: point out of range");

    for (int x : s)
        for (int y : s) {
            if (!s.count(q.op(x, y)))
                throw DomainError("subquandle: not closed, " + point(x) + " ▷ " + point(y) +
                                  " = " + point(q.op(x, y)) + " outside the subset");
            if (!s.count(q.op_inv(x, y)))
                throw DomainError("subquandle: not closed under inverse translations, β_" +
                                  point(y) + "⁻¹(" + point(x) + ") = " +
                                  point(q.op_inv(x, y)) + " outside the subset");
        }

    std::vector<int> embedding(s.begin(), s.end());
    const int k = static_cast<int>(embedding.size());
    std::vector<int> back(n, -1);
    for (int i = 0; i < k; ++i) back[embedding[i]] = i;
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) t[i][j] = back[q.op(embedding[i], embedding[j])];
    return {FiniteQuandle(std::move(t), q.name().empty() ? "" : q.name() + "|sub"),
            std::move(embedding)};
}

}  // namespace tq
