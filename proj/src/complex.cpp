#include "tq/complex.hpp"

#include <map>

#include "tq/report.hpp"

namespace tq {

std::string kind_name(ComplexKind k) {
    switch (k) {
        case ComplexKind::BarR: return "bar-R";
        case ComplexKind::BarD: return "bar-D";
        case ComplexKind::BarQ: return "bar-Q";
        case ComplexKind::ClassicalR: return "classical-R";
        case ComplexKind::ClassicalD: return "classical-D";
        case ComplexKind::ClassicalQ: return "classical-Q";
    }
    return "?";
}

bool kind_is_bar(ComplexKind k) {
    return k == ComplexKind::BarR || k == ComplexKind::BarD || k == ComplexKind::BarQ;
}

ZMat SparseMat::dense() const {
    ZMat d(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (const auto& [i, c] : col[j]) d.at(i, j) += c;
    return d;
}

bool SparseMat::is_zero() const {
    for (const auto& c : col)
        for (const auto& [i, v] : c)
            if (v != 0) return false;
    return true;
}

SparseMat sparse_mul(const SparseMat& a, const SparseMat& b) {
    if (a.cols != b.rows) throw StructureError("sparse product: shape mismatch");
    SparseMat r(a.rows, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        std::map<int, long long> acc;
        for (const auto& [k, bv] : b.col[j])
            for (const auto& [i, av] : a.col[k]) acc[i] += av * bv;
        for (const auto& [i, v] : acc)
            if (v != 0) r.col[j].emplace_back(i, v);
    }
    return r;
}

SparseMat ChainComplexZ::boundary_or_zero(int n) const {
    if (n >= 1 && n <= max_degree) return boundary[n];
    return SparseMat(rank(n - 1), rank(n));
}

namespace {

bool has_consecutive_repeat(const std::vector<int>& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

bool keeps(ComplexKind kind, const std::vector<int>& t) {
    switch (kind) {
        case ComplexKind::BarR:
        case ComplexKind::ClassicalR: return true;
        case ComplexKind::BarD:
        case ComplexKind::ClassicalD: return has_consecutive_repeat(t);
        case ComplexKind::BarQ:
        case ComplexKind::ClassicalQ: return !has_consecutive_repeat(t);
    }
    return false;
}

// All length-len tuples over `points` (given ascending), lex order, filtered.
void gen_tuples(const std::vector<int>& points, int len, ComplexKind kind,
                std::vector<std::vector<int>>& out) {
    if (len == 0) {
        std::vector<int> empty;
        if (keeps(kind, empty)) out.push_back(empty);
        return;
    }
    std::vector<size_t> idx(len, 0);
    std::vector<int> t(len);
    for (;;) {
        for (int i = 0; i < len; ++i) t[i] = points[idx[i]];
        if (keeps(kind, t)) out.push_back(t);
        int p = len - 1;
        while (p >= 0 && idx[p] + 1 == points.size()) idx[p--] = 0;
        if (p < 0) break;
        ++idx[p];
    }
}

/*
 * ∂ of one tuple, accumulated by target tuple: for each deletable position
 * (1-based, from 2), a face term (delete the entry) and a twist term (delete
 * it, act by it on all earlier entries), with sign (-1)^pos and the twist
 * subtracted.  Q projects stray terms to zero; for R and D the summed
 * coefficient of any tuple outside the basis must cancel to zero.
 */
void boundary_of_tuple(const FiniteQuandle& q, const std::vector<int>& t,
                       std::map<std::vector<int>, long long>& acc) {
    const int len = static_cast<int>(t.size());
    std::vector<int> face(len - 1), twist(len - 1);
    for (int pos = 2; pos <= len; ++pos) {  // 1-based entry position
        const int cut = pos - 1;
        for (int p = 0, o = 0; p < len; ++p)
            if (p != cut) face[o++] = t[p];
        for (int p = 0, o = 0; p < len; ++p) {
            if (p == cut) continue;
            twist[o++] = p < cut ? q.op(t[p], t[cut]) : t[p];
        }
        const long long sign = pos % 2 == 0 ? 1 : -1;
        acc[face] += sign;
        acc[twist] -= sign;
    }
}

ChainComplexZ assemble(const FiniteQuandle& q, ComplexKind kind, int n_max,
                       std::vector<std::vector<std::vector<int>>> tuple_sets) {
    ChainComplexZ cx;
    cx.kind = kind;
    cx.max_degree = n_max;
    cx.basis = std::move(tuple_sets);
    cx.boundary.resize(n_max + 1);
    cx.boundary[0] = SparseMat(0, cx.rank(0));
    const bool projects = kind == ComplexKind::BarQ || kind == ComplexKind::ClassicalQ;
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::vector<int>, int> target_index;
        for (size_t i = 0; i < cx.basis[n - 1].size(); ++i)
            target_index.emplace(cx.basis[n - 1][i], static_cast<int>(i));
        SparseMat d(cx.rank(n - 1), cx.rank(n));
        for (int j = 0; j < cx.rank(n); ++j) {
            std::map<std::vector<int>, long long> acc;
            boundary_of_tuple(q, cx.basis[n][j], acc);
            std::map<int, long long> entries;
            for (const auto& [tuple, v] : acc) {
                if (v == 0) continue;
                auto it = target_index.find(tuple);
                if (it != target_index.end()) entries[it->second] += v;
                else if (!projects) throw StructureError("boundary left the subcomplex");
            }
            for (const auto& [i, v] : entries)
                if (v != 0) d.col[j].emplace_back(i, v);
        }
        cx.boundary[n] = std::move(d);
    }
    return cx;
}

}  // namespace

ChainComplexZ bar_complex(const TopologicalQuandle& tq, ComplexKind kind, int n_max) {
    if (!kind_is_bar(kind)) throw StructureError("bar_complex: classical kind");
    if (n_max < 0) throw StructureError("bar_complex: negative degree");
    std::vector<std::vector<std::vector<int>>> tuple_sets(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        for (const auto& comp : tq.components()) gen_tuples(comp, n + 1, kind, tuple_sets[n]);
    return assemble(tq.quandle(), kind, n_max, std::move(tuple_sets));
}

ChainComplexZ classical_complex(const FiniteQuandle& q, ComplexKind kind, int n_max) {
    if (kind_is_bar(kind)) throw StructureError("classical_complex: bar kind");
    if (n_max < 0) throw StructureError("classical_complex: negative degree");
    std::vector<int> all(q.size());
    for (int i = 0; i < q.size(); ++i) all[i] = i;
    std::vector<std::vector<std::vector<int>>> tuple_sets(n_max + 1);
    for (int n = 0; n <= n_max; ++n) gen_tuples(all, n, kind, tuple_sets[n]);
    return assemble(q, kind, n_max, std::move(tuple_sets));
}

AbelianGroup full_H0(const TopologicalQuandle& tq) {
    const FiniteQuandle& q = tq.quandle();
    const int n = q.size();
    std::vector<std::vector<BigInt>> cols;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (tq.component_of(a) != tq.component_of(b)) continue;
            int c = q.op(a, b);
            if (c == a) continue;
            std::vector<BigInt> col(n);
            col[a] = 1;
            col[c] = -1;
            cols.push_back(std::move(col));
        }
    ZMat rel(n, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < n; ++i) rel.at(i, static_cast<int>(j)) = cols[j][i];
    auto snf = smith_normal_form(rel, false);
    AbelianGroup g;
    g.free_rank = n - snf.rank;
    for (int i = 0; i < snf.rank; ++i)
        if (snf.diag[i] > 1) g.torsion.push_back(snf.diag[i]);
    return g;
}

}  // namespace tq
