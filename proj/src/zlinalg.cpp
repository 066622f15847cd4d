#include "tq/zlinalg.hpp"

#include <algorithm>
#include <numeric>

#include "tq/report.hpp"

namespace tq {

namespace {

BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

// Quotient rounded to nearest, so remainders satisfy |r| <= |b|/2.
BigInt rounded_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (2 * abs(r) > abs(b)) q += ((r < 0) == (b < 0)) ? 1 : -1;
    return q;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZMat ZMat::transpose() const {
    ZMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMat ZMat::mul(const ZMat& o) const {
    if (cols_ != o.rows_) throw StructureError("matrix product: shape mismatch");
    ZMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const BigInt& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

std::vector<BigInt> ZMat::apply(const std::vector<BigInt>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw StructureError("matrix apply: shape mismatch");
    std::vector<BigInt> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) r[i] += at(i, j) * v[j];
    return r;
}

ZMat ZMat::column(int j) const {
    ZMat c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

std::vector<BigInt> ZMat::column_vec(int j) const {
    std::vector<BigInt> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

bool ZMat::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

ZMat ZMat::hcat(const ZMat& cols) const {
    if (rows_ != cols.rows_) throw StructureError("hcat: row counts differ");
    ZMat r(rows_, cols_ + cols.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < cols.cols_; ++j) r.at(i, cols_ + j) = cols.at(i, j);
    }
    return r;
}

namespace {

// Row/column operation engine shared by the SNF loop; mirrors every
// operation into the transforms (and inverse transforms) when present.
struct Worker {
    ZMat& a;
    ZMat *u, *uinv, *v, *vinv;

    void row_add(int dst, int src, const BigInt& q) {  // row dst += q * row src
        if (q == 0) return;
        for (int j = 0; j < a.cols(); ++j) a.at(dst, j) += q * a.at(src, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(dst, j) += q * u->at(src, j);
        if (uinv)
            for (int i = 0; i < uinv->rows(); ++i) uinv->at(i, src) -= q * uinv->at(i, dst);
    }
    void col_add(int dst, int src, const BigInt& q) {  // col dst += q * col src
        if (q == 0) return;
        for (int i = 0; i < a.rows(); ++i) a.at(i, dst) += q * a.at(i, src);
        if (v)
            for (int i = 0; i < v->rows(); ++i) v->at(i, dst) += q * v->at(i, src);
        if (vinv)
            for (int j = 0; j < vinv->cols(); ++j) vinv->at(src, j) -= q * vinv->at(dst, j);
    }
    void row_swap(int r1, int r2) {
        if (r1 == r2) return;
        for (int j = 0; j < a.cols(); ++j) std::swap(a.at(r1, j), a.at(r2, j));
        if (u)
            for (int j = 0; j < u->cols(); ++j) std::swap(u->at(r1, j), u->at(r2, j));
        if (uinv)
            for (int i = 0; i < uinv->rows(); ++i) std::swap(uinv->at(i, r1), uinv->at(i, r2));
    }
    void col_swap(int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < a.rows(); ++i) std::swap(a.at(i, c1), a.at(i, c2));
        if (v)
            for (int i = 0; i < v->rows(); ++i) std::swap(v->at(i, c1), v->at(i, c2));
        if (vinv)
            for (int j = 0; j < vinv->cols(); ++j) std::swap(vinv->at(c1, j), vinv->at(c2, j));
    }
    void row_negate(int r) {
        for (int j = 0; j < a.cols(); ++j) a.at(r, j) = -a.at(r, j);
        if (u)
            for (int j = 0; j < u->cols(); ++j) u->at(r, j) = -u->at(r, j);
        if (uinv)
            for (int i = 0; i < uinv->rows(); ++i) uinv->at(i, r) = -uinv->at(i, r);
    }
};

}  // namespace

SNFResult smith_normal_form(ZMat a, bool with_transforms) {
    const int m = a.rows(), n = a.cols();
    SNFResult res;
    ZMat u, uinv, v, vinv;
    if (with_transforms) {
        u = ZMat::identity(m);
        uinv = ZMat::identity(m);
        v = ZMat::identity(n);
        vinv = ZMat::identity(n);
    }
    Worker w{a, with_transforms ? &u : nullptr, with_transforms ? &uinv : nullptr,
             with_transforms ? &v : nullptr, with_transforms ? &vinv : nullptr};

    const int steps = std::min(m, n);
    int t = 0;
    for (; t < steps; ++t) {
        // Pivot: least |value| in the remaining block, ties by lowest (row, col).
        int pi = -1, pj = -1;
        for (int i = t; i < m; ++i)
            for (int j = t; j < n; ++j) {
                if (a.at(i, j) == 0) continue;
                if (pi < 0 || abs(a.at(i, j)) < abs(a.at(pi, pj))) { pi = i; pj = j; }
            }
        if (pi < 0) break;
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i) {
                if (a.at(i, t) == 0) continue;
                w.row_add(i, t, -rounded_div(a.at(i, t), a.at(t, t)));
                if (a.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                w.col_add(j, t, -rounded_div(a.at(t, j), a.at(t, t)));
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) {
                // A remainder beat the pivot; promote the new minimum and repeat.
                int qi = t, qj = t;
                for (int i = t; i < m; ++i)
                    for (int j = t; j < n; ++j) {
                        if (a.at(i, j) == 0) continue;
                        if (abs(a.at(i, j)) < abs(a.at(qi, qj))) { qi = i; qj = j; }
                    }
                w.row_swap(t, qi);
                w.col_swap(t, qj);
                continue;
            }
            // Divisibility over the remaining block.
            int bi = -1, bj = -1;
            for (int i = t + 1; i < m && bi < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) { bi = i; bj = j; break; }
            if (bi < 0) break;
            w.row_add(t, bi, 1);
        }
        if (a.at(t, t) < 0) w.row_negate(t);
    }

    res.diag.assign(steps, 0);
    for (int i = 0; i < t; ++i) res.diag[i] = a.at(i, i);
    res.rank = t;
    if (with_transforms) {
        res.left = std::move(u);
        res.left_inv = std::move(uinv);
        res.right = std::move(v);
        res.right_inv = std::move(vinv);
    }
    return res;
}

std::string AbelianGroup::str() const {
    std::vector<std::string> parts;
    if (modulus == 0) {
        if (free_rank == 1) parts.push_back("Z");
        else if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
        for (const auto& d : torsion) parts.push_back("Z/" + d.str());
    } else {
        for (const auto& d : torsion) parts.push_back("Z/" + d.str());
        for (long long i = 0; i < free_rank; ++i) parts.push_back("Z/" + std::to_string(modulus));
    }
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) s += " + " + parts[i];
    return s;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) {
    return a.free_rank == b.free_rank && a.torsion == b.torsion && a.modulus == b.modulus;
}

std::vector<BigInt> invariant_factors(std::vector<BigInt> cyclic_orders) {
    for (const auto& c : cyclic_orders)
        if (c <= 0) throw StructureError("invariant_factors: orders must be positive");
    std::erase_if(cyclic_orders, [](const BigInt& c) { return c == 1; });
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(cyclic_orders.begin(), cyclic_orders.end());
        for (size_t i = 0; i < cyclic_orders.size() && !changed; ++i)
            for (size_t j = i + 1; j < cyclic_orders.size(); ++j)
                if (cyclic_orders[j] % cyclic_orders[i] != 0) {
                    BigInt g = big_gcd(cyclic_orders[i], cyclic_orders[j]);
                    BigInt l = cyclic_orders[i] / g * cyclic_orders[j];
                    cyclic_orders[i] = g;
                    cyclic_orders[j] = l;
                    changed = true;
                    break;
                }
    }
    std::erase_if(cyclic_orders, [](const BigInt& c) { return c == 1; });
    return cyclic_orders;
}

bool same_group(const AbelianGroup& a, const AbelianGroup& b) {
    long long inf_a = a.modulus == 0 ? a.free_rank : 0;
    long long inf_b = b.modulus == 0 ? b.free_rank : 0;
    if (inf_a != inf_b) return false;
    std::vector<BigInt> fin_a = a.torsion, fin_b = b.torsion;
    if (a.modulus != 0) fin_a.insert(fin_a.end(), a.free_rank, BigInt(a.modulus));
    if (b.modulus != 0) fin_b.insert(fin_b.end(), b.free_rank, BigInt(b.modulus));
    return invariant_factors(fin_a) == invariant_factors(fin_b);
}

int rank_z(const ZMat& a) { return smith_normal_form(a, false).rank; }

ZMat kernel_basis(const ZMat& a) {
    auto snf = smith_normal_form(a, true);
    const ZMat& v = *snf.right;
    const int n = a.cols(), k = n - snf.rank;
    ZMat ker(n, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i) ker.at(i, j) = v.at(i, snf.rank + j);
    return ker;
}

ZMat hnf_columns(const ZMat& g) {
    ZMat a = g;
    const int m = a.rows(), n = a.cols();
    auto col_add = [&](int dst, int src, const BigInt& q) {
        if (q == 0) return;
        for (int i = 0; i < m; ++i) a.at(i, dst) += q * a.at(i, src);
    };
    auto col_swap = [&](int c1, int c2) {
        if (c1 == c2) return;
        for (int i = 0; i < m; ++i) std::swap(a.at(i, c1), a.at(i, c2));
    };

    int pivot = 0;
    for (int r = 0; r < m && pivot < n; ++r) {
        for (;;) {
            int best = -1;
            for (int j = pivot; j < n; ++j) {
                if (a.at(r, j) == 0) continue;
                if (best < 0 || abs(a.at(r, j)) < abs(a.at(r, best))) best = j;
            }
            if (best < 0) break;
            col_swap(pivot, best);
            bool clean = true;
            for (int j = pivot + 1; j < n; ++j) {
                if (a.at(r, j) == 0) continue;
                col_add(j, pivot, -rounded_div(a.at(r, j), a.at(r, pivot)));
                if (a.at(r, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a.at(r, pivot) == 0) continue;
        if (a.at(r, pivot) < 0)
            for (int i = 0; i < m; ++i) a.at(i, pivot) = -a.at(i, pivot);
        for (int j = 0; j < pivot; ++j) col_add(j, pivot, -floor_div(a.at(r, j), a.at(r, pivot)));
        ++pivot;
    }
    ZMat h(m, pivot);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < pivot; ++j) h.at(i, j) = a.at(i, j);
    return h;
}

LinearSolver::LinearSolver(const ZMat& a) : m_(a.rows()), n_(a.cols()) {
    auto snf = smith_normal_form(a, true);
    diag_ = std::move(snf.diag);
    rank_ = snf.rank;
    left_ = std::move(*snf.left);
    right_ = std::move(*snf.right);
}

std::optional<std::vector<BigInt>> LinearSolver::solve(const std::vector<BigInt>& b) const {
    if (static_cast<int>(b.size()) != m_) throw StructureError("solve: length mismatch");
    std::vector<BigInt> c = left_.apply(b);
    std::vector<BigInt> z(n_);
    for (int i = 0; i < rank_; ++i) {
        if (c[i] % diag_[i] != 0) return std::nullopt;
        z[i] = c[i] / diag_[i];
    }
    for (int i = rank_; i < m_; ++i)
        if (c[i] != 0) return std::nullopt;
    return right_.apply(z);
}

bool lattice_contains(const LinearSolver& gens, const std::vector<BigInt>& v) {
    return gens.solve(v).has_value();
}

bool lattice_equal(const ZMat& g1, const ZMat& g2) {
    if (g1.rows() != g2.rows()) throw StructureError("lattice_equal: ambient ranks differ");
    LinearSolver s1(g1), s2(g2);
    for (int j = 0; j < g2.cols(); ++j)
        if (!s1.solve(g2.column_vec(j))) return false;
    for (int j = 0; j < g1.cols(); ++j)
        if (!s2.solve(g1.column_vec(j))) return false;
    return true;
}

BigInt determinant_bareiss(ZMat a) {
    const int n = a.rows();
    if (n != a.cols()) throw StructureError("determinant: square matrix required");
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a.at(k, k) == 0) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { swap_row = i; break; }
            if (swap_row < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

}  // namespace tq
