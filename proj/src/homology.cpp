#include "tq/homology.hpp"

#include <algorithm>
#include <map>

#include "tq/report.hpp"

namespace tq {

namespace {

void check_degree(const ChainComplexZ& cx, int n) {
    if (n > cx.max_degree) throw StructureError("homology: degree beyond built complex");
}

// H = Z^k / col-span(rels) over Z, or (Z/m)^k / col-span(rels) when the
// relations already include m·e_i for every coordinate.
AbelianGroup quotient_group(int k, const ZMat& rels, long long modulus) {
    auto snf = smith_normal_form(rels, false);
    AbelianGroup g;
    g.modulus = modulus;
    if (modulus == 0) {
        g.free_rank = k - snf.rank;
        for (int i = 0; i < snf.rank; ++i)
            if (snf.diag[i] > 1) g.torsion.push_back(snf.diag[i]);
    } else {
        for (int i = 0; i < snf.rank; ++i) {
            if (snf.diag[i] == 1) continue;
            if (snf.diag[i] == modulus) ++g.free_rank;
            else g.torsion.push_back(snf.diag[i]);
        }
    }
    return g;
}

// ker(A)/im(B) where B's columns are known to lie in ker(A); modulus m > 0
// works with the solution lattice of A x ≡ 0 (mod m) and relations B plus
// m·(lattice coordinates).
AbelianGroup kernel_mod_image(const ZMat& a, const ZMat& b, long long modulus, bool truncated) {
    AbelianGroup g;
    const int chain_rank = a.cols();
    if (modulus == 0) {
        auto snf_a = smith_normal_form(a, false);
        auto snf_b = smith_normal_form(b, false);
        g.free_rank = chain_rank - snf_a.rank - snf_b.rank;
        for (int i = 0; i < snf_b.rank; ++i)
            if (snf_b.diag[i] > 1) g.torsion.push_back(snf_b.diag[i]);
    } else {
        if (chain_rank == 0) {
            g.modulus = modulus;
            g.truncated = truncated;
            return g;
        }
        ZMat mid = ZMat::identity(a.rows());
        for (int i = 0; i < a.rows(); ++i) mid.at(i, i) = modulus;
        ZMat kernel = kernel_basis(a.hcat(mid));
        ZMat proj(chain_rank, kernel.cols());
        for (int i = 0; i < chain_rank; ++i)
            for (int j = 0; j < kernel.cols(); ++j) proj.at(i, j) = kernel.at(i, j);
        ZMat lattice = hnf_columns(proj);
        LinearSolver solver(lattice);
        ZMat rels(lattice.cols(), b.cols() + chain_rank);
        for (int j = 0; j < b.cols() + chain_rank; ++j) {
            std::vector<BigInt> target(chain_rank);
            if (j < b.cols()) target = b.column_vec(j);
            else target[j - b.cols()] = modulus;
            auto sol = solver.solve(target);
            if (!sol) throw StructureError("relation outside the cycle lattice");
            for (int i = 0; i < lattice.cols(); ++i) rels.at(i, j) = (*sol)[i];
        }
        g = quotient_group(lattice.cols(), rels, modulus);
    }
    g.modulus = modulus;
    g.truncated = truncated;
    return g;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    AbelianGroup s;
    s.free_rank = a.free_rank + b.free_rank;
    std::vector<BigInt> factors = a.torsion;
    factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
    s.torsion = invariant_factors(std::move(factors));
    return s;
}

std::vector<BigInt> gcd_factors(const AbelianGroup& a, long long modulus) {
    std::vector<BigInt> f;
    for (const auto& d : a.torsion) f.push_back(boost::multiprecision::gcd(d, BigInt(modulus)));
    return f;
}

}  // namespace

AbelianGroup homology(const ChainComplexZ& cx, int n, long long modulus) {
    if (n < 0) return AbelianGroup{0, {}, modulus};
    check_degree(cx, n);
    ZMat a = cx.boundary_or_zero(n).dense();
    ZMat b = cx.boundary_or_zero(n + 1).dense();
    return kernel_mod_image(a, b, modulus, n == cx.max_degree);
}

AbelianGroup cohomology(const ChainComplexZ& cx, int n, long long modulus) {
    if (n < 0) return AbelianGroup{0, {}, modulus};
    check_degree(cx, n);
    ZMat a = cx.boundary_or_zero(n + 1).dense().transpose();
    ZMat b = cx.boundary_or_zero(n).dense().transpose();
    return kernel_mod_image(a, b, modulus, n == cx.max_degree);
}

HomologyPresentation homology_presentation(const ChainComplexZ& cx, int n) {
    if (n < 0) return {ZMat(0, 0), ZMat(0, 0)};
    check_degree(cx, n);
    ZMat a = cx.boundary_or_zero(n).dense();
    ZMat b = cx.boundary_or_zero(n + 1).dense();
    ZMat cycles = kernel_basis(a);
    LinearSolver solver(cycles);
    ZMat rels(cycles.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto sol = solver.solve(b.column_vec(j));
        if (!sol) throw StructureError("boundary column is not a cycle");
        for (int i = 0; i < cycles.cols(); ++i) rels.at(i, j) = (*sol)[i];
    }
    return {std::move(cycles), std::move(rels)};
}

AbelianGroup tensor_with(const AbelianGroup& a, long long modulus) {
    if (modulus == 0) return AbelianGroup{a.free_rank, a.torsion, 0};
    std::vector<BigInt> f = gcd_factors(a, modulus);
    f.insert(f.end(), a.free_rank, BigInt(modulus));
    return AbelianGroup{0, invariant_factors(std::move(f)), 0};
}

AbelianGroup tor_with(const AbelianGroup& a, long long modulus) {
    if (modulus == 0) return AbelianGroup{};
    return AbelianGroup{0, invariant_factors(gcd_factors(a, modulus)), 0};
}

AbelianGroup hom_into(const AbelianGroup& a, long long modulus) {
    if (modulus == 0) return AbelianGroup{a.free_rank, {}, 0};
    return tensor_with(a, modulus);
}

AbelianGroup ext_into(const AbelianGroup& a, long long modulus) {
    if (modulus == 0) return AbelianGroup{0, a.torsion, 0};
    return tor_with(a, modulus);
}

UctReport uct_check(const ChainComplexZ& cx, int n, long long modulus) {
    UctReport r;
    r.homology_direct = homology(cx, n, modulus);
    r.cohomology_direct = cohomology(cx, n, modulus);
    AbelianGroup h_n = homology(cx, n, 0);
    AbelianGroup h_prev = n >= 1 ? homology(cx, n - 1, 0) : AbelianGroup{};
    r.homology_predicted = direct_sum(tensor_with(h_n, modulus), tor_with(h_prev, modulus));
    r.cohomology_predicted = direct_sum(hom_into(h_n, modulus), ext_into(h_prev, modulus));
    r.ok = same_group(r.homology_direct, r.homology_predicted) &&
           same_group(r.cohomology_direct, r.cohomology_predicted);
    return r;
}

namespace {

struct Part {
    ChainComplexZ cx;
    std::vector<ZMat> cycles;  // per degree, kernel lattice basis
    std::vector<ZMat> rels;    // per node degree, boundaries in cycle coords
};

ZMat cycles_of(const ChainComplexZ& cx, int n) {
    return kernel_basis(cx.boundary_or_zero(n).dense());
}

ZMat rels_of(const ChainComplexZ& cx, int n, const ZMat& cycles) {
    ZMat b = cx.boundary_or_zero(n + 1).dense();
    LinearSolver solver(cycles);
    ZMat rels(cycles.cols(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto sol = solver.solve(b.column_vec(j));
        if (!sol) throw StructureError("boundary column is not a cycle");
        for (int i = 0; i < cycles.cols(); ++i) rels.at(i, j) = (*sol)[i];
    }
    return rels;
}

// Images of `gens`'s columns under the chain-level map, rewritten in the
// target's cycle coordinates.
ZMat induced_map(const std::vector<std::vector<BigInt>>& images, const LinearSolver& target,
                 int target_dim) {
    ZMat out(target_dim, static_cast<int>(images.size()));
    for (size_t j = 0; j < images.size(); ++j) {
        auto sol = target.solve(images[j]);
        if (!sol) throw StructureError("chain map image is not a cycle");
        for (int i = 0; i < target_dim; ++i) out.at(i, static_cast<int>(j)) = (*sol)[i];
    }
    return out;
}

}  // namespace

std::string LesReport::str() const {
    std::string s;
    for (const auto& n : nodes) {
        s += "H_" + std::to_string(n.degree) + "(" + std::string(1, n.part) + ")" +
             (n.exact ? ": exact" : ": NOT exact") + " (image rank " +
             std::to_string(n.image_rank) + ", kernel rank " + std::to_string(n.kernel_rank) +
             (n.integral ? ", integral lattices)" : ", Q-rank only)") + "\n";
    }
    return s;
}

LesReport les_check(const TopologicalQuandle& tq, int n_max, int integral_threshold) {
    if (n_max < 0) throw StructureError("les_check: negative degree");
    const int top = n_max + 1;
    Part D{bar_complex(tq, ComplexKind::BarD, top), {}, {}};
    Part R{bar_complex(tq, ComplexKind::BarR, top), {}, {}};
    Part Q{bar_complex(tq, ComplexKind::BarQ, top), {}, {}};

    int max_rank = 0;
    for (int n = 0; n <= top; ++n) max_rank = std::max(max_rank, R.cx.rank(n));
    const bool integral = max_rank <= integral_threshold;

    for (Part* p : {&D, &R, &Q}) {
        p->cycles.resize(top + 1);
        p->rels.resize(top + 1);
        for (int n = 0; n <= top; ++n) {
            p->cycles[n] = cycles_of(p->cx, n);
            if (n <= n_max) p->rels[n] = rels_of(p->cx, n, p->cycles[n]);
        }
    }

    // Chain-level maps per degree: inclusion D -> R, projection R -> Q.
    std::vector<std::vector<int>> d_to_r(top + 1), r_to_q(top + 1);
    for (int n = 0; n <= top; ++n) {
        std::map<std::vector<int>, int> r_index, q_index;
        for (int i = 0; i < R.cx.rank(n); ++i) r_index.emplace(R.cx.basis[n][i], i);
        for (int i = 0; i < Q.cx.rank(n); ++i) q_index.emplace(Q.cx.basis[n][i], i);
        d_to_r[n].resize(D.cx.rank(n));
        for (int i = 0; i < D.cx.rank(n); ++i) d_to_r[n][i] = r_index.at(D.cx.basis[n][i]);
        r_to_q[n].assign(R.cx.rank(n), -1);
        for (int i = 0; i < R.cx.rank(n); ++i) {
            auto it = q_index.find(R.cx.basis[n][i]);
            if (it != q_index.end()) r_to_q[n][i] = it->second;
        }
    }

    auto include_d = [&](int n, const std::vector<BigInt>& v) {
        std::vector<BigInt> out(R.cx.rank(n));
        for (int i = 0; i < D.cx.rank(n); ++i) out[d_to_r[n][i]] = v[i];
        return out;
    };
    auto project_q = [&](int n, const std::vector<BigInt>& v) {
        std::vector<BigInt> out(Q.cx.rank(n));
        for (int i = 0; i < R.cx.rank(n); ++i)
            if (r_to_q[n][i] >= 0) out[r_to_q[n][i]] = v[i];
        return out;
    };
    // Connecting map on a degree-n Q-cycle: lift along the tuple section,
    // apply the R boundary, land in the degenerate coordinates.
    auto connect_q = [&](int n, const std::vector<BigInt>& v) {
        std::vector<BigInt> lifted(R.cx.rank(n));
        std::map<std::vector<int>, int> r_index;
        for (int i = 0; i < R.cx.rank(n); ++i) r_index.emplace(R.cx.basis[n][i], i);
        for (int i = 0; i < Q.cx.rank(n); ++i) lifted[r_index.at(Q.cx.basis[n][i])] = v[i];
        std::vector<BigInt> bd = R.cx.boundary_or_zero(n).dense().apply(lifted);
        std::vector<BigInt> out(D.cx.rank(n - 1));
        std::map<std::vector<int>, int> rprev_index;
        for (int i = 0; i < R.cx.rank(n - 1); ++i) rprev_index.emplace(R.cx.basis[n - 1][i], i);
        for (int i = 0; i < D.cx.rank(n - 1); ++i)
            out[i] = bd[rprev_index.at(D.cx.basis[n - 1][i])];
        for (int i = 0; i < R.cx.rank(n - 1); ++i)
            if (r_to_q[n - 1][i] >= 0 && bd[i] != 0)
                throw StructureError("connecting map left the degenerate part");
        return out;
    };

    LesReport report;
    std::vector<std::optional<LinearSolver>> solver_d(top + 1), solver_r(top + 1), solver_q(top + 1);
    auto solver_for = [&](char part, int n) -> LinearSolver& {
        auto& slot = part == 'D' ? solver_d[n] : part == 'R' ? solver_r[n] : solver_q[n];
        if (!slot) {
            const Part& p = part == 'D' ? D : part == 'R' ? R : Q;
            slot.emplace(p.cycles[n]);
        }
        return *slot;
    };

    // One node of the long sequence: incoming map images vs outgoing kernel.
    auto check_node = [&](char part, int n, const ZMat& f_mat, const ZMat& g_mat,
                          const ZMat& rels_node, const ZMat& rels_target) {
        LesNode node;
        node.degree = n;
        node.part = part;
        node.integral = integral;
        ZMat im = f_mat.hcat(rels_node);
        ZMat stacked = g_mat.hcat(rels_target);
        ZMat ker = kernel_basis(stacked);
        ZMat ker_proj(f_mat.rows(), ker.cols());
        for (int i = 0; i < f_mat.rows(); ++i)
            for (int j = 0; j < ker.cols(); ++j) ker_proj.at(i, j) = ker.at(i, j);
        long long rels_rank = rank_z(rels_node);
        node.image_rank = rank_z(im) - rels_rank;
        node.kernel_rank = rank_z(ker_proj) - rels_rank;
        node.exact = integral ? lattice_equal(im, ker_proj)
                              : node.image_rank == node.kernel_rank;
        report.nodes.push_back(node);
        if (!node.exact) report.ok = false;
    };

    for (int n = 0; n <= n_max; ++n) {
        const int kd = D.cycles[n].cols(), kr = R.cycles[n].cols(), kq = Q.cycles[n].cols();

        std::vector<std::vector<BigInt>> img;
        // i_*: D_n -> R_n
        img.clear();
        for (int j = 0; j < kd; ++j) img.push_back(include_d(n, D.cycles[n].column_vec(j)));
        ZMat i_star = induced_map(img, solver_for('R', n), kr);
        // j_*: R_n -> Q_n
        img.clear();
        for (int j = 0; j < kr; ++j) img.push_back(project_q(n, R.cycles[n].column_vec(j)));
        ZMat j_star = induced_map(img, solver_for('Q', n), kq);
        // ∂_*: Q_{n+1} -> D_n
        img.clear();
        for (int j = 0; j < Q.cycles[n + 1].cols(); ++j)
            img.push_back(connect_q(n + 1, Q.cycles[n + 1].column_vec(j)));
        ZMat conn_in = induced_map(img, solver_for('D', n), kd);
        // ∂_*: Q_n -> D_{n-1}
        ZMat conn_out(n == 0 ? 0 : D.cycles[n - 1].cols(), kq);
        if (n > 0) {
            img.clear();
            for (int j = 0; j < kq; ++j) img.push_back(connect_q(n, Q.cycles[n].column_vec(j)));
            conn_out = induced_map(img, solver_for('D', n - 1), D.cycles[n - 1].cols());
        }

        ZMat rels_d_prev = n == 0 ? ZMat(0, 0) : D.rels[n - 1];
        check_node('D', n, conn_in, i_star, D.rels[n], R.rels[n]);
        check_node('R', n, i_star, j_star, R.rels[n], Q.rels[n]);
        check_node('Q', n, j_star, conn_out, Q.rels[n], rels_d_prev);
    }
    return report;
}

}  // namespace tq
