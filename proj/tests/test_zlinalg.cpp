#include <doctest.h>

#include <numeric>

#include "corpus.hpp"
#include "tq/zlinalg.hpp"

using namespace tq;

namespace {

BigInt gcd_big(BigInt a, BigInt b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// gcd of all k×k minors, the classical characterization the normal form
// must reproduce: d_1···d_k = minor_gcd(k).
BigInt minor_gcd(const ZMat& a, int k) {
    std::vector<int> ri(k), ci(k);
    BigInt g = 0;
    auto rows = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            auto cols = [&](auto&& self2, int cstart, int cdepth) -> void {
                if (g == 1) return;
                if (cdepth == k) {
                    ZMat sub(k, k);
                    for (int i = 0; i < k; ++i)
                        for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(ri[i], ci[j]);
                    g = gcd_big(g, determinant_bareiss(sub));
                    return;
                }
                for (int c = cstart; c < a.cols(); ++c) {
                    ci[cdepth] = c;
                    self2(self2, c + 1, cdepth + 1);
                }
            };
            cols(cols, 0, 0);
            return;
        }
        for (int r = start; r < a.rows(); ++r) {
            ri[depth] = r;
            self(self, r + 1, depth + 1);
        }
    };
    rows(rows, 0, 0);
    return g;
}

ZMat from(std::vector<std::vector<long long>> rows) {
    ZMat a(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) a.at(i, j) = rows[i][j];
    return a;
}

}  // namespace

TEST_CASE("normal form of known matrices") {
    auto s = smith_normal_form(from({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}));
    CHECK(s.rank == 3);
    CHECK(s.diag == std::vector<BigInt>{2, 2, 156});

    s = smith_normal_form(from({{1, 0}, {0, 1}}));
    CHECK(s.diag == std::vector<BigInt>{1, 1});

    s = smith_normal_form(from({{0, 0}, {0, 0}}));
    CHECK(s.rank == 0);

    s = smith_normal_form(from({{2, 0}, {0, 3}}));
    CHECK(s.diag == std::vector<BigInt>{1, 6});

    s = smith_normal_form(ZMat(0, 3));
    CHECK(s.rank == 0);
    CHECK(s.diag.empty());
}

TEST_CASE("transforms multiply back to the diagonal") {
    tqtest::MatrixGen gen;
    for (int trial = 0; trial < 60; ++trial) {
        ZMat a = gen.next();
        auto s = smith_normal_form(a, true);
        ZMat d = s.left->mul(a).mul(*s.right);
        for (int i = 0; i < d.rows(); ++i)
            for (int j = 0; j < d.cols(); ++j)
                CHECK(d.at(i, j) == (i == j && i < static_cast<int>(s.diag.size()) ? s.diag[i]
                                                                                   : BigInt(0)));
        CHECK(s.left->mul(*s.left_inv) == ZMat::identity(a.rows()));
        CHECK(s.right->mul(*s.right_inv) == ZMat::identity(a.cols()));
        for (size_t i = 0; i + 1 < s.diag.size(); ++i) {
            if (s.diag[i + 1] == 0) break;
            CHECK(s.diag[i] > 0);
            CHECK(s.diag[i + 1] % s.diag[i] == 0);
        }
    }
}

TEST_CASE("normal form agrees with the minor-gcd characterization") {
    tqtest::MatrixGen gen;
    for (int trial = 0; trial < 25; ++trial) {
        ZMat a = gen.next();
        auto s = smith_normal_form(a);
        BigInt prod = 1;
        for (int k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
            BigInt g = minor_gcd(a, k);
            if (k <= s.rank) prod *= s.diag[k - 1];
            CHECK(g == (k <= s.rank ? prod : BigInt(0)));
        }
    }
}

TEST_CASE("kernel basis spans the kernel lattice") {
    tqtest::MatrixGen gen;
    for (int trial = 0; trial < 40; ++trial) {
        ZMat a = gen.next();
        ZMat k = kernel_basis(a);
        CHECK(k.rows() == a.cols());
        CHECK(a.mul(k).is_zero());
        CHECK(k.cols() == a.cols() - rank_z(a));
        CHECK(rank_z(k) == k.cols());
    }
    // the kernel lattice is saturated: solving inside it recovers any
    // integer kernel vector
    ZMat a = from({{2, 4, 6}});
    ZMat k = kernel_basis(a);
    LinearSolver solver(k);
    auto sol = solver.solve({BigInt(-2), BigInt(1), BigInt(0)});
    REQUIRE(sol.has_value());
    sol = solver.solve({BigInt(3), BigInt(0), BigInt(-1)});
    REQUIRE(sol.has_value());
}

TEST_CASE("column hermite form preserves the lattice") {
    tqtest::MatrixGen gen;
    for (int trial = 0; trial < 40; ++trial) {
        ZMat a = gen.next();
        ZMat h = hnf_columns(a);
        CHECK(h.rows() == a.rows());
        CHECK(h.cols() == rank_z(a));
        CHECK(lattice_equal(a, h));
    }
}

TEST_CASE("lattice membership") {
    LinearSolver l(from({{2, 0}, {0, 3}}));
    CHECK(lattice_contains(l, {BigInt(4), BigInt(-3)}));
    CHECK_FALSE(lattice_contains(l, {BigInt(1), BigInt(0)}));
    CHECK(lattice_equal(from({{1, 0}, {0, 1}}), from({{1, 1}, {0, 1}})));
    CHECK_FALSE(lattice_equal(from({{2}}), from({{1}})));
}

TEST_CASE("solver handles inconsistent and rank-deficient systems") {
    ZMat a = from({{2, 0}, {0, 0}});
    LinearSolver solver(a);
    auto sol = solver.solve({BigInt(4), BigInt(0)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 2);
    CHECK_FALSE(solver.solve({BigInt(3), BigInt(0)}).has_value());  // 3 not divisible
    CHECK_FALSE(solver.solve({BigInt(2), BigInt(1)}).has_value());  // outside image
}

TEST_CASE("determinants") {
    CHECK(determinant_bareiss(from({{1, 2}, {3, 4}})) == -2);
    CHECK(determinant_bareiss(from({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant_bareiss(from({{6}})) == 6);
    CHECK(determinant_bareiss(from({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
}

TEST_CASE("group pretty printing") {
    CHECK(AbelianGroup{0, {}, 0}.str() == "0");
    CHECK(AbelianGroup{1, {}, 0}.str() == "Z");
    CHECK(AbelianGroup{3, {}, 0}.str() == "Z^3");
    CHECK(AbelianGroup{2, {BigInt(2), BigInt(4)}, 0}.str() == "Z^2 + Z/2 + Z/4");
    CHECK(AbelianGroup{0, {BigInt(3)}, 0}.str() == "Z/3");
    CHECK(AbelianGroup{2, {}, 6}.str() == "Z/6 + Z/6");
    CHECK(AbelianGroup{1, {BigInt(2)}, 6}.str() == "Z/2 + Z/6");
}

TEST_CASE("invariant factors and isomorphism tests") {
    CHECK(invariant_factors({BigInt(2), BigInt(3)}) == std::vector<BigInt>{6});
    CHECK(invariant_factors({BigInt(2), BigInt(4)}) == std::vector<BigInt>{2, 4});
    CHECK(invariant_factors({BigInt(2), BigInt(2), BigInt(3)}) == std::vector<BigInt>{2, 6});
    CHECK(invariant_factors({BigInt(4), BigInt(6)}) == std::vector<BigInt>{2, 12});
    CHECK(invariant_factors({BigInt(1), BigInt(5)}) == std::vector<BigInt>{5});

    CHECK(same_group(AbelianGroup{0, {BigInt(2), BigInt(3)}, 0}, AbelianGroup{0, {BigInt(6)}, 0}));
    CHECK_FALSE(same_group(AbelianGroup{0, {BigInt(4)}, 0},
                           AbelianGroup{0, {BigInt(2), BigInt(2)}, 0}));
    // Z/6 coefficient convention vs torsion convention
    CHECK(same_group(AbelianGroup{1, {}, 6}, AbelianGroup{0, {BigInt(6)}, 0}));
    CHECK(same_group(AbelianGroup{1, {BigInt(2)}, 6}, AbelianGroup{0, {BigInt(2), BigInt(6)}, 0}));
    CHECK_FALSE(same_group(AbelianGroup{1, {}, 0}, AbelianGroup{0, {BigInt(6)}, 0}));
}
