#include "tq/cocycle.hpp"

#include <array>
#include <numeric>

#include "tq/report.hpp"

namespace tq {

namespace {

std::string pair_str(int x, int y) {
    return "(" + std::to_string(x + 1) + "," + std::to_string(y + 1) + ")";
}

std::map<std::pair<int, int>, int> pair_index(const std::vector<std::pair<int, int>>& pairs) {
    std::map<std::pair<int, int>, int> idx;
    for (size_t i = 0; i < pairs.size(); ++i) idx.emplace(pairs[i], static_cast<int>(i));
    return idx;
}

// Component-homogeneous triples (p, q, r) with p ≠ q, q ≠ r, in
// component-then-lex order; these index the cocycle equations.
std::vector<std::array<int, 3>> equation_triples(const TopologicalQuandle& tq) {
    std::vector<std::array<int, 3>> triples;
    for (const auto& comp : tq.components())
        for (int p : comp)
            for (int q : comp)
                for (int r : comp) {
                    if (p == q || q == r) continue;
                    triples.push_back({p, q, r});
                }
    return triples;
}

// Rows: one cocycle equation per triple.  Columns: admissible pairs.
ZMat equation_matrix(const TopologicalQuandle& tq, const std::vector<std::pair<int, int>>& pairs) {
    const auto idx = pair_index(pairs);
    const auto triples = equation_triples(tq);
    const FiniteQuandle& q = tq.quandle();
    ZMat e(static_cast<int>(triples.size()), static_cast<int>(pairs.size()));
    for (size_t row = 0; row < triples.size(); ++row) {
        auto [p, s, r] = triples[row];
        auto add = [&](int x, int y, int c) {
            if (x == y) return;
            e.at(static_cast<int>(row), idx.at({x, y})) += c;
        };
        add(p, r, 1);
        add(q.op(p, s), r, -1);
        add(p, s, -1);
        add(q.op(p, r), q.op(s, r), 1);
    }
    return e;
}

// δ⁰ as a matrix: columns indexed by points, rows by admissible pairs.
ZMat point_coboundary_matrix(const TopologicalQuandle& tq,
                             const std::vector<std::pair<int, int>>& pairs) {
    const FiniteQuandle& q = tq.quandle();
    ZMat d(static_cast<int>(pairs.size()), q.size());
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto [x, y] = pairs[i];
        d.at(static_cast<int>(i), x) += 1;
        d.at(static_cast<int>(i), q.op(x, y)) -= 1;
    }
    return d;
}

std::vector<BigInt> vectorize(const Cochain1& c, const std::vector<std::pair<int, int>>& pairs) {
    const auto idx = pair_index(pairs);
    std::vector<BigInt> v(pairs.size());
    for (const auto& [key, val] : c.entries) v[idx.at(key)] = val;
    return v;
}

ZMat with_modulus_columns(const ZMat& g, long long modulus) {
    if (modulus == 0) return g;
    ZMat mid = ZMat::identity(g.rows());
    for (int i = 0; i < g.rows(); ++i) mid.at(i, i) = modulus;
    return g.hcat(mid);
}

// Columns of a solution/image lattice turned into canonical generators of
// the cochain group they span over the coefficient group.
CochainBasis basis_from_lattice(const ZMat& lattice, const std::vector<std::pair<int, int>>& pairs,
                                const CoefficientGroup& a) {
    ZMat h = hnf_columns(lattice);
    CochainBasis basis;
    for (int j = 0; j < h.cols(); ++j) {
        Cochain1 c;
        BigInt content = 0;
        for (int i = 0; i < h.rows(); ++i) {
            long long v = static_cast<long long>(h.at(i, j));
            v = a.reduce(v);
            if (v != 0) c.set(pairs[i].first, pairs[i].second, v);
            content = boost::multiprecision::gcd(content, BigInt(v));
        }
        if (a.modulus == 0) {
            basis.generators.push_back(std::move(c));
            basis.orders.push_back(0);
        } else if (!c.entries.empty()) {
            BigInt g = boost::multiprecision::gcd(content, BigInt(a.modulus));
            basis.generators.push_back(std::move(c));
            basis.orders.push_back(static_cast<long long>(BigInt(a.modulus) / g));
        }
    }
    return basis;
}

ZMat generators_matrix(const CochainBasis& basis, const std::vector<std::pair<int, int>>& pairs) {
    const auto idx = pair_index(pairs);
    ZMat g(static_cast<int>(pairs.size()), static_cast<int>(basis.generators.size()));
    for (size_t j = 0; j < basis.generators.size(); ++j)
        for (const auto& [key, val] : basis.generators[j].entries)
            g.at(idx.at(key), static_cast<int>(j)) = val;
    return g;
}

}  // namespace

CoefficientGroup CoefficientGroup::cyclic(long long m) {
    if (m <= 0) throw StructureError("cyclic coefficient group needs a positive modulus");
    return {m};
}

Cochain1 Cochain1::sub(const Cochain1& o) const {
    Cochain1 r = *this;
    for (const auto& [key, val] : o.entries) r.set(key.first, key.second, r.value(key.first, key.second) - val);
    return r;
}

Cochain1 Cochain1::scaled(long long k) const {
    Cochain1 r;
    if (k == 0) return r;
    for (const auto& [key, val] : entries) r.set(key.first, key.second, val * k);
    return r;
}

Cochain1 Cochain1::reduced(const CoefficientGroup& a) const {
    Cochain1 r;
    for (const auto& [key, val] : entries) r.set(key.first, key.second, a.reduce(val));
    return r;
}

std::vector<std::pair<int, int>> admissible_pairs(const TopologicalQuandle& tq) {
    std::vector<std::pair<int, int>> pairs;
    const int n = tq.quandle().size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && tq.component_of(x) == tq.component_of(y)) pairs.emplace_back(x, y);
    return pairs;
}

Cochain1 characteristic_cochain(const TopologicalQuandle& tq, int x, int y) {
    const int n = tq.quandle().size();
    if (x < 0 || x >= n || y < 0 || y >= n)
        throw StructureError("characteristic cochain: point out of range");
    if (x == y) throw DomainError("characteristic cochain: degenerate pair " + pair_str(x, y));
    if (tq.component_of(x) != tq.component_of(y))
        throw DomainError("characteristic cochain: pair " + pair_str(x, y) +
                          " crosses path components");
    Cochain1 c;
    c.set(x, y, 1);
    return c;
}

void validate_cochain(const TopologicalQuandle& tq, const Cochain1& c) {
    const int n = tq.quandle().size();
    for (const auto& [key, val] : c.entries) {
        auto [x, y] = key;
        if (x < 0 || x >= n || y < 0 || y >= n)
            throw DomainError("cochain entry out of range: " + pair_str(x, y));
        if (x == y) throw DomainError("cochain entry on degenerate pair " + pair_str(x, y));
        if (tq.component_of(x) != tq.component_of(y))
            throw DomainError("cochain entry " + pair_str(x, y) + " crosses path components");
        (void)val;
    }
}

bool is_cocycle(const TopologicalQuandle& tq, const Cochain1& phi, const CoefficientGroup& a) {
    validate_cochain(tq, phi);
    const FiniteQuandle& q = tq.quandle();
    for (const auto& [p, s, r] : equation_triples(tq)) {
        long long v = phi.value(p, r) - phi.value(q.op(p, s), r) - phi.value(p, s) +
                      phi.value(q.op(p, r), q.op(s, r));
        if (a.reduce(v) != 0) return false;
    }
    return true;
}

Cochain1 coboundary_of(const TopologicalQuandle& tq, const std::map<int, long long>& psi) {
    const FiniteQuandle& q = tq.quandle();
    auto at = [&](int s) {
        auto it = psi.find(s);
        return it == psi.end() ? 0LL : it->second;
    };
    for (const auto& [s, v] : psi) {
        if (s < 0 || s >= q.size())
            throw DomainError("point cochain entry out of range: " + std::to_string(s + 1));
        (void)v;
    }
    Cochain1 c;
    for (const auto& [x, y] : admissible_pairs(tq)) c.set(x, y, at(x) - at(q.op(x, y)));
    return c;
}

CochainBasis cocycle_space(const TopologicalQuandle& tq, const CoefficientGroup& a) {
    const auto pairs = admissible_pairs(tq);
    ZMat e = equation_matrix(tq, pairs);
    if (a.modulus == 0) return basis_from_lattice(kernel_basis(e), pairs, a);
    ZMat kernel = kernel_basis(with_modulus_columns(e, a.modulus));
    ZMat proj(static_cast<int>(pairs.size()), kernel.cols());
    for (int i = 0; i < proj.rows(); ++i)
        for (int j = 0; j < kernel.cols(); ++j) proj.at(i, j) = kernel.at(i, j);
    return basis_from_lattice(proj, pairs, a);
}

CochainBasis coboundary_space(const TopologicalQuandle& tq, const CoefficientGroup& a) {
    const auto pairs = admissible_pairs(tq);
    ZMat d = point_coboundary_matrix(tq, pairs);
    if (a.modulus != 0) {
        ZMat mid = ZMat::identity(static_cast<int>(pairs.size()));
        for (int i = 0; i < mid.rows(); ++i) mid.at(i, i) = a.modulus;
        d = d.hcat(mid);
    }
    return basis_from_lattice(d, pairs, a);
}

bool in_span(const TopologicalQuandle& tq, const CochainBasis& basis, const Cochain1& phi,
             const CoefficientGroup& a) {
    validate_cochain(tq, phi);
    const auto pairs = admissible_pairs(tq);
    ZMat g = with_modulus_columns(generators_matrix(basis, pairs), a.modulus);
    return LinearSolver(g).solve(vectorize(phi, pairs)).has_value();
}

CohomologousResult are_cohomologous(const TopologicalQuandle& tq, const CoefficientGroup& a,
                                    const Cochain1& phi, const Cochain1& phi2) {
    if (!is_cocycle(tq, phi, a) || !is_cocycle(tq, phi2, a))
        throw DomainError("cohomology comparison needs two cocycles");
    const auto pairs = admissible_pairs(tq);
    ZMat d = with_modulus_columns(point_coboundary_matrix(tq, pairs), a.modulus);
    auto sol = LinearSolver(d).solve(vectorize(phi.sub(phi2).reduced(a), pairs));
    CohomologousResult r;
    if (!sol) return r;
    r.cohomologous = true;
    const int n = tq.quandle().size();
    for (int s = 0; s < n; ++s) {
        long long v = a.reduce(static_cast<long long>((*sol)[s]));
        if (v != 0) r.witness[s] = v;
    }
    return r;
}

}  // namespace tq
