#include "tq/topology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tq {

namespace {

std::string mask_str(std::uint64_t m) {
    std::string s = "{";
    for (int i = 0; i < 64; ++i)
        if (m >> i & 1) {
            if (s.size() > 1) s += ",";
            s += std::to_string(i + 1);
        }
    return s + "}";
}

void check_masks(int n, const std::vector<std::uint64_t>& opens) {
    if (n <= 0) throw StructureError("topology: size must be positive");
    if (n > 62) throw StructureError("topology: at most 62 points supported");
    const std::uint64_t full = ~std::uint64_t{0} >> (64 - n);
    for (auto m : opens)
        if (m & ~full)
            throw StructureError("topology: open set " + mask_str(m) + " has a point beyond " +
                                 std::to_string(n));
}

}  // namespace

ValidationReport validate_topology(int n, const std::vector<std::uint64_t>& opens) {
    check_masks(n, opens);
    const std::uint64_t full = ~std::uint64_t{0} >> (64 - n);
    std::set<std::uint64_t> family(opens.begin(), opens.end());
    ValidationReport report;
    if (!family.count(0)) report.add("missing-empty-set", {}, "∅ is not open");
    if (!family.count(full)) report.add("missing-full-set", {}, "the full set is not open");
    for (auto a : family)
        for (auto b : family) {
            if (a >= b) continue;
            if (!family.count(a | b)) {
                report.add("union-closure", {static_cast<long long>(a), static_cast<long long>(b)},
                           mask_str(a) + " ∪ " + mask_str(b) + " = " + mask_str(a | b) +
                               " is not open");
                return report;
            }
            if (!family.count(a & b)) {
                report.add("intersection-closure",
                           {static_cast<long long>(a), static_cast<long long>(b)},
                           mask_str(a) + " ∩ " + mask_str(b) + " = " + mask_str(a & b) +
                               " is not open");
                return report;
            }
        }
    return report;
}

FiniteTopology::FiniteTopology(int n, std::vector<std::uint64_t> opens) : n_(n) {
    auto report = validate_topology(n, opens);
    if (!report.ok) throw DomainError("not a topology: " + report.summary());
    std::set<std::uint64_t> family(opens.begin(), opens.end());
    opens_.assign(family.begin(), family.end());
    min_open_.assign(n, full_mask());
    for (int x = 0; x < n; ++x)
        for (auto m : opens_)
            if (m >> x & 1) min_open_[x] &= m;
}

FiniteTopology FiniteTopology::discrete(int n) {
    if (n <= 0) throw StructureError("topology: size must be positive");
    if (n > 20)
        throw StructureError("topology: discrete on more than 20 points is not materialized");
    std::vector<std::uint64_t> opens;
    const std::uint64_t full = ~std::uint64_t{0} >> (64 - n);
    for (std::uint64_t m = 0;; ++m) {
        opens.push_back(m);
        if (m == full) break;
    }
    return FiniteTopology(n, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(int n) {
    if (n <= 0) throw StructureError("topology: size must be positive");
    if (n > 62) throw StructureError("topology: at most 62 points supported");
    return FiniteTopology(n, {0, ~std::uint64_t{0} >> (64 - n)});
}

bool FiniteTopology::is_open(std::uint64_t s) const {
    return std::binary_search(opens_.begin(), opens_.end(), s);
}

bool FiniteTopology::is_discrete() const {
    return opens_.size() == (std::uint64_t{1} << n_);
}

bool is_continuous(const std::vector<int>& f, const FiniteTopology& dom,
                   const FiniteTopology& cod) {
    if (static_cast<int>(f.size()) != dom.size())
        throw StructureError("is_continuous: map size does not match the domain");
    for (int x : f)
        if (x < 0 || x >= cod.size())
            throw StructureError("is_continuous: value out of codomain range");
    for (int x = 0; x < dom.size(); ++x) {
        std::uint64_t image = 0;
        std::uint64_t u = dom.min_open(x);
        for (int p = 0; p < dom.size(); ++p)
            if (u >> p & 1) image |= std::uint64_t{1} << f[p];
        if (image & ~cod.min_open(f[x])) return false;
    }
    return true;
}

std::vector<std::vector<int>> path_components(const FiniteTopology& t) {
    const int n = t.size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if ((t.min_open(y) >> x & 1) || (t.min_open(x) >> y & 1)) {
                int a = find(x), b = find(y);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
    std::vector<std::vector<int>> comps;
    std::vector<int> index(n, -1);
    for (int x = 0; x < n; ++x) {
        int root = find(x);
        if (index[root] < 0) {
            index[root] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[index[root]].push_back(x);
    }
    return comps;
}

ValidationReport validate_topological_quandle(const FiniteQuandle& q, const FiniteTopology& t) {
    ValidationReport report;
    if (q.size() != t.size()) {
        report.add("size-mismatch", {q.size(), t.size()},
                   "quandle has " + std::to_string(q.size()) + " points, topology has " +
                       std::to_string(t.size()));
        return report;
    }
    const int n = q.size();

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const std::uint64_t target = t.min_open(q.op(x, y));
            const std::uint64_t ux = t.min_open(x), uy = t.min_open(y);
            for (int xp = 0; xp < n; ++xp) {
                if (!(ux >> xp & 1)) continue;
                for (int yp = 0; yp < n; ++yp) {
                    if (!(uy >> yp & 1)) continue;
                    if (!(target >> q.op(xp, yp) & 1)) {
                        report.add("joint-continuity", {x, y, xp, yp},
                                   std::to_string(xp + 1) + " ∈ U_" + std::to_string(x + 1) +
                                       ", " + std::to_string(yp + 1) + " ∈ U_" +
                                       std::to_string(y + 1) + " but " + std::to_string(xp + 1) +
                                       " ▷ " + std::to_string(yp + 1) + " = " +
                                       std::to_string(q.op(xp, yp) + 1) + " ∉ U_" +
                                       std::to_string(q.op(x, y) + 1));
                        return report;
                    }
                }
            }
        }

    for (int y = 0; y < n; ++y)
        for (auto open : t.opens()) {
            std::uint64_t image = 0;
            for (int x = 0; x < n; ++x)
                if (open >> x & 1) image |= std::uint64_t{1} << q.op(x, y);
            if (!t.is_open(image)) {
                report.add("open-image", {y, static_cast<long long>(open)},
                           "β_" + std::to_string(y + 1) + " maps " + mask_str(open) +
                               " to " + mask_str(image) + ", which is not open");
                return report;
            }
        }
    return report;
}

TopologicalQuandle::TopologicalQuandle(FiniteQuandle q, FiniteTopology t)
    : q_(std::move(q)), t_(std::move(t)) {
    auto report = validate_topological_quandle(q_, t_);
    if (!report.ok) throw DomainError("not a topological quandle: " + report.summary());
    comps_ = path_components(t_);
    comp_of_.assign(q_.size(), 0);
    for (int c = 0; c < static_cast<int>(comps_.size()); ++c)
        for (int x : comps_[c]) comp_of_[x] = c;
}

}  // namespace tq
