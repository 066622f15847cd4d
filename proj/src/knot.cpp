#include "tq/knot.hpp"

#include <algorithm>
#include <set>

#include "tq/report.hpp"

namespace tq {

namespace {

int upstream_arc(const Crossing& c) { return c.sign > 0 ? c.from : c.to; }
int downstream_arc(const Crossing& c) { return c.sign > 0 ? c.to : c.from; }

std::string arc_str(int a) { return std::to_string(a + 1); }

std::set<std::vector<int>> as_partition(const std::vector<std::vector<int>>& comps) {
    std::set<std::vector<int>> s;
    for (auto c : comps) {
        std::sort(c.begin(), c.end());
        s.insert(std::move(c));
    }
    return s;
}

}  // namespace

Diagram::Diagram(int arc_count, std::vector<Crossing> crossings,
                 std::optional<std::vector<std::vector<int>>> components)
    : arc_count_(arc_count), crossings_(std::move(crossings)) {
    if (arc_count_ < 0) throw StructureError("diagram: negative arc count");
    for (size_t k = 0; k < crossings_.size(); ++k) {
        const Crossing& c = crossings_[k];
        for (int a : {c.over, c.from, c.to})
            if (a < 0 || a >= arc_count_)
                throw StructureError("crossing " + std::to_string(k + 1) + ": arc " +
                                     arc_str(a) + " out of range");
        if (c.sign != 1 && c.sign != -1)
            throw StructureError("crossing " + std::to_string(k + 1) + ": sign must be +1 or -1");
    }

    std::vector<int> ups(arc_count_, 0), downs(arc_count_, 0);
    std::vector<int> succ(arc_count_, -1);
    for (const Crossing& c : crossings_) {
        ++ups[upstream_arc(c)];
        ++downs[downstream_arc(c)];
        succ[upstream_arc(c)] = downstream_arc(c);
    }
    for (int a = 0; a < arc_count_; ++a) {
        const bool closed = ups[a] == 1 && downs[a] == 1;
        const bool loop = ups[a] == 0 && downs[a] == 0;
        if (!closed && !loop)
            throw DomainError("arc " + arc_str(a) + " is under-upstream " +
                              std::to_string(ups[a]) + " and under-downstream " +
                              std::to_string(downs[a]) + " times; a closed diagram needs 1/1 or 0/0");
    }

    std::vector<bool> seen(arc_count_, false);
    std::vector<std::vector<int>> inferred;
    for (int a = 0; a < arc_count_; ++a) {
        if (seen[a]) continue;
        std::vector<int> cycle;
        int cur = a;
        do {
            seen[cur] = true;
            cycle.push_back(cur);
            cur = succ[cur];
        } while (cur >= 0 && cur != a);
        inferred.push_back(std::move(cycle));
    }
    if (components && as_partition(*components) != as_partition(inferred))
        throw DomainError("supplied link components do not match the diagram");
    comps_ = std::move(inferred);
}

namespace {

struct ArcMerge {
    std::vector<int> parent;
    explicit ArcMerge(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a < b) parent[b] = a;
        else parent[a] = b;
    }
};

}  // namespace

Diagram from_braid(const std::vector<int>& word, int strands) {
    if (strands < 1) throw StructureError("braid: needs at least one strand");
    for (int letter : word) {
        int i = letter > 0 ? letter : -letter;
        if (i < 1 || i >= strands)
            throw StructureError("braid letter " + std::to_string(letter) +
                                 " out of range for " + std::to_string(strands) + " strands");
    }

    std::vector<int> arc_at(strands);  // current arc at each position
    for (int i = 0; i < strands; ++i) arc_at[i] = i;
    int next_arc = strands;
    std::vector<Crossing> crossings;
    for (int letter : word) {
        const int p = (letter > 0 ? letter : -letter) - 1;
        if (letter > 0) {
            crossings.push_back({arc_at[p], arc_at[p + 1], next_arc, +1});
            arc_at[p + 1] = next_arc++;
        } else {
            crossings.push_back({arc_at[p + 1], next_arc, arc_at[p], -1});
            arc_at[p] = next_arc++;
        }
        std::swap(arc_at[p], arc_at[p + 1]);
    }

    ArcMerge merge(next_arc);
    for (int i = 0; i < strands; ++i) merge.unite(i, arc_at[i]);
    std::vector<int> label(next_arc, -1);
    int dense = 0;
    for (int a = 0; a < next_arc; ++a) {
        int r = merge.find(a);
        if (label[r] < 0) label[r] = dense++;
        label[a] = label[r];
    }
    for (Crossing& c : crossings) {
        c.over = label[c.over];
        c.from = label[c.from];
        c.to = label[c.to];
    }
    return Diagram(dense, std::move(crossings));
}

namespace {

// Backtracking coloring search over one path component with unit
// propagation along crossings touching the newly colored arc.
struct ColoringSearch {
    const Diagram& d;
    const FiniteQuandle& q;
    const std::vector<int>& palette;
    std::vector<std::vector<int>> arc_crossings;  // arc -> crossing indices
    std::vector<int> color;
    std::vector<Coloring>& out;
    int component;

    ColoringSearch(const Diagram& dia, const FiniteQuandle& qu, const std::vector<int>& pal,
                   int comp, std::vector<Coloring>& sink)
        : d(dia), q(qu), palette(pal), color(dia.arc_count(), -1), out(sink), component(comp) {
        arc_crossings.resize(d.arc_count());
        for (size_t k = 0; k < d.crossings().size(); ++k) {
            const Crossing& c = d.crossings()[k];
            for (int a : {c.over, c.from, c.to}) {
                auto& v = arc_crossings[a];
                if (v.empty() || v.back() != static_cast<int>(k)) v.push_back(static_cast<int>(k));
            }
        }
    }

    bool assign(int arc, int value, std::vector<int>& trail) {
        if (color[arc] >= 0) return color[arc] == value;
        color[arc] = value;
        trail.push_back(arc);
        for (int k : arc_crossings[arc]) {
            const Crossing& c = d.crossings()[k];
            if (color[c.over] < 0) continue;
            if (color[c.from] >= 0) {
                if (!assign(c.to, q.op(color[c.from], color[c.over]), trail)) return false;
            } else if (color[c.to] >= 0) {
                if (!assign(c.from, q.op_inv(color[c.to], color[c.over]), trail)) return false;
            }
        }
        return true;
    }

    void search() {
        int arc = -1;
        for (int a = 0; a < d.arc_count(); ++a)
            if (color[a] < 0) { arc = a; break; }
        if (arc < 0) {
            for (const Crossing& c : d.crossings())
                if (color[c.to] != q.op(color[c.from], color[c.over])) return;
            out.push_back({component, color});
            return;
        }
        for (int value : palette) {
            std::vector<int> trail;
            if (assign(arc, value, trail)) search();
            for (int a : trail) color[a] = -1;
        }
    }
};

}  // namespace

std::vector<Coloring> colorings(const Diagram& d, const TopologicalQuandle& tq) {
    std::vector<Coloring> out;
    const auto& comps = tq.components();
    for (size_t alpha = 0; alpha < comps.size(); ++alpha) {
        ColoringSearch search(d, tq.quandle(), comps[alpha], static_cast<int>(alpha), out);
        search.search();
    }
    std::sort(out.begin(), out.end(), [](const Coloring& a, const Coloring& b) {
        if (a.component != b.component) return a.component < b.component;
        return a.colors < b.colors;
    });
    return out;
}

long long coloring_count(const Diagram& d, const TopologicalQuandle& tq) {
    return static_cast<long long>(colorings(d, tq).size());
}

void LaurentPoly::add_term(long long exponent, long long coeff) {
    if (coeff == 0) return;
    auto it = terms.find(exponent);
    if (it == terms.end()) terms.emplace(exponent, coeff);
    else if ((it->second += coeff) == 0) terms.erase(it);
}

long long LaurentPoly::coeff(long long exponent) const {
    auto it = terms.find(exponent);
    return it == terms.end() ? 0 : it->second;
}

long long LaurentPoly::eval_at_one() const {
    long long s = 0;
    for (const auto& [e, c] : terms) s += c;
    return s;
}

LaurentPoly LaurentPoly::constant(long long c) {
    LaurentPoly p;
    p.add_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(long long exponent, long long coeff) {
    LaurentPoly p;
    p.add_term(exponent, coeff);
    return p;
}

std::string LaurentPoly::str() const {
    if (terms.empty()) return "0";
    std::vector<std::pair<long long, long long>> ordered(terms.begin(), terms.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        long long aa = a.first < 0 ? -a.first : a.first;
        long long bb = b.first < 0 ? -b.first : b.first;
        if (aa != bb) return aa < bb;
        return a.first > b.first;
    });
    std::string s;
    for (size_t i = 0; i < ordered.size(); ++i) {
        auto [e, c] = ordered[i];
        if (i > 0) s += " + ";
        std::string power = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
        if (power.empty()) s += std::to_string(c);
        else if (c == 1) s += power;
        else s += std::to_string(c) + "*" + power;
    }
    return s;
}

LaurentPoly state_sum(const Diagram& d, const TopologicalQuandle& tq, const Cochain1& phi) {
    if (!is_cocycle(tq, phi, CoefficientGroup::infinite_cyclic()))
        throw DomainError("state sum needs a 1-cocycle over the infinite cyclic group");
    LaurentPoly poly;
    for (const Coloring& col : colorings(d, tq)) {
        long long e = 0;
        for (const Crossing& c : d.crossings())
            e += c.sign * phi.value(col.colors[c.from], col.colors[c.over]);
        poly.add_term(e, 1);
    }
    return poly;
}

ReidemeisterMove ReidemeisterMove::r1_insert(int arc, int sign, bool over_downstream) {
    ReidemeisterMove m;
    m.kind = Kind::R1Insert;
    m.arc = arc;
    m.sign = sign;
    m.over_downstream = over_downstream;
    return m;
}

ReidemeisterMove ReidemeisterMove::r1_delete(int crossing) {
    ReidemeisterMove m;
    m.kind = Kind::R1Delete;
    m.site[0] = crossing;
    return m;
}

ReidemeisterMove ReidemeisterMove::r2_insert(int under_arc, int over_arc, bool antiparallel,
                                             int sign) {
    ReidemeisterMove m;
    m.kind = Kind::R2Insert;
    m.arc = under_arc;
    m.over_arc = over_arc;
    m.antiparallel = antiparallel;
    m.sign = sign;
    return m;
}

ReidemeisterMove ReidemeisterMove::r2_delete(int c1, int c2) {
    ReidemeisterMove m;
    m.kind = Kind::R2Delete;
    m.site[0] = c1;
    m.site[1] = c2;
    return m;
}

ReidemeisterMove ReidemeisterMove::r3(int c1, int c2, int c3, bool forward) {
    ReidemeisterMove m;
    m.kind = Kind::R3;
    m.site[0] = c1;
    m.site[1] = c2;
    m.site[2] = c3;
    m.forward = forward;
    return m;
}

namespace {

void check_arc(const Diagram& d, int a, const char* what) {
    if (a < 0 || a >= d.arc_count())
        throw StructureError(std::string(what) + ": arc " + arc_str(a) + " out of range");
}

void check_site(const Diagram& d, int k) {
    if (k < 0 || k >= static_cast<int>(d.crossings().size()))
        throw StructureError("move site: crossing " + std::to_string(k + 1) + " out of range");
}

// The crossing index (if any) where `arc` is the travel-upstream under-arc.
int end_crossing(const Diagram& d, int arc) {
    for (size_t k = 0; k < d.crossings().size(); ++k)
        if (upstream_arc(d.crossings()[k]) == arc) return static_cast<int>(k);
    return -1;
}

bool is_over_somewhere(const Diagram& d, int arc) {
    for (const Crossing& c : d.crossings())
        if (c.over == arc) return true;
    return false;
}

Diagram drop_arcs(int arc_count, std::vector<Crossing> crossings, std::vector<int> removed) {
    std::sort(removed.begin(), removed.end());
    std::vector<int> label(arc_count, -1);
    int dense = 0;
    for (int a = 0; a < arc_count; ++a) {
        if (std::binary_search(removed.begin(), removed.end(), a)) continue;
        label[a] = dense++;
    }
    for (Crossing& c : crossings) {
        c.over = label[c.over];
        c.from = label[c.from];
        c.to = label[c.to];
    }
    return Diagram(dense, std::move(crossings));
}

Diagram r1_insert_apply(const Diagram& d, const ReidemeisterMove& m) {
    check_arc(d, m.arc, "R1 insert");
    if (m.sign != 1 && m.sign != -1) throw StructureError("R1 insert: sign must be +1 or -1");
    auto crossings = d.crossings();
    const int tail = end_crossing(d, m.arc);
    if (tail < 0) {
        // Underpass-free loop: the kink closes onto the same arc.
        Crossing kink{m.arc, m.arc, m.arc, m.sign};
        crossings.push_back(kink);
        return Diagram(d.arc_count(), std::move(crossings));
    }
    const int fresh = d.arc_count();
    Crossing& e = crossings[tail];
    if (e.sign > 0) e.from = fresh;
    else e.to = fresh;
    const int over = m.over_downstream ? fresh : m.arc;
    Crossing kink{over, m.sign > 0 ? m.arc : fresh, m.sign > 0 ? fresh : m.arc, m.sign};
    crossings.push_back(kink);
    return Diagram(d.arc_count() + 1, std::move(crossings));
}

Diagram r1_delete_apply(const Diagram& d, const ReidemeisterMove& m) {
    check_site(d, m.site[0]);
    const Crossing c = d.crossings()[m.site[0]];
    const int u = upstream_arc(c), w = downstream_arc(c);
    if (c.over != u && c.over != w)
        throw DomainError("R1 delete: crossing " + std::to_string(m.site[0] + 1) +
                          " is not a kink");
    auto crossings = d.crossings();
    crossings.erase(crossings.begin() + m.site[0]);
    if (u == w) return Diagram(d.arc_count(), std::move(crossings));
    for (Crossing& x : crossings) {
        if (x.over == w) x.over = u;
        if (x.from == w) x.from = u;
        if (x.to == w) x.to = u;
    }
    return drop_arcs(d.arc_count(), std::move(crossings), {w});
}

Diagram r2_insert_apply(const Diagram& d, const ReidemeisterMove& m) {
    check_arc(d, m.arc, "R2 insert");
    check_arc(d, m.over_arc, "R2 insert");
    if (m.sign != 1 && m.sign != -1) throw StructureError("R2 insert: sign must be +1 or -1");
    auto crossings = d.crossings();
    const int tail = end_crossing(d, m.arc);
    const int b = m.arc, a = m.over_arc;
    const int middle = d.arc_count();
    int arc_total = d.arc_count() + 1;
    int last = b;  // downstream piece; stays b for an underpass-free loop
    if (tail >= 0) {
        last = arc_total++;
        Crossing& e = crossings[tail];
        if (e.sign > 0) e.from = last;
        else e.to = last;
    }
    Crossing first, second;
    if (!m.antiparallel) {
        first = {a, b, middle, +1};
        second = {a, last, middle, -1};
    } else {
        first = {a, middle, b, -1};
        second = {a, middle, last, +1};
    }
    const int travel_first_sign = m.antiparallel ? -1 : +1;
    if (m.sign == travel_first_sign) {
        crossings.push_back(first);
        crossings.push_back(second);
    } else {
        crossings.push_back(second);
        crossings.push_back(first);
    }
    return Diagram(arc_total, std::move(crossings));
}

Diagram r2_delete_apply(const Diagram& d, const ReidemeisterMove& m) {
    check_site(d, m.site[0]);
    check_site(d, m.site[1]);
    if (m.site[0] == m.site[1]) throw StructureError("R2 delete: the two crossings must differ");
    const Crossing c1 = d.crossings()[m.site[0]], c2 = d.crossings()[m.site[1]];
    if (c1.over != c2.over || c1.sign == c2.sign)
        throw DomainError("R2 delete: crossings are not an opposite-sign pair over one arc");
    const Crossing& pos = c1.sign > 0 ? c1 : c2;
    const Crossing& neg = c1.sign > 0 ? c2 : c1;
    int middle, b, last;
    if (pos.to == neg.to) {  // poke across and back, shared target slot
        middle = pos.to;
        b = pos.from;
        last = neg.from;
    } else if (pos.from == neg.from) {  // shared source slot
        middle = pos.from;
        b = neg.to;
        last = pos.to;
    } else {
        throw DomainError("R2 delete: crossings do not share a middle arc");
    }
    if (is_over_somewhere(d, middle))
        throw DomainError("R2 delete: middle arc " + arc_str(middle) +
                          " still passes over a crossing");
    auto crossings = d.crossings();
    const int hi = std::max(m.site[0], m.site[1]), lo = std::min(m.site[0], m.site[1]);
    crossings.erase(crossings.begin() + hi);
    crossings.erase(crossings.begin() + lo);
    std::vector<int> removed{middle};
    for (Crossing& x : crossings) {
        if (x.over == middle) x.over = b;
        if (x.from == middle) x.from = b;
        if (x.to == middle) x.to = b;
    }
    if (last != b) {
        removed.push_back(last);
        for (Crossing& x : crossings) {
            if (x.over == last) x.over = b;
            if (x.from == last) x.from = b;
            if (x.to == last) x.to = b;
        }
    }
    return drop_arcs(d.arc_count(), std::move(crossings), std::move(removed));
}

Diagram r3_apply(const Diagram& d, const ReidemeisterMove& m) {
    for (int i = 0; i < 3; ++i) check_site(d, m.site[i]);
    if (m.site[0] == m.site[1] || m.site[0] == m.site[2] || m.site[1] == m.site[2])
        throw StructureError("R3: the three crossings must differ");
    const Crossing c1 = d.crossings()[m.site[0]], c2 = d.crossings()[m.site[1]],
                   c3 = d.crossings()[m.site[2]];
    if (c1.sign != 1 || c2.sign != 1 || c3.sign != 1)
        throw DomainError("R3: all three crossings must be positive");
    auto crossings = d.crossings();
    if (m.forward) {
        // (a over b), (a over c), (b over c)  ->  (b over c), (a over c), (a over b)
        if (c1.over != c2.over || c3.over != c1.to || c3.from != c2.to)
            throw DomainError("R3: crossings do not match the slide pattern");
        const int a = c1.over, b0 = c1.from, b1 = c1.to, c0 = c2.from, cc1 = c2.to, c2v = c3.to;
        crossings[m.site[0]] = {b0, c0, cc1, +1};
        crossings[m.site[1]] = {a, cc1, c2v, +1};
        crossings[m.site[2]] = {a, b0, b1, +1};
    } else {
        if (c2.over != c3.over || c1.over != c3.from || c1.to != c2.from)
            throw DomainError("R3: crossings do not match the slide pattern");
        const int a = c2.over, b0 = c3.from, b1 = c3.to, c0 = c1.from, cc1 = c1.to, c2v = c2.to;
        crossings[m.site[0]] = {a, b0, b1, +1};
        crossings[m.site[1]] = {a, c0, cc1, +1};
        crossings[m.site[2]] = {b1, cc1, c2v, +1};
    }
    return Diagram(d.arc_count(), std::move(crossings));
}

}  // namespace

Diagram apply_reidemeister(const Diagram& d, const ReidemeisterMove& move) {
    switch (move.kind) {
        case ReidemeisterMove::Kind::R1Insert: return r1_insert_apply(d, move);
        case ReidemeisterMove::Kind::R1Delete: return r1_delete_apply(d, move);
        case ReidemeisterMove::Kind::R2Insert: return r2_insert_apply(d, move);
        case ReidemeisterMove::Kind::R2Delete: return r2_delete_apply(d, move);
        case ReidemeisterMove::Kind::R3: return r3_apply(d, move);
    }
    throw StructureError("unknown move kind");
}

}  // namespace tq
