#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tq/cocycle.hpp"
#include "tq/topology.hpp"

namespace tq {

/*
 * Crossing of an oriented diagram, arcs 0-indexed.  `over` is the over-arc;
 * `from` and `to` are the under-arcs on the two sides, named by the normal
 * of the over-arc (it points from `from` to `to`), so the coloring rule is
 * always  color(to) = color(from) ▷ color(over).  For sign +1 the under
 * strand travels from `from` to `to`; for sign −1 it travels from `to`
 * to `from`.
 */
struct Crossing {
    int over = 0, from = 0, to = 0;
    int sign = +1;
    bool operator==(const Crossing& o) const {
        return over == o.over && from == o.from && to == o.to && sign == o.sign;
    }
};

/*
 * Closed oriented diagram: every arc is the travel-upstream under-arc of
 * exactly one crossing and travel-downstream of exactly one, or sits in no
 * under-slot at all (a crossing-free loop).  Link components are the cycles
 * of the travel-successor relation plus the free loops.
 */
class Diagram {
  public:
    Diagram() = default;
    // Throws StructureError on malformed indices, DomainError when the
    // closedness invariant fails or supplied components don't match.
    Diagram(int arc_count, std::vector<Crossing> crossings,
            std::optional<std::vector<std::vector<int>>> components = std::nullopt);

    int arc_count() const { return arc_count_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<std::vector<int>>& components() const { return comps_; }

    bool operator==(const Diagram& o) const {
        return arc_count_ == o.arc_count_ && crossings_ == o.crossings_ && comps_ == o.comps_;
    }

  private:
    int arc_count_ = 0;
    std::vector<Crossing> crossings_;
    std::vector<std::vector<int>> comps_;  // arcs in travel order from smallest arc
};

/*
 * Closure of a braid word on `strands` strands, all strands oriented
 * downward.  Letter +i crosses the strand in position i over position i+1
 * (crossing sign +1); letter −i crosses it under (sign −1).  Arcs are
 * numbered by first appearance; the empty word yields the crossing-free
 * unlink on `strands` arcs.
 */
Diagram from_braid(const std::vector<int>& word, int strands);

struct Coloring {
    int component = 0;        // path component index of the coloring's target
    std::vector<int> colors;  // colors[arc], points of tq
    bool operator==(const Coloring& o) const {
        return component == o.component && colors == o.colors;
    }
};

// All colorings with every arc colored from one path component, satisfying
// color(to) = color(from) ▷ color(over) at each crossing.  Canonical order:
// component index, then color vector lexicographically.
std::vector<Coloring> colorings(const Diagram& d, const TopologicalQuandle& tq);
long long coloring_count(const Diagram& d, const TopologicalQuandle& tq);

// Laurent polynomial in t with integer coefficients.
struct LaurentPoly {
    std::map<long long, long long> terms;  // exponent -> coefficient, zeros dropped

    void add_term(long long exponent, long long coeff);
    long long coeff(long long exponent) const;
    long long eval_at_one() const;
    static LaurentPoly constant(long long c);
    static LaurentPoly monomial(long long exponent, long long coeff = 1);
    // Terms by ascending |exponent|, positive before negative on ties:
    // "3 + 2*t", "6 + 2*t^-3", "0".
    std::string str() const;
    bool operator==(const LaurentPoly& o) const { return terms == o.terms; }
};

// Σ over colorings of Π over crossings of φ(color(from), color(over))^sign.
// φ must pass is_cocycle for the infinite-cyclic coefficient group.
LaurentPoly state_sum(const Diagram& d, const TopologicalQuandle& tq, const Cochain1& phi);

struct ReidemeisterMove {
    enum class Kind { R1Insert, R1Delete, R2Insert, R2Delete, R3 };
    Kind kind = Kind::R1Insert;

    // R1Insert: kink on `arc` with `sign`; the over strand is the
    // travel-downstream piece when over_downstream is set.
    // R1Delete: `site[0]` = crossing whose over-arc is one of its under-arcs.
    // R2Insert: push `over_arc` across `arc`; antiparallel selects the
    // middle-arc-upstream pattern; `sign` gives the first crossing's sign.
    // R2Delete: `site[0]`, `site[1]` = the paired crossings.
    // R3: `site` = the three crossings (a over b, a over c, b over c);
    // forward slides to (b over c, a over c, a over b), reverse undoes it.
    int arc = -1;
    int over_arc = -1;
    int sign = +1;
    bool over_downstream = false;
    bool antiparallel = false;
    bool forward = true;
    int site[3] = {-1, -1, -1};

    static ReidemeisterMove r1_insert(int arc, int sign, bool over_downstream);
    static ReidemeisterMove r1_delete(int crossing);
    static ReidemeisterMove r2_insert(int under_arc, int over_arc, bool antiparallel, int sign);
    static ReidemeisterMove r2_delete(int c1, int c2);
    static ReidemeisterMove r3(int c1, int c2, int c3, bool forward);
};

// DomainError when the move does not match the local pattern at the site.
Diagram apply_reidemeister(const Diagram& d, const ReidemeisterMove& move);

}  // namespace tq
