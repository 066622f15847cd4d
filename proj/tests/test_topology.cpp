#include <doctest.h>

#include <set>

#include "corpus.hpp"
#include "tq/io.hpp"
#include "tq/topology.hpp"

using namespace tq;

TEST_CASE("topology validation rules") {
    CHECK(validate_topology(3, {0, 0b111}).ok);
    CHECK(validate_topology(3, {0, 0b001, 0b110, 0b111}).ok);
    CHECK(validate_topology(1, {0, 1}).ok);
    CHECK(validate_topology(3, {0b111}).has("missing-empty-set"));
    CHECK(validate_topology(3, {0}).has("missing-full-set"));
    CHECK(validate_topology(3, {0, 0b001, 0b010, 0b111}).has("union-closure"));
    // unions of {1,2} and {2,3} are present, their intersection {2} is not
    CHECK(validate_topology(3, {0, 0b011, 0b110, 0b111}).has("intersection-closure"));
    // here the union {1,2,3} is missing too, and unions are checked first
    CHECK(validate_topology(4, {0, 0b0011, 0b0110, 0b1111}).has("union-closure"));
    CHECK_THROWS_AS(validate_topology(2, {0b100, 0b11}), StructureError);
    CHECK_THROWS_AS(validate_topology(0, {}), StructureError);
    CHECK_THROWS_AS(validate_topology(63, {}), StructureError);
}

TEST_CASE("minimal open sets") {
    FiniteTopology t(3, {0, 0b001, 0b110, 0b111});
    CHECK(t.min_open(0) == 0b001);
    CHECK(t.min_open(1) == 0b110);
    CHECK(t.min_open(2) == 0b110);
    CHECK(t.is_open(0b110));
    CHECK_FALSE(t.is_open(0b010));
    CHECK(FiniteTopology::discrete(3).is_discrete());
    CHECK(FiniteTopology::indiscrete(3).is_indiscrete());
    CHECK_FALSE(FiniteTopology::indiscrete(3).is_discrete());
    CHECK(FiniteTopology::discrete(1).is_indiscrete());  // one point: both
    CHECK_THROWS_AS(FiniteTopology(3, {0}), DomainError);
    CHECK_THROWS_AS(FiniteTopology::discrete(21), StructureError);
}

TEST_CASE("path components are specialization components") {
    FiniteQuandle m(tqtest::m_table());
    SUBCASE("the two-open topology splits off the fixed point") {
        TopologicalQuandle x(m, FiniteTopology(3, {0, 0b001, 0b110, 0b111}));
        CHECK(x.components() == std::vector<std::vector<int>>{{0}, {1, 2}});
        CHECK(x.component_of(0) == 0);
        CHECK(x.component_of(2) == 1);
    }
    SUBCASE("indiscrete is path connected") {
        TopologicalQuandle x(m, FiniteTopology::indiscrete(3));
        CHECK(x.components().size() == 1);
    }
    SUBCASE("discrete separates every point") {
        TopologicalQuandle x(m, FiniteTopology::discrete(3));
        CHECK(x.components().size() == 3);
    }
    SUBCASE("chains glue everything below the top block") {
        // opens ∅ ⊂ {1} ⊂ X: point 1 is in every neighborhood of 2 and 3
        FiniteTopology t(3, {0, 0b001, 0b111});
        CHECK(path_components(t) == std::vector<std::vector<int>>{{0, 1, 2}});
    }
}

TEST_CASE("continuity validation") {
    FiniteQuandle m(tqtest::m_table());
    SUBCASE("the paper topology on M is a topological quandle") {
        CHECK(validate_topological_quandle(m, FiniteTopology(3, {0, 0b001, 0b110, 0b111})).ok);
    }
    SUBCASE("discrete and indiscrete always pass") {
        for (const auto& q : tqtest::corpus_quandles()) {
            CHECK(validate_topological_quandle(q, FiniteTopology::discrete(q.size())).ok);
            CHECK(validate_topological_quandle(q, FiniteTopology::indiscrete(q.size())).ok);
        }
    }
    SUBCASE("joint continuity can fail on a chain") {
        // dihedral(3) with open {1}: β₂ maps it to {3}, which is not open
        auto r = validate_topological_quandle(dihedral_quandle(3), FiniteTopology(3, {0, 0b001, 0b111}));
        CHECK_FALSE(r.ok);
    }
    SUBCASE("size mismatch is reported") {
        CHECK(validate_topological_quandle(m, FiniteTopology::discrete(2)).has("size-mismatch"));
    }
}

TEST_CASE("chain topology enumeration counts ordered set partitions") {
    CHECK(tqtest::chain_topologies(1).size() == 1);
    CHECK(tqtest::chain_topologies(2).size() == 3);
    CHECK(tqtest::chain_topologies(3).size() == 13);
    CHECK(tqtest::chain_topologies(4).size() == 75);
    for (const auto& opens : tqtest::chain_topologies(4)) {
        CHECK(validate_topology(4, opens).ok);
        // chains: any two opens comparable
        for (auto a : opens)
            for (auto b : opens) CHECK(((a & b) == a || (a & b) == b));
    }
}

TEST_CASE("corpus members all validate") {
    auto all = tqtest::corpus();
    CHECK(all.size() > 50);
    std::set<std::pair<std::vector<std::vector<int>>, std::vector<std::uint64_t>>> seen;
    for (const auto& x : all) {
        CHECK(validate_topological_quandle(x.quandle(), x.topology()).ok);
        CHECK(seen.insert({x.quandle().table(), x.topology().opens()}).second);
    }
}

TEST_CASE("file loading round trips") {
    auto doc = load_quandle_doc(tqtest::data_path("m_tau.json"));
    CHECK(doc.table == tqtest::m_table());
    CHECK(doc.has_topology);
    TopologicalQuandle x = make_topological_quandle(doc);
    CHECK(x.components() == std::vector<std::vector<int>>{{0}, {1, 2}});
    CHECK(to_json(x)["size"] == 3);

    auto indiscrete = load_quandle_doc(tqtest::data_path("m_indiscrete.json"));
    CHECK(make_topological_quandle(indiscrete).topology().is_indiscrete());

    CHECK_THROWS_AS(make_topological_quandle(load_quandle_doc(tqtest::data_path("not_a_quandle.json"))),
                    DomainError);
    CHECK_THROWS_AS(load_quandle_doc(tqtest::data_path("missing_file.json")), StructureError);
    CHECK_THROWS_AS(parse_quandle_doc(nlohmann::json{{"size", 2}}), StructureError);
    CHECK_THROWS_AS(parse_quandle_doc(nlohmann::json{{"size", 2}, {"table", {{1, 1}, {9, 2}}}}),
                    StructureError);
}
