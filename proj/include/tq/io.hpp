#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "tq/knot.hpp"
#include "tq/topology.hpp"

namespace tq {

/*
 * File formats, all 1-indexed:
 *
 * quandle            { "size": n, "table": [[...]], "name": optional }
 * topological quandle  adds "topology": "discrete" | "indiscrete" | [[1],[2,3]]
 *                    (∅ and the full set are implied in the open list)
 * diagram            { "arcs": n, "crossings": [{"over","from","to","sign"}],
 *                      "components": optional [[arcs]] }
 *
 * parse_* throws StructureError for malformed documents; raw accessors
 * return unvalidated data so callers can produce ValidationReports.
 */

struct QuandleDoc {
    std::vector<std::vector<int>> table;  // 0-indexed
    std::string name;
    bool has_topology = false;
    std::vector<std::uint64_t> opens;  // with implied ∅ / full set added
};

QuandleDoc parse_quandle_doc(const nlohmann::json& j);
QuandleDoc load_quandle_doc(const std::string& path);

TopologicalQuandle make_topological_quandle(const QuandleDoc& doc);  // DomainError on axioms

Diagram parse_diagram(const nlohmann::json& j);
Diagram load_diagram(const std::string& path);

nlohmann::json to_json(const FiniteQuandle& q);
nlohmann::json to_json(const FiniteTopology& t);
nlohmann::json to_json(const TopologicalQuandle& tq);
nlohmann::json to_json(const Diagram& d);
nlohmann::json to_json(const AbelianGroup& g);
nlohmann::json to_json(const Cochain1& c);
nlohmann::json to_json(const LaurentPoly& p);

Cochain1 cochain_from_json(const nlohmann::json& j);  // [[x, y, exponent], ...]

nlohmann::json load_json_file(const std::string& path);

}  // namespace tq
