#include "tq/io.hpp"

#include <fstream>

#include "tq/report.hpp"

namespace tq {

using nlohmann::json;

namespace {

int int_field(const json& j, const std::string& key) {
    if (!j.contains(key)) throw StructureError("missing field \"" + key + "\"");
    if (!j[key].is_number_integer()) throw StructureError("field \"" + key + "\" must be an integer");
    return j[key].get<int>();
}

int int_value(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw StructureError(where + " must be an integer");
    return v.get<int>();
}

}  // namespace

QuandleDoc parse_quandle_doc(const json& j) {
    if (!j.is_object()) throw StructureError("quandle document must be a JSON object");
    QuandleDoc doc;
    const int n = int_field(j, "size");
    if (n < 1) throw StructureError("\"size\" must be positive");
    if (n > 62) throw StructureError("at most 62 points supported");
    if (!j.contains("table") || !j["table"].is_array())
        throw StructureError("missing or malformed \"table\"");
    doc.table.resize(n);
    if (static_cast<int>(j["table"].size()) != n)
        throw StructureError("\"table\" must have " + std::to_string(n) + " rows");
    for (int x = 0; x < n; ++x) {
        const auto& row = j["table"][x];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw StructureError("table row " + std::to_string(x + 1) + " must have " +
                                 std::to_string(n) + " entries");
        doc.table[x].resize(n);
        for (int y = 0; y < n; ++y) {
            int v = int_value(row[y], "table entry");
            if (v < 1 || v > n)
                throw StructureError("table entry at (" + std::to_string(x + 1) + "," +
                                     std::to_string(y + 1) + ") out of range");
            doc.table[x][y] = v - 1;
        }
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw StructureError("\"name\" must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("topology")) {
        doc.has_topology = true;
        const auto& t = j["topology"];
        const std::uint64_t full = ~std::uint64_t{0} >> (64 - n);
        if (t.is_string()) {
            const std::string s = t.get<std::string>();
            if (s == "discrete") {
                if (n > 20)
                    throw StructureError("discrete topology on more than 20 points is not materialized");
                for (std::uint64_t m = 0;; ++m) {
                    doc.opens.push_back(m);
                    if (m == full) break;
                }
            } else if (s == "indiscrete") {
                doc.opens = {0, full};
            } else {
                throw StructureError("\"topology\" string must be \"discrete\" or \"indiscrete\"");
            }
        } else if (t.is_array()) {
            doc.opens = {0, full};
            for (const auto& open : t) {
                if (!open.is_array()) throw StructureError("each open set must be an array");
                std::uint64_t mask = 0;
                for (const auto& p : open) {
                    int v = int_value(p, "open set point");
                    if (v < 1 || v > n)
                        throw StructureError("open set point " + std::to_string(v) +
                                             " out of range");
                    mask |= std::uint64_t{1} << (v - 1);
                }
                doc.opens.push_back(mask);
            }
        } else {
            throw StructureError("\"topology\" must be a string or an array of open sets");
        }
    }
    return doc;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw StructureError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw StructureError(path + ": " + e.what());
    }
    return j;
}

QuandleDoc load_quandle_doc(const std::string& path) {
    return parse_quandle_doc(load_json_file(path));
}

TopologicalQuandle make_topological_quandle(const QuandleDoc& doc) {
    FiniteQuandle q(doc.table, doc.name);
    FiniteTopology t = doc.has_topology
                           ? FiniteTopology(q.size(), doc.opens)
                           : FiniteTopology::discrete(q.size());
    return TopologicalQuandle(std::move(q), std::move(t));
}

Diagram parse_diagram(const json& j) {
    if (!j.is_object()) throw StructureError("diagram document must be a JSON object");
    const int arcs = int_field(j, "arcs");
    if (!j.contains("crossings") || !j["crossings"].is_array())
        throw StructureError("missing or malformed \"crossings\"");
    std::vector<Crossing> crossings;
    for (const auto& c : j["crossings"]) {
        if (!c.is_object()) throw StructureError("each crossing must be an object");
        Crossing x;
        x.over = int_field(c, "over") - 1;
        x.from = int_field(c, "from") - 1;
        x.to = int_field(c, "to") - 1;
        x.sign = int_field(c, "sign");
        crossings.push_back(x);
    }
    std::optional<std::vector<std::vector<int>>> comps;
    if (j.contains("components")) {
        if (!j["components"].is_array()) throw StructureError("\"components\" must be an array");
        comps.emplace();
        for (const auto& comp : j["components"]) {
            if (!comp.is_array()) throw StructureError("each component must be an array of arcs");
            std::vector<int> arcs_list;
            for (const auto& a : comp) arcs_list.push_back(int_value(a, "component arc") - 1);
            comps->push_back(std::move(arcs_list));
        }
    }
    return Diagram(arcs, std::move(crossings), std::move(comps));
}

Diagram load_diagram(const std::string& path) { return parse_diagram(load_json_file(path)); }

json to_json(const FiniteQuandle& q) {
    json rows = json::array();
    for (int x = 0; x < q.size(); ++x) {
        json row = json::array();
        for (int y = 0; y < q.size(); ++y) row.push_back(q.op(x, y) + 1);
        rows.push_back(std::move(row));
    }
    json j{{"size", q.size()}, {"table", std::move(rows)}};
    if (!q.name().empty()) j["name"] = q.name();
    return j;
}

json to_json(const FiniteTopology& t) {
    json opens = json::array();
    for (std::uint64_t mask : t.opens()) {
        json open = json::array();
        for (int x = 0; x < t.size(); ++x)
            if (mask >> x & 1) open.push_back(x + 1);
        opens.push_back(std::move(open));
    }
    return json{{"size", t.size()}, {"opens", std::move(opens)}};
}

json to_json(const TopologicalQuandle& tq) {
    json j = to_json(tq.quandle());
    json opens = json::array();
    for (std::uint64_t mask : tq.topology().opens()) {
        if (mask == 0 || mask == (~std::uint64_t{0} >> (64 - tq.quandle().size()))) continue;
        json open = json::array();
        for (int x = 0; x < tq.quandle().size(); ++x)
            if (mask >> x & 1) open.push_back(x + 1);
        opens.push_back(std::move(open));
    }
    j["topology"] = std::move(opens);
    json comps = json::array();
    for (const auto& comp : tq.components()) {
        json c = json::array();
        for (int x : comp) c.push_back(x + 1);
        comps.push_back(std::move(c));
    }
    j["components"] = std::move(comps);
    return j;
}

json to_json(const Diagram& d) {
    json crossings = json::array();
    for (const Crossing& c : d.crossings())
        crossings.push_back(json{{"over", c.over + 1},
                                 {"from", c.from + 1},
                                 {"to", c.to + 1},
                                 {"sign", c.sign}});
    json comps = json::array();
    for (const auto& comp : d.components()) {
        json c = json::array();
        for (int a : comp) c.push_back(a + 1);
        comps.push_back(std::move(c));
    }
    return json{{"arcs", d.arc_count()},
                {"crossings", std::move(crossings)},
                {"components", std::move(comps)}};
}

json to_json(const AbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion) torsion.push_back(d.str());
    json j{{"free_rank", g.free_rank}, {"torsion", std::move(torsion)}, {"pretty", g.str()}};
    if (g.modulus != 0) j["modulus"] = g.modulus;
    if (g.truncated) j["truncated"] = true;
    return j;
}

json to_json(const Cochain1& c) {
    json entries = json::array();
    for (const auto& [key, val] : c.entries)
        entries.push_back(json::array({key.first + 1, key.second + 1, val}));
    return entries;
}

json to_json(const LaurentPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms) terms.push_back(json::array({e, c}));
    return json{{"terms", std::move(terms)}, {"pretty", p.str()}};
}

Cochain1 cochain_from_json(const json& j) {
    if (!j.is_array()) throw StructureError("cochain must be an array of [x, y, value] triples");
    Cochain1 c;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 3)
            throw StructureError("cochain entry must be an [x, y, value] triple");
        int x = int_value(e[0], "cochain x") - 1;
        int y = int_value(e[1], "cochain y") - 1;
        long long v = e[2].is_number_integer() ? e[2].get<long long>()
                                               : throw StructureError("cochain value must be an integer");
        c.set(x, y, c.value(x, y) + v);
    }
    return c;
}

}  // namespace tq
