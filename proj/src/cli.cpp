#include "tq/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "tq/cocycle.hpp"
#include "tq/complex.hpp"
#include "tq/homology.hpp"
#include "tq/io.hpp"
#include "tq/knot.hpp"
#include "tq/report.hpp"

namespace tq {

namespace {

using nlohmann::json;

ComplexKind parse_kind(const std::string& s) {
    if (s == "bar-R") return ComplexKind::BarR;
    if (s == "bar-D") return ComplexKind::BarD;
    if (s == "bar-Q") return ComplexKind::BarQ;
    if (s == "classical-R") return ComplexKind::ClassicalR;
    if (s == "classical-D") return ComplexKind::ClassicalD;
    if (s == "classical-Q") return ComplexKind::ClassicalQ;
    throw StructureError("unknown complex kind \"" + s + "\"");
}

// "Z" or "Z/m" (homology); "t" or "Z/m" (cocycles).  Returns the modulus.
long long parse_coeffs(const std::string& s, bool multiplicative) {
    const std::string infinite = multiplicative ? "t" : "Z";
    if (s == infinite) return 0;
    if (s.rfind("Z/", 0) == 0) {
        try {
            size_t used = 0;
            long long m = std::stoll(s.substr(2), &used);
            if (used == s.size() - 2 && m >= 1) return m;
        } catch (const std::exception&) {
        }
    }
    throw StructureError("--coeffs must be \"" + infinite + "\" or \"Z/m\"");
}

json violations_json(const ValidationReport& r) {
    json v = json::array();
    for (const auto& x : r.violations) v.push_back(json{{"rule", x.rule}, {"detail", x.detail}});
    return json{{"ok", r.ok}, {"violations", std::move(v)}};
}

// Predicted rank of the biggest chain group, capped to avoid building
// complexes that cannot fit in memory.
long long bar_rank_bound(const TopologicalQuandle& tq, int degree, long long cap) {
    long long total = 0;
    for (const auto& comp : tq.components()) {
        long long r = 1;
        for (int i = 0; i <= degree + 1; ++i) {
            r *= static_cast<long long>(comp.size());
            if (r > cap) return cap + 1;
        }
        total += r;
        if (total > cap) return cap + 1;
    }
    return total;
}

long long classical_rank_bound(int n, int degree, long long cap) {
    long long r = 1;
    for (int i = 0; i < degree; ++i) {
        r *= n;
        if (r > cap) return cap + 1;
    }
    return r;
}

struct DiagramInput {
    std::string file;
    std::string braid;
    int strands = 0;
};

Diagram resolve_diagram(const DiagramInput& in) {
    if (!in.file.empty() && !in.braid.empty())
        throw StructureError("give either --diagram or --braid, not both");
    if (!in.file.empty()) return load_diagram(in.file);
    if (!in.braid.empty() || in.strands > 0) {
        if (in.strands < 1) throw StructureError("--braid needs --strands");
        std::istringstream ss(in.braid);
        std::vector<int> word;
        int letter;
        while (ss >> letter) word.push_back(letter);
        if (!ss.eof()) throw StructureError("--braid must be space-separated integers");
        return from_braid(word, in.strands);
    }
    throw StructureError("a diagram is required: --diagram FILE or --braid WORD --strands K");
}

Cochain1 resolve_cochain(const TopologicalQuandle& tq, const std::string& char_pair,
                         const std::string& cocycle_spec) {
    if (!char_pair.empty() && !cocycle_spec.empty())
        throw StructureError("give either --char or --cocycle, not both");
    if (!char_pair.empty()) {
        auto comma = char_pair.find(',');
        if (comma == std::string::npos)
            throw StructureError("--char expects \"x,y\" with 1-indexed points");
        try {
            size_t ux = 0, uy = 0;
            const std::string xs = char_pair.substr(0, comma), ys = char_pair.substr(comma + 1);
            int x = std::stoi(xs, &ux), y = std::stoi(ys, &uy);
            if (ux != xs.size() || uy != ys.size()) throw std::invalid_argument("trailing");
            return characteristic_cochain(tq, x - 1, y - 1);
        } catch (const DomainError&) {
            throw;
        } catch (const std::exception&) {
            throw StructureError("--char expects \"x,y\" with 1-indexed points");
        }
    }
    if (!cocycle_spec.empty()) {
        json j;
        if (!cocycle_spec.empty() && cocycle_spec[0] == '[') {
            try {
                j = json::parse(cocycle_spec);
            } catch (const json::parse_error& e) {
                throw StructureError(std::string("--cocycle: ") + e.what());
            }
        } else {
            j = load_json_file(cocycle_spec);
        }
        Cochain1 c = cochain_from_json(j);
        validate_cochain(tq, c);
        return c;
    }
    throw StructureError("a cocycle is required: --char x,y or --cocycle SPEC");
}

std::string group_line(const AbelianGroup& g) {
    return g.truncated ? g.str() + " (lower bound at truncation)" : g.str();
}

int cmd_validate(const std::string& file, bool as_json, std::ostream& out) {
    QuandleDoc doc = load_quandle_doc(file);
    const int n = static_cast<int>(doc.table.size());
    ValidationReport rq = validate_quandle(doc.table);
    ValidationReport rt, rtq;
    bool topology_checked = false;
    if (doc.has_topology) {
        rt = validate_topology(n, doc.opens);
        if (rq.ok && rt.ok) {
            rtq = validate_topological_quandle(FiniteQuandle(doc.table, doc.name),
                                               FiniteTopology(n, doc.opens));
            topology_checked = true;
        }
    }
    const bool ok = rq.ok && rt.ok && rtq.ok;
    if (as_json) {
        json j{{"ok", ok}, {"quandle", violations_json(rq)}};
        if (doc.has_topology) {
            j["topology"] = violations_json(rt);
            if (topology_checked) j["continuity"] = violations_json(rtq);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "quandle: " << rq.summary() << "\n";
        if (doc.has_topology) {
            out << "topology: " << rt.summary() << "\n";
            if (topology_checked) out << "continuity: " << rtq.summary() << "\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_components(const std::string& file, bool as_json, std::ostream& out) {
    TopologicalQuandle tq = make_topological_quandle(load_quandle_doc(file));
    if (as_json) {
        json comps = json::array();
        for (const auto& comp : tq.components()) {
            json c = json::array();
            for (int x : comp) c.push_back(x + 1);
            comps.push_back(std::move(c));
        }
        out << json{{"components", std::move(comps)}}.dump(2) << "\n";
    } else {
        out << tq.components().size() << " path component"
            << (tq.components().size() == 1 ? "" : "s") << "\n";
        for (size_t i = 0; i < tq.components().size(); ++i) {
            out << "component " << i + 1 << ":";
            for (int x : tq.components()[i]) out << " " << x + 1;
            out << "\n";
        }
    }
    return 0;
}

json complex_json(const ChainComplexZ& cx) {
    json degrees = json::array();
    for (int n = 0; n <= cx.max_degree; ++n) {
        json basis = json::array();
        for (const auto& tuple : cx.basis[n]) {
            json t = json::array();
            for (int x : tuple) t.push_back(x + 1);
            basis.push_back(std::move(t));
        }
        const SparseMat& b = cx.boundary_or_zero(n);
        json entries = json::array();
        for (int j = 0; j < b.cols; ++j)
            for (const auto& [i, v] : b.col[j]) entries.push_back(json::array({i + 1, j + 1, v}));
        degrees.push_back(json{{"degree", n},
                               {"tuple_length", kind_is_bar(cx.kind) ? n + 1 : n},
                               {"rank", cx.rank(n)},
                               {"basis", std::move(basis)},
                               {"boundary", json{{"rows", b.rows},
                                                 {"cols", b.cols},
                                                 {"entries", std::move(entries)}}}});
    }
    return json{{"kind", kind_name(cx.kind)},
                {"degree_convention",
                 kind_is_bar(cx.kind) ? "bar degree n is spanned by (n+1)-tuples"
                                      : "classical degree n is spanned by n-tuples"},
                {"max_degree", cx.max_degree},
                {"degrees", std::move(degrees)}};
}

ChainComplexZ build_complex(const std::string& file, ComplexKind kind, int degree,
                            const RunConfig& config) {
    if (degree < 0) throw StructureError("degree must be non-negative");
    if (degree > config.max_degree)
        throw StructureError("degree exceeds the cap of " + std::to_string(config.max_degree));
    TopologicalQuandle tq = make_topological_quandle(load_quandle_doc(file));
    const long long bound = kind_is_bar(kind)
                                ? bar_rank_bound(tq, degree, config.max_basis_rank)
                                : classical_rank_bound(tq.size(), degree, config.max_basis_rank);
    if (bound > config.max_basis_rank)
        throw StructureError("chain rank at degree " + std::to_string(degree) +
                             " exceeds the cap of " + std::to_string(config.max_basis_rank));
    return kind_is_bar(kind) ? bar_complex(tq, kind, degree)
                             : classical_complex(tq.quandle(), kind, degree);
}

int cmd_complex(const std::string& file, const std::string& kind_s, int nmax,
                const RunConfig& config, std::ostream& out) {
    ChainComplexZ cx = build_complex(file, parse_kind(kind_s), nmax, config);
    out << complex_json(cx).dump(2) << "\n";
    return 0;
}

int cmd_homology(const std::string& file, const std::string& kind_s, int degree,
                 const std::string& coeffs, bool cohomo, bool as_json, const RunConfig& config,
                 std::ostream& out) {
    const long long m = parse_coeffs(coeffs, false);
    if (degree < 0) throw StructureError("degree must be non-negative");
    ChainComplexZ cx = build_complex(file, parse_kind(kind_s), degree + 1, config);
    AbelianGroup g = cohomo ? cohomology(cx, degree, m) : homology(cx, degree, m);
    if (as_json) {
        json j = to_json(g);
        j["kind"] = kind_name(cx.kind);
        j["degree"] = degree;
        j["degree_convention"] = kind_is_bar(cx.kind)
                                     ? "bar degree n is spanned by (n+1)-tuples"
                                     : "classical degree n is spanned by n-tuples";
        out << j.dump(2) << "\n";
    } else {
        out << group_line(g) << "\n";
    }
    return 0;
}

int cmd_cocycles(const std::string& file, const std::string& coeffs, bool as_json,
                 std::ostream& out) {
    const CoefficientGroup a{parse_coeffs(coeffs, true)};
    TopologicalQuandle tq = make_topological_quandle(load_quandle_doc(file));
    CochainBasis z = cocycle_space(tq, a);
    CochainBasis b = coboundary_space(tq, a);
    if (as_json) {
        auto dump = [](const CochainBasis& basis) {
            json gens = json::array();
            for (size_t i = 0; i < basis.generators.size(); ++i)
                gens.push_back(json{{"cochain", to_json(basis.generators[i])},
                                    {"order", basis.orders[i]}});
            return gens;
        };
        out << json{{"cocycles", dump(z)}, {"coboundaries", dump(b)}}.dump(2) << "\n";
    } else {
        auto dump = [&](const char* label, const CochainBasis& basis) {
            out << label << " (" << basis.generators.size() << " generator"
                << (basis.generators.size() == 1 ? "" : "s") << "):\n";
            for (size_t i = 0; i < basis.generators.size(); ++i) {
                out << " ";
                for (const auto& [key, val] : basis.generators[i].entries)
                    out << " (" << key.first + 1 << "," << key.second + 1 << "):" << val;
                if (basis.orders[i] != 0) out << "  order " << basis.orders[i];
                out << "\n";
            }
        };
        dump("cocycles", z);
        dump("coboundaries", b);
    }
    return 0;
}

int cmd_colorings(const std::string& file, const DiagramInput& din, bool as_json,
                  std::ostream& out) {
    TopologicalQuandle tq = make_topological_quandle(load_quandle_doc(file));
    Diagram d = resolve_diagram(din);
    auto cols = colorings(d, tq);
    if (as_json) {
        json list = json::array();
        for (const auto& c : cols) {
            json colors = json::array();
            for (int v : c.colors) colors.push_back(v + 1);
            list.push_back(json{{"component", c.component + 1}, {"colors", std::move(colors)}});
        }
        out << json{{"count", cols.size()}, {"colorings", std::move(list)}}.dump(2) << "\n";
    } else {
        out << cols.size() << " coloring" << (cols.size() == 1 ? "" : "s") << "\n";
        for (const auto& c : cols) {
            out << "component " << c.component + 1 << ":";
            for (int v : c.colors) out << " " << v + 1;
            out << "\n";
        }
    }
    return 0;
}

int cmd_statesum(const std::string& file, const DiagramInput& din, const std::string& char_pair,
                 const std::string& cocycle_spec, bool as_json, std::ostream& out) {
    TopologicalQuandle tq = make_topological_quandle(load_quandle_doc(file));
    Diagram d = resolve_diagram(din);
    Cochain1 phi = resolve_cochain(tq, char_pair, cocycle_spec);
    LaurentPoly poly = state_sum(d, tq, phi);
    if (as_json) {
        json j = to_json(poly);
        j["colorings"] = poly.eval_at_one();
        out << j.dump(2) << "\n";
    } else {
        out << poly.str() << "\n";
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const RunConfig& config) {
    CLI::App app{"finite topological quandles: homology, cocycles and state sums", "tq"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    std::string file, kind = "bar-Q", coeffs_h = "Z", coeffs_c = "t", char_pair, cocycle_spec;
    int degree = 1, nmax = 3;
    DiagramInput din;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "quandle file (JSON)")->required();
    };
    CLI::App* v = app.add_subcommand("validate", "check quandle axioms and continuity");
    add_file(v);
    CLI::App* comp = app.add_subcommand("components", "path components of the space");
    add_file(comp);
    CLI::App* cx = app.add_subcommand("complex", "emit chain complex bases and boundaries");
    add_file(cx);
    cx->add_option("--kind", kind, "bar-R|bar-D|bar-Q|classical-R|classical-D|classical-Q");
    cx->add_option("--nmax", nmax, "top degree to build");
    CLI::App* hom = app.add_subcommand("homology", "homology group at one degree");
    add_file(hom);
    hom->add_option("--kind", kind, "complex kind");
    hom->add_option("--degree", degree, "degree n");
    hom->add_option("--coeffs", coeffs_h, "Z or Z/m");
    CLI::App* coh = app.add_subcommand("cohomology", "cohomology group at one degree");
    add_file(coh);
    coh->add_option("--kind", kind, "complex kind");
    coh->add_option("--degree", degree, "degree n");
    coh->add_option("--coeffs", coeffs_h, "Z or Z/m");
    CLI::App* coc = app.add_subcommand("cocycles", "1-cocycle and 1-coboundary bases");
    add_file(coc);
    coc->add_option("--coeffs", coeffs_c, "t or Z/m");
    auto add_diagram = [&](CLI::App* sub) {
        sub->add_option("--diagram", din.file, "diagram file (JSON)");
        sub->add_option("--braid", din.braid, "space-separated braid word");
        sub->add_option("--strands", din.strands, "strand count for --braid");
    };
    CLI::App* col = app.add_subcommand("colorings", "quandle colorings of a diagram");
    add_file(col);
    add_diagram(col);
    CLI::App* ss = app.add_subcommand("statesum", "cocycle state-sum invariant");
    add_file(ss);
    add_diagram(ss);
    ss->add_option("--char", char_pair, "characteristic cochain \"x,y\" (1-indexed)");
    ss->add_option("--cocycle", cocycle_spec, "cochain as JSON [[x,y,e],...] or a file path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (v->parsed()) return cmd_validate(file, as_json, out);
        if (comp->parsed()) return cmd_components(file, as_json, out);
        if (cx->parsed()) return cmd_complex(file, kind, nmax, config, out);
        if (hom->parsed())
            return cmd_homology(file, kind, degree, coeffs_h, false, as_json, config, out);
        if (coh->parsed())
            return cmd_homology(file, kind, degree, coeffs_h, true, as_json, config, out);
        if (coc->parsed()) return cmd_cocycles(file, coeffs_c, as_json, out);
        if (col->parsed()) return cmd_colorings(file, din, as_json, out);
        if (ss->parsed()) return cmd_statesum(file, din, char_pair, cocycle_spec, as_json, out);
    } catch (const StructureError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace tq
