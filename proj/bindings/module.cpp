#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tq/cocycle.hpp"
#include "tq/complex.hpp"
#include "tq/homology.hpp"
#include "tq/io.hpp"
#include "tq/knot.hpp"
#include "tq/quandle.hpp"
#include "tq/report.hpp"
#include "tq/topology.hpp"

namespace py = pybind11;
using namespace tq;

namespace {

// Python callers see 1-indexed points everywhere, matching the CLI and the
// file formats.

ComplexKind kind_from_string(const std::string& s) {
    if (s == "bar-R") return ComplexKind::BarR;
    if (s == "bar-D") return ComplexKind::BarD;
    if (s == "bar-Q") return ComplexKind::BarQ;
    if (s == "classical-R") return ComplexKind::ClassicalR;
    if (s == "classical-D") return ComplexKind::ClassicalD;
    if (s == "classical-Q") return ComplexKind::ClassicalQ;
    throw StructureError("unknown complex kind \"" + s + "\"");
}

std::vector<std::vector<int>> table_from_python(std::vector<std::vector<int>> table) {
    for (auto& row : table)
        for (auto& v : row) v -= 1;
    return table;
}

TopologicalQuandle quandle_from_parts(std::vector<std::vector<int>> table,
                                      const std::optional<std::vector<std::vector<int>>>& opens,
                                      const std::string& name) {
    table = table_from_python(std::move(table));
    ValidationReport r = validate_quandle(table);
    if (!r.ok) throw DomainError(r.summary());
    FiniteQuandle q(std::move(table), name);
    if (!opens) return TopologicalQuandle(q, FiniteTopology::discrete(q.size()));
    std::vector<std::uint64_t> masks{0, (std::uint64_t{1} << q.size()) - 1};
    for (const auto& open : *opens) {
        std::uint64_t m = 0;
        for (int x : open) {
            if (x < 1 || x > q.size()) throw StructureError("open set point out of range");
            m |= std::uint64_t{1} << (x - 1);
        }
        masks.push_back(m);
    }
    ValidationReport rt = validate_topology(q.size(), masks);
    if (!rt.ok) throw DomainError(rt.summary());
    FiniteTopology t(q.size(), masks);
    ValidationReport rc = validate_topological_quandle(q, t);
    if (!rc.ok) throw DomainError(rc.summary());
    return TopologicalQuandle(q, t);
}

Cochain1 cochain_from_python(const TopologicalQuandle& q,
                             const std::map<std::pair<int, int>, long long>& entries) {
    Cochain1 c;
    for (const auto& [key, val] : entries) c.set(key.first - 1, key.second - 1, val);
    validate_cochain(q, c);
    return c;
}

std::map<std::pair<int, int>, long long> cochain_to_python(const Cochain1& c) {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [key, val] : c.entries) out[{key.first + 1, key.second + 1}] = val;
    return out;
}

std::vector<std::vector<int>> components_to_python(const TopologicalQuandle& q) {
    std::vector<std::vector<int>> out;
    for (const auto& comp : q.components()) {
        std::vector<int> c;
        for (int x : comp) c.push_back(x + 1);
        out.push_back(std::move(c));
    }
    return out;
}

CoefficientGroup group_of(long long modulus) {
    return modulus == 0 ? CoefficientGroup::infinite_cyclic() : CoefficientGroup::cyclic(modulus);
}

py::list basis_to_python(const CochainBasis& basis) {
    py::list out;
    for (size_t i = 0; i < basis.generators.size(); ++i) {
        py::dict d;
        d["cochain"] = cochain_to_python(basis.generators[i]);
        d["order"] = basis.orders[i];
        out.append(std::move(d));
    }
    return out;
}

ChainComplexZ build_any(const TopologicalQuandle& q, const std::string& kind, int n_max) {
    ComplexKind k = kind_from_string(kind);
    return kind_is_bar(k) ? bar_complex(q, k, n_max) : classical_complex(q.quandle(), k, n_max);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite topological quandles: homology, cocycles and state sums";

    py::register_exception<StructureError>(m, "StructureError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<TopologicalQuandle>(m, "Quandle")
        .def(py::init(&quandle_from_parts), py::arg("table"), py::arg("opens") = py::none(),
             py::arg("name") = "",
             "table[x][y] = x * y with 1-indexed points; opens lists the open "
             "sets as point lists (empty and full sets implied); omit opens "
             "for the discrete topology")
        .def_static(
            "from_file",
            [](const std::string& path) { return make_topological_quandle(load_quandle_doc(path)); },
            py::arg("path"))
        .def_property_readonly("size", &TopologicalQuandle::size)
        .def_property_readonly("name", [](const TopologicalQuandle& q) { return q.quandle().name(); })
        .def(
            "op",
            [](const TopologicalQuandle& q, int x, int y) {
                if (x < 1 || x > q.size() || y < 1 || y > q.size())
                    throw StructureError("point out of range");
                return q.op(x - 1, y - 1) + 1;
            },
            py::arg("x"), py::arg("y"))
        .def_property_readonly("components", &components_to_python)
        .def("__repr__", [](const TopologicalQuandle& q) {
            std::string n = q.quandle().name();
            return "Quandle(size=" + std::to_string(q.size()) +
                   (n.empty() ? "" : ", name=\"" + n + "\"") + ")";
        });

    py::class_<Diagram>(m, "Diagram")
        .def_static(
            "from_file", [](const std::string& path) { return load_diagram(path); },
            py::arg("path"))
        .def_static(
            "from_braid",
            [](const std::vector<int>& word, int strands) { return from_braid(word, strands); },
            py::arg("word"), py::arg("strands"))
        .def_property_readonly("arc_count", &Diagram::arc_count)
        .def_property_readonly("crossings",
                               [](const Diagram& d) {
                                   std::vector<std::tuple<int, int, int, int>> out;
                                   for (const auto& c : d.crossings())
                                       out.emplace_back(c.over + 1, c.from + 1, c.to + 1, c.sign);
                                   return out;
                               })
        .def_property_readonly("components",
                               [](const Diagram& d) {
                                   std::vector<std::vector<int>> out;
                                   for (const auto& comp : d.components()) {
                                       std::vector<int> c;
                                       for (int a : comp) c.push_back(a + 1);
                                       out.push_back(std::move(c));
                                   }
                                   return out;
                               })
        .def("__repr__", [](const Diagram& d) {
            return "Diagram(arcs=" + std::to_string(d.arc_count()) +
                   ", crossings=" + std::to_string(d.crossings().size()) + ")";
        });

    m.def(
        "homology",
        [](const TopologicalQuandle& q, const std::string& kind, int degree, long long modulus) {
            if (degree < 0) throw StructureError("degree must be non-negative");
            return homology(build_any(q, kind, degree + 1), degree, modulus).str();
        },
        py::arg("quandle"), py::arg("kind") = "bar-Q", py::arg("degree") = 1,
        py::arg("modulus") = 0);
    m.def(
        "cohomology",
        [](const TopologicalQuandle& q, const std::string& kind, int degree, long long modulus) {
            if (degree < 0) throw StructureError("degree must be non-negative");
            return cohomology(build_any(q, kind, degree + 1), degree, modulus).str();
        },
        py::arg("quandle"), py::arg("kind") = "bar-Q", py::arg("degree") = 1,
        py::arg("modulus") = 0);
    m.def(
        "full_h0", [](const TopologicalQuandle& q) { return full_H0(q).str(); },
        py::arg("quandle"));
    m.def(
        "chain_ranks",
        [](const TopologicalQuandle& q, const std::string& kind, int n_max) {
            ChainComplexZ cx = build_any(q, kind, n_max);
            std::vector<long long> out;
            for (int n = 0; n <= n_max; ++n) out.push_back(cx.rank(n));
            return out;
        },
        py::arg("quandle"), py::arg("kind") = "bar-Q", py::arg("n_max") = 3);

    m.def(
        "cocycles",
        [](const TopologicalQuandle& q, long long modulus) {
            return basis_to_python(cocycle_space(q, group_of(modulus)));
        },
        py::arg("quandle"), py::arg("modulus") = 0);
    m.def(
        "coboundaries",
        [](const TopologicalQuandle& q, long long modulus) {
            return basis_to_python(coboundary_space(q, group_of(modulus)));
        },
        py::arg("quandle"), py::arg("modulus") = 0);
    m.def(
        "is_cocycle",
        [](const TopologicalQuandle& q, const std::map<std::pair<int, int>, long long>& phi,
           long long modulus) { return is_cocycle(q, cochain_from_python(q, phi), group_of(modulus)); },
        py::arg("quandle"), py::arg("phi"), py::arg("modulus") = 0);
    m.def(
        "characteristic_cochain",
        [](const TopologicalQuandle& q, int x, int y) {
            return cochain_to_python(characteristic_cochain(q, x - 1, y - 1));
        },
        py::arg("quandle"), py::arg("x"), py::arg("y"));

    m.def(
        "colorings",
        [](const Diagram& d, const TopologicalQuandle& q) {
            std::vector<std::pair<int, std::vector<int>>> out;
            for (const auto& c : colorings(d, q)) {
                std::vector<int> colors;
                for (int v : c.colors) colors.push_back(v + 1);
                out.emplace_back(c.component + 1, std::move(colors));
            }
            return out;
        },
        py::arg("diagram"), py::arg("quandle"));
    m.def(
        "coloring_count",
        [](const Diagram& d, const TopologicalQuandle& q) { return coloring_count(d, q); },
        py::arg("diagram"), py::arg("quandle"));
    m.def(
        "state_sum",
        [](const Diagram& d, const TopologicalQuandle& q,
           const std::map<std::pair<int, int>, long long>& phi) {
            LaurentPoly p = state_sum(d, q, cochain_from_python(q, phi));
            py::dict out;
            out["terms"] = p.terms;
            out["pretty"] = p.str();
            out["colorings"] = p.eval_at_one();
            return out;
        },
        py::arg("diagram"), py::arg("quandle"), py::arg("phi"));
}
