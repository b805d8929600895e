#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "wha/export.hpp"
#include "wha/recoupling.hpp"
#include "wha/verify.hpp"

namespace py = pybind11;
using namespace wha;

namespace {

Conventions make_conventions(const std::string& crossing, const std::string& reading) {
    Conventions c;
    if (crossing == "negative") c.crossing = Conventions::Crossing::Negative;
    else if (crossing != "positive") throw InputError("crossing must be positive or negative");
    if (reading == "inner-strand") c.reading = Conventions::Reading::InnerStrand;
    else if (reading != "closing-strand") throw InputError("reading must be closing-strand or inner-strand");
    return c;
}

// Exact value and its complex approximation.
py::tuple scalar(const CycloScalar& c) { return py::make_tuple(c.to_string(), c.to_complex()); }

std::shared_ptr<Algebra> wrap(StructureTables t) {
    return std::make_shared<Algebra>(std::make_shared<const StructureTables>(std::move(t)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact weak Hopf algebra from the quantum sl2 modular category";
    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def_property_readonly("level", &Algebra::level)
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("conventions",
                               [](const Algebra& H) {
                                   return py::make_tuple(H.conventions().crossing_name(), H.conventions().reading_name());
                               })
        .def_property_readonly("basis",
                               [](const Algebra& H) {
                                   py::list out;
                                   for (const auto& b : H.basis()) out.append(py::make_tuple(b.j, b.p, b.q, b.r, b.s));
                                   return out;
                               })
        .def(
            "smatrix",
            [](const Algebra& H) {
                const auto& s = H.tables().smatrix;
                std::vector<std::vector<std::string>> out(s.rows());
                for (int i = 0; i < s.rows(); ++i)
                    for (int j = 0; j < s.cols(); ++j) out[i].push_back(s.at(i, j).to_string());
                return out;
            },
            "Exact q-tilde matrix entries as strings in powers of A")
        .def(
            "smatrix_determinant", [](const Algebra& H) { return scalar(determinant(H.tables().smatrix)); },
            "Exact determinant of q-tilde and its complex value")
        .def(
            "verify",
            [](const Algebra& H, const std::vector<std::string>& suites, std::size_t samples, std::uint64_t seed) {
                auto specs = select_checks(suites);
                std::string json;
                {
                    py::gil_scoped_release release;
                    json = run_suite(H, specs, {samples, seed, 0}).to_json();
                }
                return py::module_::import("json").attr("loads")(json);
            },
            py::arg("suites") = std::vector<std::string>{}, py::arg("samples") = 500, py::arg("seed") = 42,
            "Run verification checks; returns the JSON report as a dict")
        .def(
            "export", [](const Algebra& H, const std::string& tables) {
                return export_tables(H.tables(), tables.empty() ? ExportSelection{} : parse_selection(tables));
            },
            py::arg("tables") = "", "Export document (JSON text); tables is a subset of mu,delta,s,forms");

    m.def(
        "build",
        [](int level, const std::string& crossing, const std::string& reading) {
            if (level < 2) throw InputError("level must be at least 2");
            auto conv = make_conventions(crossing, reading);
            py::gil_scoped_release release;
            return wrap(build_tables(level, conv));
        },
        py::arg("level"), py::arg("crossing") = "positive", py::arg("reading") = "closing-strand");
    m.def(
        "load", [](const std::string& text) { return wrap(import_tables(text)); }, py::arg("text"),
        "Algebra from an exported document");
    m.def("checks", &registered_checks);
    m.def("pin_conventions", [] {
        auto c = pin_conventions();
        return py::make_tuple(c.crossing_name(), c.reading_name());
    });

    m.def("dim", [](int r, int j) { return scalar(RecouplingTables::get(r).dim(j)); });
    m.def("twist", [](int r, int j) { return scalar(RecouplingTables::get(r).twist(j)); });
    m.def("theta", [](int r, int a, int b, int c) { return scalar(RecouplingTables::get(r).theta(a, b, c)); });
    m.def("tet", [](int r, int a, int b, int c, int d, int i, int j) {
        return scalar(RecouplingTables::get(r).tet(a, b, c, d, i, j));
    });
    m.def("sixj", [](int r, int a, int b, int i, int c, int d, int j) {
        return scalar(RecouplingTables::get(r).sixj(a, b, i, c, d, j));
    });
    m.def("hopf_link", [](int r, int i, int j) { return scalar(RecouplingTables::get(r).hopf_link(i, j)); });
}
