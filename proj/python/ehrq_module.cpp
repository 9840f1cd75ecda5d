#include "ehrq/closed_forms.hpp"
#include "ehrq/graded_quotient.hpp"
#include "ehrq/lattice.hpp"
#include "ehrq/permstats.hpp"
#include "ehrq/polytope_json.hpp"
#include "ehrq/qtrational.hpp"
#include "ehrq/render.hpp"
#include "ehrq/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace ehrq;

namespace {

py::int_ to_py(const Int& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

py::dict qlaurent_terms(const QLaurent& p) {
    py::dict d;
    for (const auto& [exp, c] : p.terms()) d[py::int_(exp)] = to_py(c);
    return d;
}

py::dict qtpoly_terms(const QTPoly& p) {
    py::dict d;
    for (const auto& [key, c] : p.terms())
        d[py::make_tuple(key.first, key.second)] = to_py(c);
    return d;
}

py::dict table_entries(const BigradedTable& table) {
    py::dict d;
    for (const auto& [key, value] : table.entries())
        d[py::make_tuple(key.first, key.second)] = py::int_(value);
    return d;
}

}  // namespace

PYBIND11_MODULE(_ehrq, m) {
    m.doc() = "Exact weight-refined Ehrhart series of lattice polytopes";

    py::class_<QLaurent>(m, "QLaurent")
        .def("terms", &qlaurent_terms, "Exponent -> coefficient dictionary")
        .def("coeff", [](const QLaurent& p, std::int64_t k) { return to_py(p.coeff(k)); })
        .def("eval_one", [](const QLaurent& p) { return to_py(p.eval_one()); })
        .def("latex", [](const QLaurent& p) { return to_latex(p); })
        .def("__str__", [](const QLaurent& p) { return to_plain(p); })
        .def("__eq__", [](const QLaurent& p, const QLaurent& o) { return p == o; });

    py::class_<QTPoly>(m, "QTPoly")
        .def("terms", &qtpoly_terms, "(t, q) exponent pair -> coefficient dictionary")
        .def("coeff_of_t", &QTPoly::coeff_of_t)
        .def("latex", [](const QTPoly& p) { return to_latex(p); })
        .def("__str__", [](const QTPoly& p) { return to_plain(p); })
        .def("__eq__", [](const QTPoly& p, const QTPoly& o) { return p == o; });

    py::class_<QTSeries>(m, "QTSeries")
        .def("order", &QTSeries::order)
        .def("coeff", &QTSeries::at, py::return_value_policy::copy)
        .def("latex", [](const QTSeries& s) { return to_latex(s); })
        .def("__str__", [](const QTSeries& s) { return to_plain(s); })
        .def("__eq__", [](const QTSeries& s, const QTSeries& o) { return s == o; });

    py::class_<QTRational>(m, "QTRational")
        .def_property_readonly("denominator",
                               [](const QTRational& r) { return r.denominator; })
        .def_property_readonly("numerator", [](const QTRational& r) { return r.numerator; })
        .def("expand", [](const QTRational& r, std::size_t order) { return series_expand(r, order); })
        .def("latex", [](const QTRational& r) { return to_latex(r); })
        .def("__str__", [](const QTRational& r) { return to_plain(r); });

    py::class_<LatticePolytope>(m, "Polytope")
        .def_static("family",
                    [](const std::string& name, int dim) {
                        const auto f = family_from_name(name);
                        if (!f) throw std::invalid_argument("unknown family \"" + name + "\"");
                        return LatticePolytope::family(*f, dim);
                    },
                    py::arg("name"), py::arg("dim"))
        .def_static("halfspaces",
                    [](int dim, const std::vector<std::pair<std::vector<std::int64_t>,
                                                            std::int64_t>>& rows) {
                        std::vector<HalfSpace> hs;
                        for (const auto& [coeffs, rhs] : rows) hs.push_back({coeffs, rhs});
                        return LatticePolytope::halfspaces(dim, std::move(hs));
                    },
                    py::arg("dim"), py::arg("rows"))
        .def_static("from_json",
                    [](const std::string& text) {
                        return polytope_from_json(nlohmann::json::parse(text));
                    })
        .def_property_readonly("dim", &LatticePolytope::dim)
        .def("contains", &LatticePolytope::dilation_contains, py::arg("r"), py::arg("point"))
        .def("points", &LatticePolytope::enumerate_points, py::arg("r"))
        .def("count", &LatticePolytope::count_points, py::arg("r"))
        .def("sliced_count", &LatticePolytope::sliced_count, py::arg("r"), py::arg("weights"),
             py::arg("k"))
        .def("slice_polynomial", &LatticePolytope::slice_polynomial, py::arg("r"),
             py::arg("weights"))
        .def("series_bruteforce", &LatticePolytope::refined_series_bruteforce, py::arg("weights"),
             py::arg("order"));

    m.def("q_integer", &q_integer, py::arg("k"), py::arg("e") = 1);
    m.def("q_binomial", &q_binomial, py::arg("n"), py::arg("k"));
    m.def("descent_count",
          [](const std::vector<int>& images) { return descent_count(Permutation(images)); });
    m.def("major_index",
          [](const std::vector<int>& images) { return major_index(Permutation(images)); });
    m.def("eulerian", &eulerian_polynomial, py::arg("d"),
          "Eulerian polynomial A_d; the variable is t");
    m.def("refined_eulerian", &refined_eulerian, py::arg("d"));

    m.def("simplex_series", &simplex_series, py::arg("d"), py::arg("weights"));
    m.def("cross_series", &cross_series, py::arg("d"), py::arg("weights"));
    m.def("cross_ehrhart_count",
          [](int d, std::int64_t r) { return to_py(cross_ehrhart_count(d, r)); });
    m.def("square_series", &square_series, py::arg("a"), py::arg("b"));
    m.def("cube_series", &cube_series, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("cube_slice_product", &cube_slice_product, py::arg("d"), py::arg("r"),
          py::arg("weights"));
    m.def("macmahon_carlitz", &macmahon_carlitz, py::arg("d"));
    m.def("square_series_simplifies", &square_series_simplifies, py::arg("a"), py::arg("b"));

    m.def("rational_equal", &rational_equal, py::arg("a"), py::arg("b"));
    m.def("series_equal", &series_equal, py::arg("a"), py::arg("b"), py::arg("order"));

    m.def("quotient_hilbert",
          [](int d, std::int64_t r_max) { return table_entries(quotient_hilbert(d, r_max)); },
          py::arg("d"), py::arg("r_max"));
    m.def("verify_regular_sequence",
          [](int d) {
              const RegularSequenceCheck check = verify_regular_sequence(d);
              return py::make_tuple(check.matches, table_entries(check.table));
          },
          py::arg("d"));
    m.def("y_element_support", &y_element_support, py::arg("d"), py::arg("j"));

    m.def("verify_suite",
          [](const std::string& suite, std::size_t order) {
              py::list results;
              for (const auto& check : verify_suite(suite, order))
                  results.append(py::make_tuple(check.name, check.pass));
              return results;
          },
          py::arg("suite") = "all", py::arg("order") = 12);
}
