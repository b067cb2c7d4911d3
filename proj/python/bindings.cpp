#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abelian/errors.hpp"
#include "abelian/hasse.hpp"
#include "abelian/ideals.hpp"
#include "abelian/report.hpp"
#include "abelian/affine.hpp"
#include "abelian/weyl.hpp"

namespace py = pybind11;
using namespace abelian;

namespace {

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::vector<int>> coords(const std::vector<Root>& roots) {
    std::vector<std::vector<int>> out;
    for (const auto& r : roots) out.push_back(r.c);
    return out;
}

std::string fraction(const Rational& r) { return r.str(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Abelian ideals of Borel subalgebras and their Hasse graphs";

    py::register_exception<InvalidType>(m, "InvalidType", PyExc_ValueError);

    py::class_<RootSystem>(m, "RootSystem")
        .def(py::init([](const std::string& name) { return RootSystem::build(name); }), py::arg("type"))
        .def_property_readonly("name", [](const RootSystem& rs) { return rs.type().name(); })
        .def_property_readonly("rank", &RootSystem::rank)
        .def_property_readonly("g", &RootSystem::g)
        .def_property_readonly("h", &RootSystem::h)
        .def_property_readonly("num_positive", &RootSystem::num_positive)
        .def_property_readonly("cartan", &RootSystem::cartan)
        .def_property_readonly("marks", &RootSystem::marks)
        .def_property_readonly("theta", [](const RootSystem& rs) { return rs.theta().c; })
        .def_property_readonly("positive_roots", [](const RootSystem& rs) { return coords(rs.positive_roots()); })
        .def_property_readonly("long_positive_roots",
                               [](const RootSystem& rs) { return coords(rs.long_positive_roots()); })
        .def("inner",
             [](const RootSystem& rs, const std::vector<int>& a, const std::vector<int>& b) {
                 return fraction(rs.inner(Root(a), Root(b)));
             })
        .def("info", [](const RootSystem& rs) { return to_py(info_json(rs)); })
        .def("__repr__", [](const RootSystem& rs) { return "RootSystem('" + rs.type().name() + "')"; });

    m.def("all_types", [](int max_rank) {
        std::vector<std::string> out;
        for (const auto& t : all_types(max_rank)) out.push_back(t.name());
        return out;
    }, py::arg("max_rank") = 8);

    m.def("enumerate_ideals", [](const RootSystem& rs) {
        std::vector<std::vector<std::vector<int>>> out;
        for (const auto& a : enumerate_all(rs)) out.push_back(coords(a.roots));
        return out;
    }, "All abelian ideals, each a list of positive roots in simple-root coordinates");

    m.def("ideals", [](const RootSystem& rs) { return to_py(ideals_json(rs)); });

    m.def("is_abelian_ideal", [](const RootSystem& rs, const std::vector<std::vector<int>>& roots) {
        std::vector<Root> r;
        for (const auto& c : roots) r.emplace_back(c);
        return is_abelian_ideal(rs, r);
    });

    m.def("max_dimension", [](const RootSystem& rs) {
        MaxDimension d = max_dimension(rs);
        py::dict out;
        out["dim"] = d.dim;
        out["witnesses"] = d.witnesses;
        out["g_minus_1"] = d.g_minus_1;
        out["n_hat"] = d.n_hat;
        out["n"] = d.n;
        return out;
    });

    m.def("poincare", [](const RootSystem& rs, const std::vector<int>& phi) {
        return poincare_P(rs, Root(phi)).coeffs();
    }, "Coefficients of P_phi(t), constant term first");

    m.def("word_to_theta", [](const RootSystem& rs, const std::vector<int>& phi) {
        return minimal_word_to_theta(rs, Root(phi)).letters;
    });

    m.def("verify", [](const RootSystem& rs, int random_subsets, std::uint32_t seed) {
        return to_py(verify(rs, VerifyOptions{random_subsets, seed}).to_json());
    }, py::arg("rs"), py::arg("random_subsets") = 1000, py::arg("seed") = 12345);

    m.def("hasse_dot", [](const RootSystem& rs) { return hasse_dot(rs, build_graph(rs, enumerate_all(rs))); });

    m.def("automorphism_group", [](const RootSystem& rs) {
        GroupFingerprint f = automorphism_group(build_graph(rs, enumerate_all(rs)));
        py::dict out;
        out["name"] = f.name;
        out["order"] = f.order;
        out["abelian"] = f.is_abelian;
        out["center_order"] = f.center_order;
        out["element_orders"] = f.element_orders;
        return out;
    });

    m.def("tables", [](int max_rank) { return to_py(tables_json(max_rank)); }, py::arg("max_rank") = 8);

    m.def("young_encode", [](const std::vector<int>& rows, int n) { return young_encode(YoungDiagram{rows}, n); });
    m.def("young_decode", [](std::uint64_t code, int n) { return young_decode(code, n).rows; });
    m.def("young_bits", [](const std::vector<int>& rows, int n) { return young_bits(YoungDiagram{rows}, n); });
}
