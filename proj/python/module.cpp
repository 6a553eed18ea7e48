#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hqc/analytic.hpp"
#include "hqc/code.hpp"
#include "hqc/complex.hpp"
#include "hqc/coxeter.hpp"
#include "hqc/decode.hpp"
#include "hqc/distance.hpp"
#include "hqc/json_io.hpp"
#include "hqc/sim.hpp"

namespace py = pybind11;
using namespace hqc;

PYBIND11_MODULE(_hqc, m) {
    m.doc() = "Homological CSS code workbench";

    py::class_<ChainComplex>(m, "ChainComplex")
        .def_readonly("dimension", &ChainComplex::dimension)
        .def_readonly("level_sizes", &ChainComplex::level_sizes)
        .def_readonly("family", &ChainComplex::family)
        .def("validate", &ChainComplex::validate)
        .def("euler_characteristic", &ChainComplex::euler_characteristic);

    m.def("build_toric_2d", &build_toric_2d, py::arg("L"));
    m.def("build_rotated_toric", &build_rotated_toric, py::arg("L"));
    m.def("build_toric_4d", &build_toric_4d, py::arg("L"));
    m.def("build_tesseract", &build_tesseract, py::arg("L"));
    m.def("semi_hyperbolic", &semi_hyperbolic, py::arg("base"), py::arg("l"));
    m.def("dual", &dual, py::arg("complex"));
    m.def("homology_dimension", &homology_dimension, py::arg("complex"), py::arg("i"));

    m.def(
        "build_hyperbolic",
        [](int r, int s, const std::string& relators, std::size_t max_cosets) {
            auto table = enumerate_quotient(reflection_group(r, s),
                                            parse_relator_list(relators), max_cosets);
            if (!check_fixed_point_free(table, r, s))
                throw std::runtime_error("quotient is not fixed-point free");
            return build_surface_complex(table, r, s);
        },
        py::arg("r"), py::arg("s"), py::arg("relators"), py::arg("max_cosets") = 1000000);
    m.def(
        "build_hyperbolic_rotation",
        [](int r, int s, const std::string& relators, std::size_t max_cosets) {
            std::vector<std::vector<int>> ws;
            for (const auto& w : parse_relator_list(relators)) ws.push_back(to_rotation_word(w));
            auto table = enumerate_quotient(rotation_group(r, s), ws, max_cosets);
            if (!check_fixed_point_free_rotation(table, r, s))
                throw std::runtime_error("quotient is not fixed-point free");
            return build_surface_complex_rotation(table, r, s);
        },
        py::arg("r"), py::arg("s"), py::arg("relators"), py::arg("max_cosets") = 1000000);
    m.def("build_appendix_a_surface", &build_appendix_a_surface, py::arg("r"), py::arg("L"),
          py::arg("max_cosets") = 1000000);

    py::class_<LogicalBasis>(m, "LogicalBasis")
        .def("num_pairs", [](const LogicalBasis& b) { return b.x_ops.size(); });

    py::class_<CssCode>(m, "CssCode")
        .def_static("from_complex", &CssCode::from_complex, py::arg("complex"),
                    py::arg("qubit_level"))
        .def_property_readonly("n", &CssCode::n)
        .def_property_readonly("k", &CssCode::compute_k)
        .def("logical_basis", &CssCode::logical_basis);

    m.def("z_distance",
          [](const CssCode& c, const LogicalBasis& lb) { return z_distance(c, lb, false).d; });
    m.def("x_distance",
          [](const CssCode& c, const LogicalBasis& lb) { return x_distance(c, lb, false).d; });
    m.def(
        "count_min_weight_logicals",
        [](const CssCode& c, const LogicalBasis& lb, const std::string& side) {
            auto r = count_min_weight_logicals(c, lb, side == "Z" ? Pauli::Z : Pauli::X);
            return std::make_pair(r.d, r.count);
        },
        py::arg("code"), py::arg("logicals"), py::arg("side"));

    py::class_<SimResult>(m, "SimResult")
        .def_readonly("trials", &SimResult::trials)
        .def_readonly("failures_logical", &SimResult::failures_logical)
        .def_readonly("p_bar", &SimResult::p_bar)
        .def_readonly("ci_lo", &SimResult::ci_lo)
        .def_readonly("ci_hi", &SimResult::ci_hi);
    m.def("run_2d_perfect", &run_2d_perfect, py::arg("code"), py::arg("logicals"), py::arg("p"),
          py::arg("trials"), py::arg("seed"), py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());

    m.def("encoding_rate", &encoding_rate);
    m.def("threshold_lower_bound", &threshold_lower_bound, py::arg("params"), py::arg("noisy"));
    py::class_<TessellationParams>(m, "TessellationParams")
        .def(py::init([](int r, int s, std::size_t n, double c) {
                 return TessellationParams{r, s, n, c};
             }),
             py::arg("r"), py::arg("s"), py::arg("n") = 0, py::arg("c") = 0.0);

    m.def("code_to_json", [](const CssCode& c) { return code_to_json(c); });
    m.def("code_from_json", &code_from_json);
}
