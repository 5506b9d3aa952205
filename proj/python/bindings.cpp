#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <variant>

#include "polysieve/cli.hpp"
#include "polysieve/dimmatch.hpp"
#include "polysieve/edgecolor.hpp"
#include "polysieve/gf.hpp"
#include "polysieve/io.hpp"
#include "polysieve/kpath.hpp"
#include "polysieve/oracle.hpp"
#include "polysieve/selftest.hpp"
#include "polysieve/setpack.hpp"

namespace py = pybind11;
using namespace polysieve;

namespace {

py::object fraction(const Rational& value) {
    static py::object ctor = py::module_::import("fractions").attr("Fraction");
    std::ostringstream repr;
    repr << value;
    return ctor(repr.str());
}

DetectOptions options_from(std::optional<std::uint64_t> repetitions,
                           std::optional<int> field_bits) {
    DetectOptions options;
    options.repetitions = repetitions;
    options.field_bits = field_bits;
    return options;
}

template <typename Result>
py::dict base_report(const Result& r) {
    py::dict d;
    d["found"] = r.found;
    d["field_bits"] = r.field_bits;
    d["repetitions_planned"] = r.repetitions_planned;
    d["repetitions_executed"] = r.repetitions_executed;
    d["label_subsets"] = r.label_subsets;
    return d;
}

PackingEncoding encoding_from(const std::string& mode) {
    if (mode == "vertex-triangle") return PackingEncoding::vertex_triangle;
    if (mode == "edge-triangle") return PackingEncoding::edge_triangle;
    if (mode == "vertex-p3") return PackingEncoding::vertex_p3;
    throw ParseError("unknown encode mode '" + mode + "'");
}

}  // namespace

PYBIND11_MODULE(_polysieve, m) {
    m.doc() = "Randomized algebraic sieves for parameterized path, packing, "
              "matching, and edge-coloring detection over GF(2^b)";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<FamilyError>(m, "FamilyError", PyExc_ValueError);
    py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def(py::init<std::size_t>(), py::arg("vertex_count"))
        .def(py::init<std::size_t, const std::vector<std::pair<int, int>>&>(),
             py::arg("vertex_count"), py::arg("edges"))
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("add_edge", &Graph::add_edge, py::arg("u"), py::arg("v"))
        .def("edges", &Graph::edges)
        .def("adjacent", &Graph::adjacent, py::arg("u"), py::arg("v"))
        .def("degree", &Graph::degree, py::arg("v"))
        .def("__repr__", [](const Graph& g) {
            std::ostringstream s;
            s << "Graph(n=" << g.vertex_count() << ", m=" << g.edge_count() << ")";
            return s.str();
        });

    py::class_<SetFamily>(m, "SetFamily")
        .def(py::init<std::size_t, std::size_t>(), py::arg("ground_size"),
             py::arg("member_size"))
        .def(py::init<std::size_t, std::size_t, const std::vector<std::vector<int>>&>(),
             py::arg("ground_size"), py::arg("member_size"), py::arg("members"))
        .def_property_readonly("ground_size", &SetFamily::ground_size)
        .def_property_readonly("member_size", &SetFamily::member_size)
        .def("__len__", &SetFamily::size)
        .def("members", &SetFamily::members)
        .def("add_member", &SetFamily::add_member, py::arg("member"));

    py::class_<PartiteFamily>(m, "PartiteFamily")
        .def(py::init<std::size_t, std::size_t>(), py::arg("dimensions"), py::arg("part_size"))
        .def(py::init<std::size_t, std::size_t, const std::vector<std::vector<int>>&>(),
             py::arg("dimensions"), py::arg("part_size"), py::arg("members"))
        .def_property_readonly("dimensions", &PartiteFamily::dimensions)
        .def_property_readonly("part_size", &PartiteFamily::part_size)
        .def("__len__", &PartiteFamily::size)
        .def("members", &PartiteFamily::members)
        .def("add_member", &PartiteFamily::add_member, py::arg("member"));

    m.def("parse_graph", &parse_graph, py::arg("text"));
    m.def(
        "parse_family",
        [](const std::string& text) -> py::object {
            auto parsed = parse_family(text);
            if (std::holds_alternative<SetFamily>(parsed))
                return py::cast(std::get<SetFamily>(parsed));
            return py::cast(std::get<PartiteFamily>(parsed));
        },
        py::arg("text"));
    m.def("format_family", &format_family, py::arg("family"));
    m.def(
        "encode_graph_packing",
        [](const Graph& g, const std::string& mode) {
            return encode_graph_packing(g, encoding_from(mode));
        },
        py::arg("graph"), py::arg("mode"));

    m.def(
        "detect_k_path",
        [](const Graph& g, int k, std::uint64_t seed, std::optional<std::uint64_t> repetitions,
           std::optional<int> field_bits) {
            KPathResult r = detect_k_path(g, k, seed, options_from(repetitions, field_bits));
            py::dict d = base_report(r);
            d["k1"] = r.k1;
            d["l2"] = r.l2;
            return d;
        },
        py::arg("graph"), py::arg("k"), py::arg("seed") = 0,
        py::arg("repetitions") = py::none(), py::arg("field_bits") = py::none());

    m.def(
        "detect_set_packing",
        [](const SetFamily& family, int p, std::uint64_t seed,
           std::optional<std::uint64_t> repetitions, std::optional<int> field_bits) {
            SetPackResult r =
                detect_set_packing(family, p, seed, options_from(repetitions, field_bits));
            py::dict d = base_report(r);
            d["p0"] = r.p0;
            d["p1"] = r.p1;
            d["p2"] = r.p2;
            d["n1"] = r.n1;
            return d;
        },
        py::arg("family"), py::arg("p"), py::arg("seed") = 0,
        py::arg("repetitions") = py::none(), py::arg("field_bits") = py::none());

    m.def(
        "detect_qdim_packing",
        [](const PartiteFamily& family, int p, std::uint64_t seed,
           std::optional<std::uint64_t> repetitions, std::optional<int> field_bits) {
            QdimResult r =
                detect_qdim_packing(family, p, seed, options_from(repetitions, field_bits));
            return base_report(r);
        },
        py::arg("family"), py::arg("p"), py::arg("seed") = 0,
        py::arg("repetitions") = py::none(), py::arg("field_bits") = py::none());

    m.def(
        "detect_edge_coloring",
        [](const Graph& g, std::uint64_t seed, bool general,
           std::optional<std::uint64_t> repetitions, std::optional<int> field_bits) {
            EdgeColorResult r =
                general
                    ? detect_edge_coloring_general(g, seed, options_from(repetitions, field_bits))
                    : detect_edge_coloring(g, seed, options_from(repetitions, field_bits));
            py::dict d = base_report(r);
            d["colors"] = r.colors;
            return d;
        },
        py::arg("graph"), py::arg("seed") = 0, py::arg("general") = false,
        py::arg("repetitions") = py::none(), py::arg("field_bits") = py::none());

    // Brute-force reference deciders for desk-scale instances.
    m.def("has_k_path_bf", &oracle::has_k_path_bf, py::arg("graph"), py::arg("k"));
    m.def("has_p_packing_bf", &oracle::has_p_packing_bf, py::arg("family"), py::arg("p"));
    m.def("has_qdim_packing_bf", &oracle::has_qdim_packing_bf, py::arg("family"), py::arg("p"));
    m.def("edge_chromatic_bf", &oracle::edge_chromatic_bf, py::arg("graph"));

    m.def(
        "admissible_probability",
        [](int k, int k1, int l2) { return fraction(admissible_probability(k, k1, l2)); },
        py::arg("k"), py::arg("k1"), py::arg("l2"));
    m.def(
        "packing_admissible_probability",
        [](long long n, long long n1, long long q, long long p, long long p0, long long p1,
           long long p2) {
            return fraction(packing_admissible_probability(n, n1, q, p, p0, p1, p2));
        },
        py::arg("n"), py::arg("n1"), py::arg("q"), py::arg("p"), py::arg("p0"), py::arg("p1"),
        py::arg("p2"));
    m.def(
        "choose_path_parameters",
        [](int k) {
            PathParameterChoice c = choose_path_parameters(k);
            py::dict d;
            d["k1"] = c.k1;
            d["l2"] = c.l2;
            d["repetitions"] = c.repetitions;
            d["probability"] = fraction(c.admissible_prob);
            return d;
        },
        py::arg("k"));
    m.def(
        "choose_packing_parameters",
        [](std::size_t n, std::size_t q, int p) {
            PackingParams params = choose_packing_parameters(n, q, p);
            py::dict d;
            d["p0"] = params.p0;
            d["p1"] = params.p1;
            d["p2"] = params.p2;
            d["n1"] = params.n1;
            d["repetitions"] = params.repetitions;
            d["label_count"] = params.label_count();
            d["probability"] = fraction(params.admissible_prob);
            return d;
        },
        py::arg("n"), py::arg("q"), py::arg("p"));
    m.def(
        "packing_beta_search",
        [](long long q) {
            BetaChoice c = packing_beta_search(q);
            py::dict d;
            d["beta1"] = c.beta1;
            d["beta2"] = c.beta2;
            d["base"] = c.base;
            return d;
        },
        py::arg("q"));

    m.def(
        "run_selftest",
        [](std::uint64_t seed) {
            SelfTestReport r = run_selftest(seed);
            py::dict d;
            d["passed"] = r.passed;
            d["failed"] = r.failed;
            d["failures"] = r.failures;
            return d;
        },
        py::arg("seed") = 0);

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            int code = run_command(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));

    m.attr("__version__") = "0.1.0";
}
