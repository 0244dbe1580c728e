#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "strata/coordinates.hpp"
#include "strata/coxeter_complex.hpp"
#include "strata/io.hpp"
#include "strata/metrics.hpp"
#include "strata/stratification.hpp"

namespace py = pybind11;
using namespace strata;

namespace {

std::string one_line_str(const Permutation& p) {
    std::ostringstream out;
    out << "[";
    const auto ol = p.one_line();
    for (std::size_t i = 0; i < ol.size(); ++i) out << (i ? " " : "") << ol[i];
    out << "]";
    return out.str();
}

Norm parse_norm(const std::string& name) {
    if (name == "linf" || name == "bottleneck") return Norm::linf;
    if (name == "l2" || name == "wasserstein") return Norm::l2;
    throw std::invalid_argument("norm must be 'linf' or 'l2'");
}

py::dict cone_coordinates_dict(const ConeCoordinates& c) {
    py::dict out;
    out["n"] = c.n;
    out["mean"] = c.mean;
    out["radius"] = c.radius;
    out["direction"] = c.direction ? py::cast(*c.direction) : py::object(py::none());
    out["face"] = c.face ? py::cast(*c.face) : py::object(py::none());
    return out;
}

py::dict barcode_coordinates_dict(const BarcodeCoordinates& c) {
    py::dict out;
    out["n"] = c.n;
    out["mean_birth"] = c.region.mean_birth;
    out["mean_death"] = c.region.mean_death;
    out["dev_birth"] = c.region.dev_birth;
    out["dev_death"] = c.region.dev_death;
    out["stratum"] = c.region.stratum;
    out["birth_direction"] =
        c.birth_direction ? py::cast(*c.birth_direction) : py::object(py::none());
    out["death_direction"] =
        c.death_direction ? py::cast(*c.death_direction) : py::object(py::none());
    return out;
}

} // namespace

PYBIND11_MODULE(_strata, m) {
    m.doc() = "Coxeter-complex coordinates, strata and modified matching distances "
              "for persistence barcodes";

    py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Permutation>(m, "Permutation")
        .def(py::init([](const std::vector<int>& one_line) {
                 return Permutation::from_one_line(one_line);
             }),
             py::arg("one_line"), "Create from 1-based one-line notation, e.g. [4, 1, 3, 2].")
        .def_static("identity", &Permutation::identity, py::arg("n"))
        .def_static("adjacent_transposition", &Permutation::adjacent_transposition, py::arg("n"),
                    py::arg("k"))
        .def_property_readonly("n", &Permutation::size)
        .def_property_readonly("one_line", &Permutation::one_line)
        .def("inverse", &Permutation::inverse)
        .def("inversions", [](const Permutation& p) { return inversions(p); })
        .def("descents", [](const Permutation& p) { return descents(p); })
        .def(
            "act", [](const Permutation& p, const std::vector<double>& x) { return act(p, x); },
            py::arg("x"), "Permute coordinates: result[i] = x[inverse(i)].")
        .def(
            "__call__",
            [](const Permutation& p, int i) {
                if (i < 1 || static_cast<std::size_t>(i) > p.size())
                    throw py::index_error("argument out of range 1..n");
                return p(i - 1) + 1;
            },
            py::arg("i"), "Image of i, 1-based.")
        .def(py::self == py::self)
        .def(py::self * py::self)
        .def("__repr__",
             [](const Permutation& p) { return "Permutation(" + one_line_str(p) + ")"; });

    py::class_<ParabolicSubgroup>(m, "ParabolicSubgroup")
        .def(py::init<std::size_t, std::vector<int>>(), py::arg("n"), py::arg("generators"))
        .def_property_readonly("n", &ParabolicSubgroup::n)
        .def_property_readonly("generators", &ParabolicSubgroup::generators)
        .def("order", &ParabolicSubgroup::order)
        .def("elements", &ParabolicSubgroup::elements, py::arg("cap") = 40320)
        .def("contains", &ParabolicSubgroup::contains)
        .def(py::self == py::self)
        .def("__repr__", [](const ParabolicSubgroup& p) {
            std::ostringstream out;
            out << "ParabolicSubgroup(n=" << p.n() << ", generators=[";
            for (std::size_t i = 0; i < p.generators().size(); ++i)
                out << (i ? ", " : "") << p.generators()[i];
            out << "])";
            return out.str();
        });

    py::class_<Coset>(m, "Coset")
        .def(py::init<const Permutation&, ParabolicSubgroup>(), py::arg("rep"),
             py::arg("subgroup"))
        .def_property_readonly("rep", &Coset::rep)
        .def_property_readonly("subgroup", &Coset::subgroup)
        .def("member", &Coset::member)
        .def("elements", &Coset::elements, py::arg("cap") = 40320)
        .def(py::self == py::self)
        .def("__repr__",
             [](const Coset& c) { return "Coset(rep=" + one_line_str(c.rep()) + ")"; });

    py::class_<MarkedDoubleCoset>(m, "MarkedDoubleCoset")
        .def(py::init<ParabolicSubgroup, const Permutation&, ParabolicSubgroup>(), py::arg("left"),
             py::arg("sigma"), py::arg("right"))
        .def_property_readonly("left", &MarkedDoubleCoset::left)
        .def_property_readonly("rep", &MarkedDoubleCoset::rep)
        .def_property_readonly("right", &MarkedDoubleCoset::right)
        .def("elements", &MarkedDoubleCoset::elements, py::arg("cap") = 1'000'000)
        .def(py::self == py::self)
        .def("__repr__", [](const MarkedDoubleCoset& d) {
            return "MarkedDoubleCoset(rep=" + one_line_str(d.rep()) + ")";
        });

    py::class_<Bar>(m, "Bar")
        .def(py::init<double, double>(), py::arg("birth"), py::arg("death"))
        .def_readonly("birth", &Bar::birth)
        .def_readonly("death", &Bar::death)
        .def("__repr__", [](const Bar& b) {
            return "Bar(" + std::to_string(b.birth) + ", " + std::to_string(b.death) + ")";
        });

    py::class_<Barcode>(m, "Barcode")
        .def(py::init([](const std::vector<std::pair<double, double>>& pairs) {
                 std::vector<Bar> bars;
                 bars.reserve(pairs.size());
                 for (const auto& [b, d] : pairs) bars.push_back(Bar{b, d});
                 return Barcode(std::move(bars));
             }),
             py::arg("bars"), "Create from a list of (birth, death) pairs.")
        .def_property_readonly("n", &Barcode::size)
        .def_property_readonly("bars",
                               [](const Barcode& b) {
                                   std::vector<std::pair<double, double>> out;
                                   for (const auto& bar : b.bars())
                                       out.emplace_back(bar.birth, bar.death);
                                   return out;
                               })
        .def_property_readonly("births", &Barcode::births)
        .def_property_readonly("deaths", &Barcode::deaths)
        .def(py::self == py::self)
        .def("__len__", &Barcode::size)
        .def("__repr__",
             [](const Barcode& b) { return "Barcode(n=" + std::to_string(b.size()) + ")"; });

    m.def("read_barcode", &read_barcode_file, py::arg("path"),
          "Load a barcode from a .csv or .json file.");
    m.def(
        "parse_barcode",
        [](const std::string& text, const std::string& format) {
            return parse_barcode(text, format == "json" ? BarcodeFormat::json : BarcodeFormat::csv);
        },
        py::arg("text"), py::arg("format") = "csv");

    m.def("birth_permutation", &birth_permutation, py::arg("barcode"));
    m.def("death_permutation", &death_permutation, py::arg("barcode"));
    m.def("is_strict", &is_strict, py::arg("barcode"), py::arg("tol") = 0.0);
    m.def("barcode_permutation", &barcode_permutation, py::arg("barcode"), py::arg("tol") = 0.0,
          "The permutation sigma associated to a strict barcode.");
    m.def(
        "parabolics", [](const Barcode& b, double tol) { return parabolics(b, tol); },
        py::arg("barcode"), py::arg("tol") = 0.0);
    m.def("double_coset", &double_coset, py::arg("barcode"), py::arg("tol") = 0.0);
    m.def("stratum_of", &stratum_of, py::arg("barcode"), py::arg("tol") = 0.0);
    m.def("q_leq", &q_leq, py::arg("a"), py::arg("b"));
    m.def("contains", &contains, py::arg("stratum"), py::arg("barcode"), py::arg("tol") = 0.0);
    m.def("same_region", &same_region, py::arg("a"), py::arg("b"), py::arg("num_tol") = 0.0,
          py::arg("tie_tol") = 0.0);

    m.def(
        "project", [](const std::vector<double>& x) { return project(x); }, py::arg("x"),
        "Returns (mean, radius).");
    m.def(
        "direction", [](const std::vector<double>& x) { return direction(x); }, py::arg("x"));
    m.def(
        "face_of", [](const std::vector<double>& x, double tol) { return face_of(x, tol); },
        py::arg("x"), py::arg("tol") = 0.0);
    m.def(
        "decompose",
        [](const std::vector<double>& x, double tol) {
            return cone_coordinates_dict(decompose(x, tol));
        },
        py::arg("x"), py::arg("tol") = 0.0);
    m.def(
        "coxeter_coordinates",
        [](const Barcode& b, double tol) {
            return barcode_coordinates_dict(coxeter_coordinates(b, tol));
        },
        py::arg("barcode"), py::arg("tol") = 0.0);

    m.def(
        "modified_bottleneck",
        [](const Barcode& a, const Barcode& b) {
            const auto r = modified_bottleneck(a, b);
            return py::make_tuple(r.distance, r.matching);
        },
        py::arg("a"), py::arg("b"), "Returns (distance, matching).");
    m.def(
        "modified_wasserstein",
        [](const Barcode& a, const Barcode& b) {
            const auto r = modified_wasserstein(a, b);
            return py::make_tuple(r.distance, r.matching);
        },
        py::arg("a"), py::arg("b"), "Returns (distance, matching).");
    m.def(
        "quotient_distance",
        [](const Barcode& a, const Barcode& b, const std::string& norm) {
            return quotient_distance(a, b, parse_norm(norm));
        },
        py::arg("a"), py::arg("b"), py::arg("norm") = "linf");
    m.def(
        "distance_matrix",
        [](const std::vector<Barcode>& barcodes, const std::string& norm) {
            return distance_matrix(barcodes, parse_norm(norm));
        },
        py::arg("barcodes"), py::arg("norm") = "linf");

    m.def(
        "enumerate_complex",
        [](std::size_t n) {
            const auto poset = enumerate_complex(n);
            py::list faces;
            for (const auto& f : poset.faces) {
                py::dict item;
                item["rep"] = f.coset.rep().one_line();
                item["generators"] = f.coset.subgroup().generators();
                item["dim"] = f.dim;
                faces.append(item);
            }
            return faces;
        },
        py::arg("n"), "Faces of the Coxeter complex as dicts with rep/generators/dim.");
    m.def(
        "chamber_graph",
        [](std::size_t n) {
            const auto g = chamber_graph(n);
            py::list chambers;
            for (const auto& c : g.chambers) chambers.append(c.one_line());
            return py::make_tuple(chambers, g.neighbors);
        },
        py::arg("n"), "Returns (chambers in one-line notation, adjacency lists).");

    m.def(
        "random_barcode",
        [](std::size_t n, std::uint64_t seed, bool strict) {
            std::mt19937_64 rng(seed);
            return random_barcode(n, rng, strict);
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("strict") = false);

    m.def(
        "analyze",
        [](const Barcode& b, double tol, bool enumerate_dc) {
            Config cfg;
            cfg.tol = tol;
            return analyze_report(b, cfg, enumerate_dc).dump();
        },
        py::arg("barcode"), py::arg("tol") = 0.0, py::arg("enumerate_dc") = false,
        "Full analysis as a JSON string (same payload as the CLI).");
}
