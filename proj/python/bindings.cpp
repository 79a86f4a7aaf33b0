#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biclust/construct.hpp"
#include "biclust/core.hpp"
#include "biclust/exact.hpp"
#include "biclust/instances.hpp"
#include "biclust/mip_export.hpp"
#include "biclust/pareto.hpp"

namespace py = pybind11;
using namespace biclust;

namespace {

HeuristicConfig heuristic_config(IntersectMode mode, std::size_t bound, std::size_t seed_row,
                                 std::optional<double> adaptive_cutoff) {
  HeuristicConfig c;
  c.mode = mode;
  c.bound = bound;
  c.seed_row = seed_row;
  c.adaptive_cutoff = adaptive_cutoff;
  return c;
}

py::list front_to_list(const ParetoFront& f) {
  py::list out;
  for (const auto& e : f.points) out.append(e.representative);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Bi-objective biclustering of binary matrices";

  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<InfeasibleSeed>(m, "InfeasibleSeed", PyExc_RuntimeError);
  py::register_exception<EnumerationLimit>(m, "EnumerationLimit", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::enum_<IntersectMode>(m, "IntersectMode")
      .value("ZERO", IntersectMode::Zero)
      .value("ONE", IntersectMode::One)
      .value("ZERO_ONE", IntersectMode::ZeroOne);

  py::class_<BinaryMatrix>(m, "BinaryMatrix")
      .def(py::init([](const std::vector<std::vector<int>>& rows) { return BinaryMatrix::from_rows(rows); }),
           py::arg("rows"))
      .def_property_readonly("rows", &BinaryMatrix::rows)
      .def_property_readonly("cols", &BinaryMatrix::cols)
      .def("at", &BinaryMatrix::at, py::arg("row"), py::arg("col"))
      .def("to_list",
           [](const BinaryMatrix& a) {
             std::vector<std::vector<int>> out(a.rows(), std::vector<int>(a.cols()));
             for (std::size_t i = 1; i <= a.rows(); ++i) {
               for (std::size_t j = 1; j <= a.cols(); ++j) out[i - 1][j - 1] = a.at(i, j);
             }
             return out;
           })
      .def("__eq__", &BinaryMatrix::operator==);

  py::class_<Bicluster>(m, "Bicluster")
      .def_readonly("rows", &Bicluster::rows)
      .def_readonly("cols", &Bicluster::cols)
      .def_readonly("mode", &Bicluster::mode)
      .def_property_readonly("size_s", [](const Bicluster& b) { return b.rows.size(); })
      .def_property_readonly("size_n", [](const Bicluster& b) { return b.cols.size(); })
      .def("__repr__", [](const Bicluster& b) {
        return "Bicluster(rows=[" + join_indices(b.rows, ',') + "], cols=[" + join_indices(b.cols, ',') + "])";
      });

  m.def("parse_mode", &parse_mode, py::arg("text"));
  m.def("analog_vector", [](const BinaryMatrix& a, const RowSet& s) { return analog_vector(a, s).to_string(); },
        py::arg("matrix"), py::arg("rows"));
  m.def("intersect_sets", &intersect_sets, py::arg("matrix"), py::arg("rows"), py::arg("mode"));
  m.def("ideal_nadir", [](const BinaryMatrix& a, IntersectMode v) {
    auto in = ideal_nadir(a, v);
    return py::make_tuple(py::make_tuple(in.ideal.size_s, in.ideal.size_n),
                          py::make_tuple(in.nadir.size_s, in.nadir.size_n));
  }, py::arg("matrix"), py::arg("mode"));

  m.def("generate", [](std::size_t r, std::size_t n, double density, std::uint64_t seed) {
    return generate({r, n, density, seed});
  }, py::arg("rows"), py::arg("cols"), py::arg("density") = 0.5, py::arg("seed") = 0);
  m.def("load_instance", &load_instance, py::arg("name_or_path"));
  m.def("choose_target", &choose_target, py::arg("matrix"), py::arg("mode"));

  m.def("algorithm1", [](const BinaryMatrix& a, IntersectMode v, std::size_t bound, std::size_t seed_row,
                         bool accelerated, std::optional<double> adaptive_cutoff) {
    auto c = heuristic_config(v, bound, seed_row, adaptive_cutoff);
    return accelerated ? algorithm1_accelerated(a, c) : algorithm1(a, c);
  }, py::arg("matrix"), py::arg("mode"), py::arg("bound"), py::arg("seed_row"), py::arg("accelerated") = false,
        py::arg("adaptive_cutoff") = py::none());
  m.def("algorithm2", [](const BinaryMatrix& a, IntersectMode v, std::size_t bound, std::size_t seed_row,
                         bool accelerated, std::optional<double> adaptive_cutoff) {
    auto c = heuristic_config(v, bound, seed_row, adaptive_cutoff);
    return accelerated ? algorithm2_accelerated(a, c) : algorithm2(a, c);
  }, py::arg("matrix"), py::arg("mode"), py::arg("bound"), py::arg("seed_row"), py::arg("accelerated") = false,
        py::arg("adaptive_cutoff") = py::none());

  m.def("exact_g1", [](const BinaryMatrix& a, IntersectMode v, std::size_t bound,
                       std::optional<std::size_t> seed_row) {
    ExactOptions o;
    o.seed_row = seed_row;
    return exact_g1(a, v, bound, o);
  }, py::arg("matrix"), py::arg("mode"), py::arg("bound"), py::arg("seed_row") = py::none());
  m.def("exact_g2", [](const BinaryMatrix& a, IntersectMode v, std::size_t bound,
                       std::optional<std::size_t> seed_row) {
    ExactOptions o;
    o.seed_row = seed_row;
    return exact_g2(a, v, bound, o);
  }, py::arg("matrix"), py::arg("mode"), py::arg("bound"), py::arg("seed_row") = py::none());
  m.def("exact_pareto", [](const BinaryMatrix& a, IntersectMode v) { return front_to_list(exact_pareto(a, v)); },
        py::arg("matrix"), py::arg("mode"));
  m.def("epsilon_constraint", [](const BinaryMatrix& a, IntersectMode v, int p, std::size_t epsilon,
                                 const std::string& solver) {
    EpsilonConfig c;
    c.mode = v;
    c.p = p;
    c.epsilon = epsilon;
    if (solver == "heuristic") c.solver = SubproblemSolver::Heuristic;
    else if (solver != "exact") throw PreconditionError("solver must be 'exact' or 'heuristic'");
    return front_to_list(epsilon_constraint(a, c));
  }, py::arg("matrix"), py::arg("mode"), py::arg("p") = 1, py::arg("epsilon") = 1, py::arg("solver") = "exact");

  m.def("export_ip1", [](const BinaryMatrix& a, IntersectMode v, std::size_t bound, bool strengthen,
                         bool preprocess, std::optional<std::size_t> seed_row) {
    return model_to_string(build_ip1(a, v, bound, {strengthen, preprocess, seed_row}));
  }, py::arg("matrix"), py::arg("mode"), py::arg("bound"), py::arg("strengthen") = false,
        py::arg("preprocess") = false, py::arg("seed_row") = py::none());
  m.def("export_ip2", [](const BinaryMatrix& a, IntersectMode v, std::size_t bound, bool strengthen,
                         bool preprocess, std::optional<std::size_t> seed_row) {
    return model_to_string(build_ip2(a, v, bound, {strengthen, preprocess, seed_row}));
  }, py::arg("matrix"), py::arg("mode"), py::arg("bound"), py::arg("strengthen") = false,
        py::arg("preprocess") = false, py::arg("seed_row") = py::none());
}
