#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "minklen/length.hpp"
#include "minklen/rational_length.hpp"
#include "minklen/report.hpp"

namespace py = pybind11;
namespace report = minklen::report;

using Vertices = std::vector<minklen::LatticePoint>;

namespace {

minklen::LatticePolytope polytope(const Vertices& v) { return minklen::LatticePolytope(v); }

// Reports cross the boundary as JSON text; the Python side decodes them.
std::string invariants(const Vertices& v, std::size_t n, bool with_period, std::size_t cap) {
  report::Settings s;
  s.n = n;
  s.with_period = with_period;
  s.cap_lattice_points = cap;
  return report::invariants(polytope(v), s).dump();
}

std::string table(const Vertices& v, std::int64_t t_max, std::size_t n, std::size_t cap) {
  report::Settings s;
  s.n = n;
  s.t_max = t_max;
  s.cap_lattice_points = cap;
  return report::table_and_fit(polytope(v), s).dump();
}

std::string search(const std::string& problem, std::uint64_t seed, std::size_t budget,
                   std::int64_t box, std::size_t dim, unsigned threads) {
  report::SearchSettings s;
  s.problem = report::parse_problem(problem);
  s.seed = seed;
  s.budget = budget;
  s.box = box;
  s.dim = dim;
  s.threads = threads;
  return report::search(s).dump();
}

}  // namespace

PYBIND11_MODULE(_minklen, m) {
  m.doc() = "Minkowski-length invariants of lattice polytopes";
  py::register_exception<minklen::ResourceCapExceeded>(m, "ResourceCapExceeded", PyExc_RuntimeError);

  m.def(
      "minkowski_length",
      [](const Vertices& v, std::size_t n) {
        auto p = polytope(v);
        return minklen::minkowski_length(p, n == 0 ? p.ambient_dim() : n).length;
      },
      py::arg("vertices"), py::arg("n") = 0);
  m.def(
      "lattice_diameter", [](const Vertices& v) { return minklen::lattice_diameter(polytope(v)); },
      py::arg("vertices"));
  m.def(
      "rational_length",
      [](const Vertices& v, std::size_t n) {
        auto p = polytope(v);
        auto r = minklen::rational_minkowski_length(p, n == 0 ? p.ambient_dim() : n);
        return py::make_tuple(minklen::to_string(r.lambdas.back()),
                              r.certification == minklen::Certification::Certified);
      },
      py::arg("vertices"), py::arg("n") = 0);
  m.def("invariants", &invariants, py::arg("vertices"), py::arg("n") = 0, py::arg("with_period") = true,
        py::arg("cap_lattice_points") = 20000);
  m.def("table", &table, py::arg("vertices"), py::arg("t_max") = 12, py::arg("n") = 0,
        py::arg("cap_lattice_points") = 20000);
  m.def(
      "verify_paper", [](unsigned threads) { return report::verify_json(report::verify_corpus(threads)).dump(); },
      py::arg("threads") = 1);
  m.def("search", &search, py::arg("problem"), py::arg("seed") = 1, py::arg("budget") = 20,
        py::arg("box") = 6, py::arg("dim") = 3, py::arg("threads") = 1);
}
