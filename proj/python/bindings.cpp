#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qnr/spectrum.hpp"
#include "qnr/verify.hpp"

namespace py = pybind11;

namespace {

using Entries = std::vector<std::vector<std::array<double, 4>>>;

qnr::QMatrix to_matrix(const Entries& rows) {
  const std::size_t n = rows.size();
  qnr::QMatrix a(n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) throw qnr::DimensionError("row " + std::to_string(r) + " has the wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& e = rows[r][c];
      a(r, c) = qnr::Quaternion(e[0], e[1], e[2], e[3]);
    }
  }
  return a;
}

Entries from_matrix(const qnr::QMatrix& a) {
  Entries rows(a.n(), std::vector<std::array<double, 4>>(a.n()));
  for (std::size_t r = 0; r < a.n(); ++r)
    for (std::size_t c = 0; c < a.n(); ++c) rows[r][c] = a(r, c).components();
  return rows;
}

std::vector<std::array<double, 4>> from_vector(const qnr::QVector& x) {
  std::vector<std::array<double, 4>> out;
  for (std::size_t l = 0; l < x.size(); ++l) out.push_back(x[l].components());
  return out;
}

qnr::RunConfig config(std::size_t samples, std::uint64_t seed) {
  qnr::RunConfig cfg;
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quaternionic numerical range kernels.";

  py::register_exception<qnr::DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<qnr::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("parse_matrix", [](const std::string& path) { return from_matrix(qnr::parse_matrix(path)); }, py::arg("path"));

  m.def(
      "spherical_spectrum",
      [](const Entries& a) {
        const auto s = qnr::spherical_spectrum(to_matrix(a));
        std::vector<std::pair<std::complex<double>, int>> out;
        for (std::size_t l = 0; l < s.values.size(); ++l) out.emplace_back(s.values[l], s.multiplicities[l]);
        return out;
      },
      py::arg("a"));

  m.def("numerical_radius", [](const Entries& a, int angles) { return qnr::numerical_radius(to_matrix(a), angles); },
        py::arg("a"), py::arg("angles") = 720);

  m.def("operator_norm", [](const Entries& a) { return qnr::operator_norm(to_matrix(a)); }, py::arg("a"));

  m.def(
      "radius_lower_bound",
      [](const Entries& a, std::size_t count, std::uint64_t seed) {
        const auto lb = qnr::radius_lower_bound(to_matrix(a), count, seed);
        return py::make_tuple(lb.value, from_vector(lb.witness));
      },
      py::arg("a"), py::arg("count") = 4096, py::arg("seed") = 42);

  m.def(
      "section",
      [](const Entries& a, std::size_t count, std::uint64_t seed) {
        return qnr::section_plus(qnr::sample_range(to_matrix(a), count, seed)).points;
      },
      py::arg("a"), py::arg("count") = 10000, py::arg("seed") = 42);

  m.def(
      "quadratic_form",
      [](const Entries& a, const std::vector<std::array<double, 4>>& x) {
        qnr::QVector v(x.size());
        for (std::size_t l = 0; l < x.size(); ++l) v[l] = qnr::Quaternion(x[l][0], x[l][1], x[l][2], x[l][3]);
        return qnr::quadratic_form(to_matrix(a), v).components();
      },
      py::arg("a"), py::arg("x"));

  m.def(
      "attain_section_point",
      [](const Entries& a, std::complex<double> target, int starts, std::uint64_t seed)
          -> std::optional<std::vector<std::array<double, 4>>> {
        const auto x = qnr::attain_section_point(to_matrix(a), target, starts, seed);
        if (!x) return std::nullopt;
        return from_vector(*x);
      },
      py::arg("a"), py::arg("target"), py::arg("starts") = 32, py::arg("seed") = 42);

  m.def(
      "classify_json",
      [](const Entries& a) {
        const auto t = qnr::triangularize2(to_matrix(a));
        const auto region = qnr::classify_case(t);
        nlohmann::json out{{"case", region.case_number},
                           {"z1", qnr::complex_to_json(t.z1)},
                           {"z2", qnr::complex_to_json(t.z2)},
                           {"abs_p", t.p.norm()},
                           {"region", qnr::region_to_json(region)}};
        return out.dump();
      },
      py::arg("a"));

  m.def(
      "verify_json",
      [](const Entries& a, std::size_t samples, std::uint64_t seed) {
        return qnr::run_verify(to_matrix(a), config(samples, seed)).to_json().dump();
      },
      py::arg("a"), py::arg("samples") = 20000, py::arg("seed") = 42);

  m.def(
      "demo_json",
      [](const std::string& name, std::size_t samples, std::uint64_t seed) {
        return qnr::run_demo(name, config(samples, seed)).to_json().dump();
      },
      py::arg("name"), py::arg("samples") = 20000, py::arg("seed") = 42);

  m.def("demo_names", [] {
    std::vector<std::string> names;
    for (const auto& d : qnr::demo_registry()) names.push_back(d.name);
    return names;
  });

  m.def("demo_matrix", [](const std::string& name) { return from_matrix(qnr::find_demo(name).matrix); },
        py::arg("name"));
}
