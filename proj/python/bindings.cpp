#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smooth/bench.hpp"
#include "smooth/driver.hpp"
#include "smooth/io.hpp"

namespace py = pybind11;
using namespace smooth;

namespace {

Config make_config(const std::string& mode, std::optional<unsigned> descents, std::optional<unsigned> to_codim,
                   unsigned jobs, std::uint64_t seed, std::optional<double> time_limit, bool strict_cover,
                   bool combinations) {
  Config cfg;
  cfg.mode = parse_mode(mode);
  cfg.descent_depth = descents;
  cfg.to_codim = to_codim;
  cfg.jobs = jobs;
  cfg.seed = seed;
  cfg.limits.time_limit_seconds = time_limit;
  cfg.strict_cover = strict_cover;
  cfg.combinations = combinations;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Smoothness test for affine and projective varieties";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("variables", [](const Ideal& i) { return i.ring()->variables(); })
      .def_property_readonly("characteristic", [](const Ideal& i) { return i.ring()->field().characteristic(); })
      .def_property_readonly("generators",
                             [](const Ideal& i) {
                               std::vector<std::string> out;
                               for (const auto& g : i.generators()) out.push_back(g.to_string());
                               return out;
                             })
      .def("dimension", [](const Ideal& i) { return krull_dimension(i); })
      .def("contains", [](const Ideal& i, const std::string& f) { return ideal_membership(parse_polynomial(i.ring(), f), i); })
      .def("__str__", [](const Ideal& i) { return write_ideal(i); })
      .def("__repr__", [](const Ideal& i) {
        return "<Ideal with " + std::to_string(i.generators().size()) + " generators in " +
               std::to_string(i.ring()->arity()) + " variables>";
      });

  m.def("parse_ideal", [](const std::string& text) { return parse_ideal(text); }, py::arg("text"));
  m.def("read_ideal", &read_ideal_file, py::arg("path"));

  m.def(
      "check",
      [](const Ideal& ideal, bool projective, const std::string& mode, std::optional<unsigned> descents,
         std::optional<unsigned> to_codim, unsigned jobs, std::uint64_t seed, std::optional<double> time_limit,
         bool strict_cover, bool combinations, bool timings) {
        Config cfg = make_config(mode, descents, to_codim, jobs, seed, time_limit, strict_cover, combinations);
        Verdict v;
        {
          py::gil_scoped_release release;
          v = projective ? projective_smoothness(ideal, cfg) : smoothness_test(ideal, cfg);
        }
        return verdict_json(v, cfg, timings);
      },
      py::arg("ideal"), py::kw_only(), py::arg("projective") = false, py::arg("mode") = "hironaka",
      py::arg("descents") = py::none(), py::arg("to_codim") = py::none(), py::arg("jobs") = 1u,
      py::arg("seed") = 0u, py::arg("time_limit") = py::none(), py::arg("strict_cover") = false,
      py::arg("combinations") = true, py::arg("timings") = false);

  m.def("rational_normal_curve", [](unsigned d) { return rational_normal_curve(d).ideal; }, py::arg("d"));
  m.def("cyclic_polytope", [](unsigned d, unsigned n) { return cyclic_polytope_sr(d, n).ideal; }, py::arg("d"),
        py::arg("n"));
  m.def("veronese_ci", [] { return veronese_ci().ideal; });
  m.def(
      "coordinate_change",
      [](const Ideal& ideal, std::uint64_t seed, unsigned bitlength) {
        return random_coordinate_change(BenchInstance{"", ideal, true, std::nullopt, ""}, seed, bitlength).ideal;
      },
      py::arg("ideal"), py::arg("seed") = 1u, py::arg("bitlength") = 4u);
  m.def("suite_names", &bench_suite_names);
  m.def(
      "suite",
      [](const std::string& name, std::uint64_t seed) {
        std::vector<std::tuple<std::string, Ideal, std::optional<std::string>>> out;
        for (auto& inst : bench_suite(name, seed))
          out.emplace_back(inst.name, inst.ideal,
                           inst.expected ? std::optional<std::string>(to_string(*inst.expected)) : std::nullopt);
        return out;
      },
      py::arg("name"), py::arg("seed") = 1u);
}
