#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cubebr/brauer.hpp"
#include "cubebr/clifford.hpp"
#include "cubebr/pipeline.hpp"

namespace py = pybind11;
using namespace cubebr;

namespace {

QuadFieldElem quad(const std::string& a, const std::string& b, long m) {
  return QuadFieldElem(parse_rat(a), parse_rat(b), m);
}

py::tuple job_tuple(const JobResult& r) { return py::make_tuple(render(r.report), r.status, r.exit_code); }

std::map<std::string, std::string> invariant_map(const InvariantTable& t) {
  std::map<std::string, std::string> out;
  for (const auto& e : nonzero(t)) out[e.prime] = to_string(thirds_to_rat(e.thirds));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<MathError>(m, "MathError", PyExc_ValueError);

  m.def("run_job", [](const std::string& config) { return job_tuple(run_job(parse_config(nlohmann::json::parse(config)))); },
        py::arg("config_json"));
  m.def("run_verify",
        [](const std::string& config) { return job_tuple(run_verify(parse_config(nlohmann::json::parse(config)))); },
        py::arg("config_json"));

  m.def(
      "cube_root",
      [](const std::string& a, const std::string& b, long field_m) -> std::optional<std::pair<std::string, std::string>> {
        auto r = cube_test(quad(a, b, field_m));
        if (!r) return std::nullopt;
        return std::make_pair(to_string(r->a), to_string(r->b));
      },
      py::arg("a"), py::arg("b") = "0", py::arg("field_m") = -3);

  m.def(
      "cyclic_descent",
      [](const std::string& a, const std::string& b) {
        auto d = cyclic_field_descent(quad(a, b, -3));
        return py::make_tuple(to_string(d.r), to_string(d.trace), d.split);
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "symbol_invariants",
      [](std::pair<std::string, std::string> t, std::pair<std::string, std::string> u) {
        return invariant_map(to_table(symbol_invariants(quad(t.first, t.second, -3), quad(u.first, u.second, -3))));
      },
      py::arg("t"), py::arg("u"));

  m.def(
      "clifford_trials",
      [](std::uint64_t seed, int trials, std::vector<std::uint64_t> fields) {
        auto s = run_clifford_trials(seed, trials, fields);
        py::dict ids;
        for (const auto& [name, t] : s.identities) ids[py::str(name)] = py::make_tuple(t.pass, t.fail);
        py::dict out;
        out["trials_run"] = s.trials_run;
        out["identities"] = ids;
        out["skipped"] = s.skipped;
        out["rewriter_words"] = s.rewriter_words;
        out["rewriter_agree"] = s.rewriter_agree;
        out["failures"] = s.failures;
        out["all_pass"] = s.all_pass();
        return out;
      },
      py::arg("seed") = 1, py::arg("trials") = 25, py::arg("fields") = std::vector<std::uint64_t>{7, 13, 31, 61});
}
