#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "comppat/asymptotics.hpp"
#include "comppat/cli.hpp"
#include "comppat/genfun.hpp"
#include "comppat/patterns.hpp"
#include "comppat/words.hpp"

namespace py = pybind11;
using namespace comppat;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

PatternId pattern(const std::string& name) {
  const auto p = parse_pattern(name);
  if (!p) throw UsageError("unknown pattern '" + name + "'");
  return *p;
}

py::dict table3(const TruncatedSeries& s) {
  py::dict out;
  for (const auto& [mono, c] : s.terms()) out[py::make_tuple(mono.n, mono.m, mono.r)] = to_py(c);
  return out;
}

py::dict table3(const OccurrenceTable& t) {
  py::dict out;
  for (const auto& [mono, c] : t.counts) out[py::make_tuple(mono.n, mono.m, mono.r)] = to_py(c);
  return out;
}

py::dict table2(const std::map<Monomial, BigInt>& counts) {
  py::dict out;
  for (const auto& [mono, c] : counts) out[py::make_tuple(mono.m, mono.r)] = to_py(c);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pattern statistics in compositions and words";
  m.attr("__version__") = kToolVersion;
  m.attr("PATTERNS") = py::make_tuple("111", "112", "221", "123", "peak", "valley");

  m.def(
      "expand",
      [](const std::string& p, const std::string& set, unsigned order) {
        return table3(build_gf(pattern(p), PartSet::parse(set), order));
      },
      py::arg("pattern"), py::arg("set") = "nat", py::arg("order"),
      "Coefficients {(n, m, r): count} of the trivariate series.");

  m.def(
      "avoiders",
      [](const std::string& p, const std::string& set, unsigned order) {
        const TruncatedSeries s = substitute_z1(substitute_y0(build_gf(pattern(p), PartSet::parse(set), order)));
        py::list out;
        for (unsigned n = 0; n <= order; ++n) out.append(to_py(s.coefficient(n, 0, 0)));
        return out;
      },
      py::arg("pattern"), py::arg("set") = "nat", py::arg("order"));

  m.def(
      "words",
      [](const std::string& p, unsigned k, unsigned order) { return table2(word_gf(pattern(p), k, order).terms()); },
      py::arg("pattern"), py::arg("k"), py::arg("order"), "Coefficients {(m, r): count} for words over [k].");

  m.def(
      "brute_force",
      [](const std::string& p, const std::string& set, unsigned max_n) {
        return table3(brute_force_table(pattern(p), PartSet::parse(set), max_n));
      },
      py::arg("pattern"), py::arg("set") = "nat", py::arg("max_n"));

  m.def(
      "brute_force_words",
      [](const std::string& p, unsigned k, unsigned max_m) {
        return table2(brute_force_word_table(pattern(p), k, max_m).counts);
      },
      py::arg("pattern"), py::arg("k"), py::arg("max_m"));

  m.def(
      "count_occurrences",
      [](const std::vector<std::uint32_t>& parts, const std::string& p) { return count_occurrences(parts, pattern(p)); },
      py::arg("parts"), py::arg("pattern"));

  m.def(
      "eval_f", [](const std::string& p, Complex x) { return eval_f(pattern(p), x); }, py::arg("pattern"),
      py::arg("x"));

  m.def(
      "estimate",
      [](const std::string& p, double radius, unsigned samples) {
        Tolerances tol;
        tol.radius = radius;
        tol.samples = samples;
        const AsymptoticEstimate est = estimate(pattern(p), tol);
        py::dict out;
        out["rho"] = est.rho;
        out["v"] = est.growth_v;
        out["K"] = est.constant_K;
        out["winding"] = est.winding;
        out["residual"] = est.residual;
        return out;
      },
      py::arg("pattern"), py::arg("radius") = kContourRadius, py::arg("samples") = kContourSamples);

  m.def(
      "winding_number",
      [](const std::string& p, double radius, unsigned samples) { return winding_number(pattern(p), radius, samples); },
      py::arg("pattern"), py::arg("radius") = kContourRadius, py::arg("samples") = kContourSamples);

  m.def(
      "emit_curve",
      [](const std::string& p, double radius, unsigned samples) {
        std::vector<std::tuple<double, double, double, double>> out;
        for (const auto& pt : emit_curve(pattern(p), radius, samples)) out.emplace_back(pt.re_x, pt.im_x, pt.re_f, pt.im_f);
        return out;
      },
      py::arg("pattern"), py::arg("radius") = kContourRadius, py::arg("samples") = kContourSamples);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one command line in-process; returns (exit_code, stdout, stderr).");
}
