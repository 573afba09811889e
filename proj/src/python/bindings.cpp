#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "contentlab/cli.hpp"
#include "contentlab/descriptor.hpp"
#include "contentlab/harness.hpp"
#include "contentlab/report_io.hpp"

namespace py = pybind11;
using namespace contentlab;

namespace {

Limits limits_of(std::size_t max_ring, std::size_t max_alg) {
  Limits l;
  l.max_ring = max_ring;
  l.max_alg = max_alg;
  return l;
}

std::string analyze(const std::string& base, const std::string& alg, unsigned n_max, bool timings,
                    std::size_t max_ring, std::size_t max_alg) {
  ReportOptions opt;
  opt.n_max = n_max;
  opt.limits = limits_of(max_ring, max_alg);
  const auto s = parse_algebra(alg, parse_ring(base, opt.limits), opt.limits);
  return report_to_json(full_report({s->base()->descriptor(), s->descriptor(), s}, opt), timings).dump();
}

std::string content_of(const std::string& base, const std::string& alg, const std::string& elem) {
  const auto s = parse_algebra(alg, parse_ring(base));
  return to_string(content(parse_element(elem, s)));
}

std::string verify_theorems(const std::vector<std::size_t>& moduli, const std::vector<std::size_t>& depths,
                            bool composites, bool reports) {
  CorpusParams p;
  p.moduli = moduli;
  p.depths = depths;
  if (!composites) p.composites.clear();
  const Corpus c = generate_corpus(p);
  SuiteSummary s = verify_theorem_suite(c);
  const auto loc = verify_localization_lemmas(c);
  s.violations.insert(s.violations.end(), loc.violations.begin(), loc.violations.end());
  if (!reports) s.reports.clear();
  return summary_to_json(s, false).dump();
}

py::tuple run_command(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Content, McCoy and related properties of finite free algebras";
  py::register_exception<Error>(m, "ContentlabError", PyExc_ValueError);

  m.def("analyze", &analyze, py::arg("base"), py::arg("alg"), py::arg("n_max") = 8, py::arg("timings") = false,
        py::arg("max_ring") = 4096, py::arg("max_alg") = 4096, "Full property report as a JSON string.");
  m.def("content", &content_of, py::arg("base"), py::arg("alg"), py::arg("elem"));
  m.def("verify_example1", [](unsigned depth) { return example1_to_json(verify_example1(depth)).dump(); },
        py::arg("depth") = 4);
  m.def("verify_theorems", &verify_theorems, py::arg("moduli"), py::arg("depths"), py::arg("composites") = true,
        py::arg("reports") = false);
  m.def("ring_size", [](const std::string& d) { return parse_ring(d)->size(); }, py::arg("descriptor"));
  m.def("run", &run_command, py::arg("args"), "Runs the command-line tool; returns (status, stdout, stderr).");
}
