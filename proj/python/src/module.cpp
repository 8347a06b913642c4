// Thin binding: specs and reports cross the boundary as JSON text.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "collapse_lab/analysis.hpp"
#include "collapse_lab/binomial.hpp"
#include "collapse_lab/errors.hpp"
#include "collapse_lab/report_io.hpp"
#include "collapse_lab/spec_io.hpp"
#include "collapse_lab/verify.hpp"

namespace py = pybind11;
namespace cl = collapse_lab;

namespace {

cl::FiniteWord word_of(const std::string& text, const std::string& alphabet) {
  std::string letters = alphabet;
  if (letters.empty())
    for (char c : text)
      if (letters.find(c) == std::string::npos) letters += c;
  return cl::FiniteWord::parse(cl::Alphabet::from_chars(letters), text);
}

std::string prefix(const std::string& spec, std::size_t length) {
  return cl::gen::prefix(cl::io::parse_spec(spec), length).str();
}

std::string complexity(const std::string& spec, std::size_t length, std::size_t n_max,
                       std::vector<unsigned> orders, bool witnesses) {
  const auto s = cl::io::parse_spec(spec);
  const auto rep = cl::analysis::complexity_report(cl::gen::prefix(s, length), std::move(orders), n_max,
                                                   witnesses);
  return cl::io::render_complexity(rep, cl::io::Metadata{s, length, std::nullopt, 0}, cl::io::Format::Json);
}

std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> collisions(const std::string& w,
                                                                                    unsigned k,
                                                                                    std::size_t n_max,
                                                                                    const std::string& alphabet) {
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> out;
  for (const auto& c : cl::analysis::find_collisions(word_of(w, alphabet), k, n_max))
    out.push_back({c.n, {c.u.str(), c.v.str()}});
  return out;
}

std::string reconstruct(const std::map<std::string, std::string>& pairs, const std::string& alphabet) {
  std::string letters = alphabet;
  if (letters.empty())
    for (const auto& [pair, w] : pairs)
      for (char c : pair)
        if (letters.find(c) == std::string::npos) letters += c;
  const auto a = cl::Alphabet::from_chars(letters);
  cl::analysis::ProjectionFamily family{a, {}};
  for (const auto& [pair, w] : pairs) {
    if (pair.size() != 2) throw cl::DomainError("pair '" + pair + "' must name two letters");
    family.set(a.letter(pair.substr(0, 1)), a.letter(pair.substr(1, 1)), cl::FiniteWord::parse(a, w));
  }
  return cl::analysis::reconstruct(family).str();
}

std::string verify(const std::string& scenario) {
  const auto* entry = cl::verify::find_scenario(scenario);
  if (entry == nullptr) throw py::key_error("unknown scenario " + scenario);
  return cl::io::report_json(cl::verify::run(*entry)).dump();
}

std::vector<std::string> scenarios() {
  std::vector<std::string> out;
  for (const auto& e : cl::verify::registry()) out.push_back(e.name);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "collapse_lab native core";
  m.attr("__version__") = cl::io::tool_version();

  // Translators run newest first, so bases go before derived classes.
  py::register_exception<cl::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<cl::io::SpecParseError>(m, "SpecParseError", PyExc_ValueError);
  py::register_exception<cl::OverflowError>(m, "OverflowError", PyExc_OverflowError);
  auto generator_error = py::register_exception<cl::GeneratorError>(m, "GeneratorError", PyExc_RuntimeError);
  py::register_exception<cl::DegenerateTrajectory>(m, "DegenerateTrajectory", generator_error.ptr());
  py::register_exception<cl::InconsistentProjectionFamily>(m, "InconsistentProjectionFamily", PyExc_ValueError);

  m.def("prefix", &prefix, py::arg("spec"), py::arg("length"));
  m.def("spec_hash", [](const std::string& spec) { return cl::io::spec_hash(cl::io::parse_spec(spec)); },
        py::arg("spec"));
  m.def("binomial",
        [](const std::string& w, const std::string& u, const std::string& alphabet) {
          const std::string letters = alphabet.empty() ? w + u : alphabet;
          const auto a = word_of(letters, "").alphabet();
          return cl::binomial(cl::FiniteWord::parse(a, w), cl::FiniteWord::parse(a, u));
        },
        py::arg("w"), py::arg("u"), py::arg("alphabet") = "");
  m.def("k_binomial_equivalent",
        [](const std::string& u, const std::string& v, unsigned k) {
          const auto a = word_of(u + v, "").alphabet();
          return cl::k_binomial_equivalent(cl::FiniteWord::parse(a, u), cl::FiniteWord::parse(a, v), k);
        },
        py::arg("u"), py::arg("v"), py::arg("k"));
  m.def("complexity", &complexity, py::arg("spec"), py::arg("length"), py::arg("n_max"),
        py::arg("orders") = std::vector<unsigned>{2}, py::arg("witnesses") = false);
  m.def("find_collisions", &collisions, py::arg("word"), py::arg("k"), py::arg("n_max"),
        py::arg("alphabet") = "");
  m.def("reconstruct", &reconstruct, py::arg("pairs"), py::arg("alphabet") = "");
  m.def("verify", &verify, py::arg("scenario"));
  m.def("scenarios", &scenarios);
}
