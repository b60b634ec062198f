#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dlexplain/cli.hpp"
#include "dlexplain/fol.hpp"
#include "dlexplain/ingest.hpp"
#include "dlexplain/learner.hpp"
#include "dlexplain/reasoner.hpp"
#include "dlexplain/text.hpp"

namespace py = pybind11;
using namespace dlx;

namespace {

struct PyKb {
  KnowledgeBase kb;
  MaterializedKb mkb;

  explicit PyKb(KnowledgeBase k) : kb(std::move(k)), mkb(materialize(kb)) {}

  ClassExpression expr(const std::string& text) const { return parse_expression(text, kb.signature); }
  LearningProblem problem(const std::string& text) const {
    auto p = parse_problem(text, kb.signature);
    check_problem(mkb, p);
    return p;
  }
};

SearchConfig make_config(std::size_t max_expansions, std::size_t max_length, std::size_t top_k,
                         const std::string& length_penalty, const std::string& noise, bool enable_disjunction) {
  SearchConfig cfg;
  cfg.max_expansions = max_expansions;
  cfg.max_length = max_length;
  cfg.top_k = top_k;
  cfg.length_penalty = Rational::parse(length_penalty);
  cfg.noise = Rational::parse(noise);
  cfg.enable_disjunction = enable_disjunction;
  cfg.validate();
  return cfg;
}

std::string translate(const std::string& text) {
  const auto line = text.starts_with("gci ") ? text.substr(4) : text;
  if (line.find("=>") != std::string::npos) return render_fol(translate_gci(parse_axiom(line, nullptr)));
  return render_fol(translate_class(parse_expression(line), 0));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", PyExc_ValueError);

  m.def("canonicalize", [](const std::string& t) { return canonicalize(parse_expression(t)).text(); },
        py::arg("expression"));
  m.def("render", [](const std::string& t) { return render_expression(parse_expression(t)); }, py::arg("expression"));
  m.def("render_unicode", [](const std::string& t) { return render_unicode(parse_expression(t)); },
        py::arg("expression"));
  m.def("length", [](const std::string& t) { return length(parse_expression(t)); }, py::arg("expression"));
  m.def("translate", &translate, py::arg("text"));

  py::class_<PyKb>(m, "KnowledgeBase")
      .def_static("from_text", [](const std::string& t) { return PyKb(parse_kb(t)); }, py::arg("text"))
      .def("to_text", [](const PyKb& k) { return serialize_kb(k.kb); })
      .def_property_readonly("individuals", [](const PyKb& k) { return k.kb.signature.individuals; })
      .def_property_readonly("classes", [](const PyKb& k) { return k.kb.signature.classes; })
      .def_property_readonly("roles", [](const PyKb& k) { return k.kb.signature.roles; })
      .def("retrieve", [](const PyKb& k, const std::string& e) { return retrieve(k.mkb, k.expr(e)); },
           py::arg("expression"))
      .def("instance_check",
           [](const PyKb& k, const std::string& ind, const std::string& e) {
             return instance_check(k.mkb, ind, k.expr(e));
           },
           py::arg("individual"), py::arg("expression"))
      .def("_verify",
           [](const PyKb& k, const std::string& problem, const std::string& e) {
             return solution_to_json(verify_solution(k.mkb, k.expr(e), k.problem(problem), SearchConfig{})).dump();
           },
           py::arg("problem"), py::arg("expression"))
      .def("_learn",
           [](const PyKb& k, const std::string& problem, std::size_t max_expansions, std::size_t max_length,
              std::size_t top_k, const std::string& length_penalty, const std::string& noise,
              bool enable_disjunction) {
             const auto cfg = make_config(max_expansions, max_length, top_k, length_penalty, noise, enable_disjunction);
             const auto p = k.problem(problem);
             SearchResult r;
             {
               py::gil_scoped_release release;
               r = search(k.mkb, p, cfg);
             }
             return learn_report_to_json(r, cfg).dump();
           },
           py::arg("problem"), py::arg("max_expansions"), py::arg("max_length"), py::arg("top_k"),
           py::arg("length_penalty"), py::arg("noise"), py::arg("enable_disjunction"));

  m.def(
      "_ingest",
      [](const std::string& annotations, const std::string& mapping, const std::string& role,
         const std::string& background, const std::set<std::string>& positives) {
        const auto records = parse_annotations(annotations);
        const auto kb = build_abox(records, parse_mapping(mapping), role, parse_kb(background));
        return std::make_pair(serialize_kb(kb), serialize_problem(emit_problem(records, positives)));
      },
      py::arg("annotations"), py::arg("mapping"), py::arg("role"), py::arg("background"), py::arg("positives"));
}
