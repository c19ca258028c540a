// Python bindings. Results cross the boundary as JSON text; the opensos
// package decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "opensos/cli.hpp"
#include "opensos/report.hpp"

namespace py = pybind11;
using namespace opensos;

namespace {

Bounds bounds_from(const py::dict& kw) {
  Bounds b;
  for (const auto& [k, v] : kw) {
    auto key = py::cast<std::string>(k);
    auto n = py::cast<std::size_t>(v);
    if (key == "term_size") b.term_size = n;
    else if (key == "depth") b.depth = n;
    else if (key == "state_cap") b.state_cap = n;
    else if (key == "pair_cap") b.pair_cap = n;
    else if (key == "position_cap") b.position_cap = n;
    else throw py::value_error("unknown bound '" + key + "'");
  }
  return b;
}

Notion notion_from(const std::string& name) {
  auto n = parse_notion(name);
  if (!n) throw py::value_error("unknown notion '" + name + "'");
  return *n;
}

class Spec {
 public:
  explicit Spec(const std::string& text) : doc_(parse(text)) {}

  std::vector<std::string> names() const {
    std::vector<std::string> out;
    for (const auto& t : doc_.tss_decls) out.push_back(t->name());
    return out;
  }

  std::string document() const { return json_of(doc_).dump(); }

  std::string gsos_check(const std::string& tss) const {
    auto r = validate_positive_gsos(*doc_.tss(tss));
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"kind", x.kind}, {"explanation", x.explanation}});
    return Json{{"tss", tss}, {"ok", r.ok()}, {"violations", v}}.dump();
  }

  std::string ruloids(const std::string& tss, const std::string& term) const {
    auto t = doc_.tss(tss);
    Json out = Json::array();
    for (const auto& r : opensos::ruloids(parse_term(term, t->signature()), t)) out.push_back(json_of(r));
    return out.dump();
  }

  std::string transitions(const std::string& tss, const std::string& term) const {
    auto t = doc_.tss(tss);
    Json out = Json::array();
    for (const auto& s : opensos::transitions(parse_term(term, t->signature()), t)) out.push_back(json_of(s));
    return out.dump();
  }

  std::string check(const std::string& tss, const std::string& notion, const std::string& lhs,
                    const std::string& rhs, const py::dict& bounds) const {
    auto t = doc_.tss(tss);
    const auto& sig = t->signature();
    return json_of(opensos::check(notion_from(notion), t, parse_term(lhs, sig), parse_term(rhs, sig), bounds_from(bounds)))
        .dump();
  }

  std::string advise(const std::string& base, const std::string& ext, const std::string& notion,
                     const py::dict& bounds) const {
    std::vector<Equation> axioms;
    for (const auto& e : doc_.equations) {
      if (e.tss && *e.tss == base) axioms.push_back(e);
    }
    AdvisorOptions opts;
    opts.bounds = bounds_from(bounds);
    auto ext_ = resolve_extension(doc_.tss(base), doc_.tss(ext));
    return json_of(preservation_advisor(axioms, ext_, notion_from(notion), opts)).dump();
  }

 private:
  SpecDocument doc_;
};

py::tuple run(const std::vector<std::string>& args) {
  std::vector<std::string> full{"opensos"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : full) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_opensos, m) {
  m.doc() = "Open-term bisimulation for positive GSOS specifications";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());

  py::class_<Spec>(m, "Spec")
      .def(py::init<const std::string&>(), py::arg("text"))
      .def("names", &Spec::names)
      .def("document", &Spec::document)
      .def("gsos_check", &Spec::gsos_check, py::arg("tss"))
      .def("ruloids", &Spec::ruloids, py::arg("tss"), py::arg("term"))
      .def("transitions", &Spec::transitions, py::arg("tss"), py::arg("term"))
      .def("check", &Spec::check, py::arg("tss"), py::arg("notion"), py::arg("lhs"), py::arg("rhs"),
           py::arg("bounds") = py::dict())
      .def("advise", &Spec::advise, py::arg("base"), py::arg("ext"), py::arg("notion"),
           py::arg("bounds") = py::dict());

  m.def("run", &run, py::arg("args"), "Run the command line in-process; returns (exit code, stdout, stderr).");
}
