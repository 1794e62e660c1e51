// Thin Python surface: formulas, automata, the realizability search and the
// clause-file tools. Machines cross the boundary as small Python objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "boundsyn/driver.hpp"
#include "boundsyn/verify.hpp"

namespace py = pybind11;
using namespace boundsyn;

namespace {

Semantics semantics_from(const std::string& s) {
  if (s == "mealy") return Semantics::Mealy;
  if (s == "moore") return Semantics::Moore;
  throw Error("semantics must be \"mealy\" or \"moore\"");
}

RunConfig config_from(const std::string& encoding, const std::optional<std::string>& semantics,
                      const std::string& search, int max_bound, bool minimize, bool synthesize,
                      bool counter_strategy, bool scc_reduction, const std::string& solver_cmd) {
  RunConfig c;
  c.encoding = parse_encoding_kind(encoding);
  if (semantics) c.semantics = semantics_from(*semantics);
  if (search != "exponential" && search != "linear") throw Error("search must be \"exponential\" or \"linear\"");
  c.search = search == "linear" ? SearchStrategy::Linear : SearchStrategy::Exponential;
  c.max_bound = max_bound;
  c.minimize = minimize;
  c.mode = synthesize ? Mode::Synthesis : Mode::Realizability;
  c.counter_strategy = counter_strategy;
  c.scc_reduction = scc_reduction;
  c.solver_command = solver_cmd;
  return c;
}

}  // namespace

PYBIND11_MODULE(_boundsyn, m) {
  m.doc() = "Bounded synthesis of reactive systems from LTL";

  py::register_exception<Error>(m, "BoundsynError");

  m.def("normalize", [](const std::string& text) { return ltl::to_string(ltl::parse(text)); },
        "Parse an LTL formula and print it back in canonical form.");
  m.def("nnf", [](const std::string& text) { return ltl::to_string(ltl::to_nnf(ltl::parse(text))); });

  py::class_<Specification>(m, "Specification")
      .def_static("from_json", [](const std::string& text) { return parse_specification(text); })
      .def_static("load", [](const std::string& path) { return load_specification(path); })
      .def_property_readonly("semantics",
                             [](const Specification& s) { return std::string(s.semantics == Semantics::Moore ? "moore" : "mealy"); })
      .def_readonly("inputs", &Specification::inputs)
      .def_readonly("outputs", &Specification::outputs)
      .def_property_readonly("formula", [](const Specification& s) { return ltl::to_string(s.formula()); });

  py::class_<TransitionSystem>(m, "TransitionSystem")
      .def_property_readonly("size", &TransitionSystem::size)
      .def_property_readonly("semantics",
                             [](const TransitionSystem& t) { return std::string(t.semantics() == Semantics::Moore ? "moore" : "mealy"); })
      .def_property_readonly("inputs", &TransitionSystem::inputs)
      .def_property_readonly("outputs", &TransitionSystem::outputs)
      .def("run",
           [](const TransitionSystem& t, const std::vector<std::set<std::string>>& inputs) {
             std::vector<std::set<std::string>> outs;
             for (const auto& step : run(t, inputs)) outs.push_back(step.outputs);
             return outs;
           },
           "Output sets produced on a finite input sequence, starting in state 0.")
      .def("to_aiger", [](const TransitionSystem& t) { return to_aiger(t); })
      .def("to_dot", [](const TransitionSystem& t) { return to_dot(t); });

  m.def("automaton_size",
        [](const Specification& s) {
          const Ucw u = ltl_to_ucw(s.formula(), s.inputs, s.outputs);
          return py::make_tuple(u.num_states(), u.num_rejecting());
        },
        "States and rejecting states of the specification automaton.");

  m.def("model_check",
        [](const TransitionSystem& t, const Specification& s) {
          return model_check(t, ltl_to_ucw(s.formula(), s.inputs, s.outputs)).pass;
        });

  m.def("check",
        [](const Specification& spec, const std::string& encoding, const std::optional<std::string>& semantics,
           const std::string& search, int max_bound, bool minimize, bool synthesize, bool counter_strategy,
           bool scc_reduction, const std::string& solver_cmd) {
          const RunConfig c = config_from(encoding, semantics, search, max_bound, minimize, synthesize,
                                          counter_strategy, scc_reduction, solver_cmd);
          SearchResult r;
          {
            py::gil_scoped_release release;
            r = search_realizability(spec, c);
          }
          py::dict out;
          out["outcome"] = std::string(to_string(r.outcome));
          out["bound"] = r.bound;
          out["system"] = r.system ? py::cast(*r.system) : py::none();
          py::list attempts;
          for (const auto& a : r.attempts) {
            attempts.append(py::make_tuple(a.environment ? "environment" : "system", a.bound,
                                           std::string(to_string(a.verdict)), a.seconds));
          }
          out["attempts"] = attempts;
          return out;
        },
        py::arg("spec"), py::arg("encoding") = "basic", py::arg("semantics") = py::none(),
        py::arg("search") = "exponential", py::arg("max_bound") = 8, py::arg("minimize") = false,
        py::arg("synthesize") = false, py::arg("counter_strategy") = true, py::arg("scc_reduction") = true,
        py::arg("solver_cmd") = "");

  m.def("emit",
        [](const Specification& spec, const std::string& encoding, int bound, const std::string& format) {
          RunConfig c;
          c.encoding = parse_encoding_kind(encoding);
          return emit_problem(spec, c, bound, format);
        },
        py::arg("spec"), py::arg("encoding") = "basic", py::arg("bound") = 1, py::arg("format") = "dimacs");

  m.def("normalize_clause_file",
        [](const std::string& text) { return logic::write_clause_file(logic::read_clause_file(text)); },
        "Read a DIMACS/QDIMACS/DQDIMACS file and write it back.");

  m.def("solve_dimacs",
        [](const std::string& text) -> py::object {
          const logic::ClauseFile file = logic::read_clause_file(text);
          if (!file.quantifiers.empty() || !file.dependencies.empty()) throw Error("expected a plain DIMACS file");
          logic::Cnf cnf;
          cnf.num_vars = file.num_vars;
          cnf.clauses = file.clauses;
          sat::SatResult r;
          {
            py::gil_scoped_release release;
            r = sat_solve(cnf);
          }
          if (r.status == sat::Status::Unsat) return py::bool_(false);
          if (r.status == sat::Status::Unknown) return py::none();
          std::vector<int> model;
          for (std::uint32_t v = 1; v <= cnf.num_vars; ++v) model.push_back(r.model[v] ? static_cast<int>(v) : -static_cast<int>(v));
          return py::cast(model);
        },
        "A model as signed literals, False when unsatisfiable, None when undecided.");
}
