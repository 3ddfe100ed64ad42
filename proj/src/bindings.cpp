#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "precima/axioms.hpp"
#include "precima/corpus.hpp"
#include "precima/reproduce.hpp"

namespace py = pybind11;
using namespace precima;

namespace {

MeasureOptions options_from_kwargs(const py::kwargs& kwargs) {
  MeasureOptions opt;
  for (auto item : kwargs) {
    std::string key = py::cast<std::string>(item.first);
    if (key == "k") {
      opt.k = py::cast<std::uint32_t>(item.second);
    } else if (key == "max_window") {
      opt.max_window = py::cast<std::uint32_t>(item.second);
    } else if (key == "seed") {
      opt.seed = py::cast<std::uint64_t>(item.second);
    } else if (key == "weighting") {
      std::string v = py::cast<std::string>(item.second);
      opt.weighting = v == "events" ? MeasureOptions::Weighting::Events
                                    : MeasureOptions::Weighting::Visits;
    } else if (key == "tiebreak") {
      std::string v = py::cast<std::string>(item.second);
      opt.tiebreak = v == "random" ? Tiebreak::seeded_random(opt.seed)
                                   : Tiebreak::lexicographic();
    } else if (key == "mode") {
      std::string v = py::cast<std::string>(item.second);
      opt.negative_mode = v == "sampled"
                              ? MeasureOptions::NegativeEventMode::Sampled
                              : MeasureOptions::NegativeEventMode::Deterministic;
    } else if (key == "trace_cap") {
      opt.trace_cap = py::cast<std::uint64_t>(item.second);
    } else if (key == "align_cap") {
      opt.align_cap = py::cast<std::size_t>(item.second);
    } else {
      throw Error("unknown option '" + key + "'");
    }
  }
  // A seed given together with tiebreak=random has to reach the tiebreak.
  if (opt.tiebreak.mode == Tiebreak::Mode::SeededRandom)
    opt.tiebreak.seed = opt.seed;
  return opt;
}

py::dict report_to_dict(const PrecisionReport& report) {
  py::dict out;
  out["measure"] = report.measure;
  out["value"] = report.value ? py::object(py::float_(*report.value))
                              : py::object(py::none());
  out["options"] = report.options;
  out["diagnostics"] = report.diagnostics;
  return out;
}

py::dict axiom_report_to_dict(const AxiomReport& report) {
  py::dict out;
  out["axiom"] = report.axiom;
  out["verdict"] = verdict_name(report.verdict);
  out["witness"] = report.witness;
  out["hypothesis_evidence"] = report.hypothesis_evidence;
  return out;
}

}  // namespace

PYBIND11_MODULE(_precima, m) {
  m.doc() = "Precision measures over accepting Petri nets, the axiom checks, "
            "and the bundled counterexample corpus";

  py::register_exception<Error>(m, "PrecimaError");

  py::class_<AcceptingPetriNet>(m, "Model")
      .def_static("parse", [](const std::string& text) { return parse_net(text); })
      .def("__repr__",
           [](const AcceptingPetriNet& apn) {
             return "<Model places=" + std::to_string(apn.net.num_places()) +
                    " transitions=" +
                    std::to_string(apn.net.num_transitions()) + ">";
           })
      .def("serialize", [](const AcceptingPetriNet& apn) { return serialize_net(apn); })
      .def("alphabet", [](const AcceptingPetriNet& apn) { return apn.net.alphabet(); })
      .def("language_dot",
           [](const AcceptingPetriNet& apn) { return to_dot(language_dfa(apn)); });

  py::class_<EventLog>(m, "Log")
      .def_static("parse", [](const std::string& text) { return parse_log(text); })
      .def("__repr__",
           [](const EventLog& log) {
             return "<Log traces=" + std::to_string(log.total_traces()) +
                    " distinct=" + std::to_string(log.traces.size()) + ">";
           })
      .def("serialize", [](const EventLog& log) { return serialize_log(log); })
      .def("alphabet", &EventLog::alphabet)
      .def("trace_set", [](const EventLog& log) { return trace_set(log); });

  m.def("parse_net", [](const std::string& text) { return parse_net(text); });
  m.def("parse_log", [](const std::string& text) { return parse_log(text); });
  m.def("is_trace", [](const AcceptingPetriNet& apn, const Trace& trace) {
    return is_trace(apn, trace);
  });
  m.def("is_fitting", [](const EventLog& log, const AcceptingPetriNet& apn) {
    return is_fitting(log, apn);
  });
  m.def("alignment_cost",
        [](const AcceptingPetriNet& apn, const Trace& trace) {
          return optimal_alignment(apn, trace).cost;
        });
  m.def("flower", [](const std::set<Activity>& alphabet) {
    return flower_model(alphabet);
  });

  m.def("measures", [] {
    std::vector<std::string> names;
    for (const auto& handle : measure_registry()) names.push_back(handle.name);
    return names;
  });
  m.def(
      "measure",
      [](const std::string& name, const EventLog& log,
         const AcceptingPetriNet& model, const py::kwargs& kwargs) {
        return report_to_dict(
            find_measure(name).eval(log, model, options_from_kwargs(kwargs)));
      },
      py::arg("name"), py::arg("log"), py::arg("model"));

  m.def(
      "check_axiom",
      [](const std::string& axiom, const std::string& measure,
         const py::kwargs& kwargs) {
        const MeasureHandle& handle = find_measure(measure);
        auto grab = [&](const char* key) {
          if (!kwargs.contains(key))
            throw Error(std::string("axiom ") + axiom + " needs " + key + "=");
          return kwargs[key];
        };
        MeasureOptions opt;
        if (kwargs.contains("k")) opt.k = py::cast<std::uint32_t>(kwargs["k"]);
        AxiomReport report;
        if (axiom == "A1") {
          int runs = kwargs.contains("runs")
                         ? py::cast<int>(kwargs["runs"])
                         : 5;
          report = check_a1(handle, py::cast<EventLog>(grab("log")),
                            py::cast<AcceptingPetriNet>(grab("model")), runs,
                            {}, opt);
        } else if (axiom == "A2") {
          report = check_a2(handle, py::cast<EventLog>(grab("log")),
                            py::cast<AcceptingPetriNet>(grab("model1")),
                            py::cast<AcceptingPetriNet>(grab("model2")), opt);
        } else if (axiom == "A3") {
          EventLog log = py::cast<EventLog>(grab("log"));
          AcceptingPetriNet model = py::cast<AcceptingPetriNet>(grab("model"));
          std::set<Activity> alphabet = log.alphabet();
          for (const auto& a : model.net.alphabet()) alphabet.insert(a);
          report = check_a3(handle, log, model, alphabet, opt);
        } else if (axiom == "A4") {
          report = check_a4(handle, py::cast<EventLog>(grab("log")),
                            py::cast<AcceptingPetriNet>(grab("model1")),
                            py::cast<AcceptingPetriNet>(grab("model2")), opt);
        } else if (axiom == "A5") {
          report = check_a5(handle, py::cast<EventLog>(grab("log1")),
                            py::cast<EventLog>(grab("log2")),
                            py::cast<AcceptingPetriNet>(grab("model")), opt);
        } else {
          throw Error("unknown axiom '" + axiom + "'");
        }
        return axiom_report_to_dict(report);
      },
      py::arg("axiom"), py::arg("measure"));

  auto corpus_mod = m.def_submodule("corpus", "bundled counterexample corpus");
  corpus_mod.def("list_entries", &corpus::list_entries);
  corpus_mod.def("model", &corpus::model);
  corpus_mod.def("log", &corpus::log);
  corpus_mod.def("payload",
                 [](const std::string& name) { return corpus::get(name).payload; });
  corpus_mod.def("provenance", [](const std::string& name) {
    return corpus::get(name).provenance;
  });
  corpus_mod.def("generate_fig6_log", &corpus::generate_fig6_log,
                 py::arg("seed"), py::arg("n_traces"));

  m.def("axiom_matrix_text", [] { return axiom_matrix().to_text(); });
  m.def("reproduce_paper", [] {
    ReproduceResult result = reproduce_paper();
    py::dict out;
    out["all_pass"] = result.all_pass;
    out["matrix_ok"] = result.matrix_ok;
    out["text"] = result.to_text();
    py::list rows;
    for (const auto& row : result.rows) {
      py::dict r;
      r["measure"] = row.measure;
      r["model"] = row.model;
      r["log"] = row.log;
      r["expected"] = row.expected;
      r["computed"] = row.computed ? py::object(py::float_(*row.computed))
                                   : py::object(py::none());
      r["pass"] = row.pass;
      rows.append(r);
    }
    out["rows"] = rows;
    return out;
  });
}
