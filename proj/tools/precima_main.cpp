#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "precima/axioms.hpp"
#include "precima/corpus.hpp"
#include "precima/reproduce.hpp"

namespace {

using namespace precima;

// Exit codes: measure: 0 defined, 2 undefined/undecided, 1 input error.
// axiom: 0 satisfied-on-instances, 3 violated, 2 otherwise.
constexpr int EXIT_INPUT_ERROR = 1;
constexpr int EXIT_UNDEFINED = 2;
constexpr int EXIT_VIOLATED = 3;

std::string read_source(const std::string& source) {
  if (source.rfind("corpus:", 0) == 0)
    return corpus::get(source.substr(7)).payload;
  std::ifstream in(source);
  if (!in) throw Error("cannot open '" + source + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

AcceptingPetriNet load_model(const std::string& source) {
  return parse_net(read_source(source));
}

EventLog load_log(const std::string& source) {
  return parse_log(read_source(source));
}

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (!value || !*value) return fallback;
  return (std::size_t)std::strtoull(value, nullptr, 10);
}

struct CommonOptions {
  std::uint32_t k = 2;
  std::uint32_t max_window = 5;
  std::uint64_t seed = 0;
  std::string weighting = "visits";
  std::string tiebreak = "lexicographic";
  std::string mode = "deterministic";
  std::uint64_t trace_cap = 100000;
  std::string format = "text";

  void attach(CLI::App* cmd) {
    cmd->add_option("--k", k, "projection subset size (pcc)");
    cmd->add_option("--max-window", max_window, "negative-event window");
    cmd->add_option("--seed", seed, "seed for random tiebreak / sampling");
    cmd->add_option("--weighting", weighting, "visits|events")
        ->check(CLI::IsMember({"visits", "events"}));
    cmd->add_option("--tiebreak", tiebreak, "lexicographic|random")
        ->check(CLI::IsMember({"lexicographic", "random"}));
    cmd->add_option("--mode", mode, "deterministic|sampled (negative-event)")
        ->check(CLI::IsMember({"deterministic", "sampled"}));
    cmd->add_option("--trace-cap", trace_cap, "greco enumeration cap");
    cmd->add_option("--format", format, "text|records")
        ->check(CLI::IsMember({"text", "records"}));
  }

  MeasureOptions to_measure_options() const {
    MeasureOptions opt;
    opt.k = k;
    opt.max_window = max_window;
    opt.seed = seed;
    opt.weighting = weighting == "events" ? MeasureOptions::Weighting::Events
                                          : MeasureOptions::Weighting::Visits;
    opt.tiebreak = tiebreak == "random" ? Tiebreak::seeded_random(seed)
                                        : Tiebreak::lexicographic();
    opt.negative_mode = mode == "sampled"
                            ? MeasureOptions::NegativeEventMode::Sampled
                            : MeasureOptions::NegativeEventMode::Deterministic;
    opt.trace_cap = trace_cap;
    opt.limits.state_cap = env_cap("PRECIMA_STATE_CAP", opt.limits.state_cap);
    opt.align_cap = env_cap("PRECIMA_ALIGN_CAP", opt.align_cap);
    return opt;
  }
};

int run_measure(const std::string& measure, const std::string& model_src,
                const std::string& log_src, const CommonOptions& common) {
  const MeasureHandle& handle = find_measure(measure);
  PrecisionReport report;
  try {
    report = handle.eval(load_log(log_src), load_model(model_src),
                         common.to_measure_options());
  } catch (const UndecidedError& e) {
    std::cout << "undecided: " << e.what() << "\n";
    return EXIT_UNDEFINED;
  }
  std::cout << (common.format == "records" ? report.to_record() + "\n"
                                           : report.to_text());
  return report.defined() ? 0 : EXIT_UNDEFINED;
}

int run_axiom(const std::string& axiom, const std::string& measure,
              const std::string& model_src, const std::string& model1_src,
              const std::string& model2_src, const std::string& log_src,
              const std::string& log1_src, const std::string& log2_src,
              int runs, const std::vector<std::uint64_t>& seeds,
              const CommonOptions& common) {
  const MeasureHandle& handle = find_measure(measure);
  MeasureOptions opt = common.to_measure_options();
  auto need = [](const std::string& value, const std::string& flag) {
    if (value.empty())
      throw Error("this axiom check needs " + flag);
    return value;
  };
  AxiomReport report;
  if (axiom == "A1") {
    report = check_a1(handle, load_log(need(log_src, "--log")),
                      load_model(need(model_src, "--model")), runs, seeds, opt);
  } else if (axiom == "A2") {
    report = check_a2(handle, load_log(need(log_src, "--log")),
                      load_model(need(model1_src, "--model1")),
                      load_model(need(model2_src, "--model2")), opt);
  } else if (axiom == "A3") {
    EventLog log = load_log(need(log_src, "--log"));
    AcceptingPetriNet model = load_model(need(model_src, "--model"));
    std::set<Activity> alphabet = log.alphabet();
    for (const auto& a : model.net.alphabet()) alphabet.insert(a);
    report = check_a3(handle, log, model, alphabet, opt);
  } else if (axiom == "A4") {
    report = check_a4(handle, load_log(need(log_src, "--log")),
                      load_model(need(model1_src, "--model1")),
                      load_model(need(model2_src, "--model2")), opt);
  } else if (axiom == "A5") {
    report = check_a5(handle, load_log(need(log1_src, "--log1")),
                      load_log(need(log2_src, "--log2")),
                      load_model(need(model_src, "--model")), opt);
  } else {
    throw Error("unknown axiom '" + axiom + "' (expected A1..A5)");
  }
  std::cout << (common.format == "records" ? report.to_record() + "\n"
                                           : report.to_text());
  switch (report.verdict) {
    case Verdict::SatisfiedOnInstances: return 0;
    case Verdict::Violated: return EXIT_VIOLATED;
    default: return EXIT_UNDEFINED;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"precima: precision measures, their axioms, and the bundled "
               "counterexample corpus"};
  app.require_subcommand(1);

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "evaluate one measure");
  std::string measure_name, model_src, log_src;
  CommonOptions measure_options;
  measure_cmd->add_option("--measure", measure_name, "measure name")
      ->required();
  measure_cmd->add_option("--model", model_src, "net file or corpus:<name>")
      ->required();
  measure_cmd->add_option("--log", log_src, "log file or corpus:<name>")
      ->required();
  measure_options.attach(measure_cmd);

  // axiom
  auto* axiom_cmd = app.add_subcommand("axiom", "run one axiom check");
  std::string axiom_id, ax_measure, ax_model, ax_model1, ax_model2, ax_log,
      ax_log1, ax_log2;
  int ax_runs = 5;
  std::vector<std::uint64_t> ax_seeds;
  CommonOptions axiom_options;
  axiom_cmd->add_option("axiom", axiom_id, "A1..A5")->required();
  axiom_cmd->add_option("--measure", ax_measure, "measure name")->required();
  axiom_cmd->add_option("--model", ax_model, "model (A1, A3, A5)");
  axiom_cmd->add_option("--model1", ax_model1, "first model (A2, A4)");
  axiom_cmd->add_option("--model2", ax_model2, "second model (A2, A4)");
  axiom_cmd->add_option("--log", ax_log, "log (A1..A4)");
  axiom_cmd->add_option("--log1", ax_log1, "first log (A5)");
  axiom_cmd->add_option("--log2", ax_log2, "second log (A5)");
  axiom_cmd->add_option("--runs", ax_runs, "repetitions for A1");
  axiom_cmd->add_option("--seeds", ax_seeds, "explicit seeds for A1");
  axiom_options.attach(axiom_cmd);

  // reproduce-paper
  auto* reproduce_cmd = app.add_subcommand(
      "reproduce-paper",
      "recompute every published reference value and the axiom matrix");

  // corpus
  auto* corpus_cmd = app.add_subcommand("corpus", "inspect the bundled corpus");
  auto* corpus_list = corpus_cmd->add_subcommand("list", "list entry names");
  auto* corpus_show = corpus_cmd->add_subcommand("show", "print one entry");
  auto* corpus_export =
      corpus_cmd->add_subcommand("export", "write entries to .net/.log files");
  std::string corpus_name, export_dir = ".";
  corpus_show->add_option("name", corpus_name, "entry name")->required();
  corpus_export->add_option("name", corpus_name, "entry name")->required();
  corpus_export->add_option("--out", export_dir, "output directory");

  // dot
  auto* dot_cmd = app.add_subcommand("dot", "emit DOT for a model's automata");
  std::string dot_model, dot_what = "language";
  dot_cmd->add_option("--model", dot_model, "net file or corpus:<name>")
      ->required();
  dot_cmd->add_option("--what", dot_what, "language|stategraph")
      ->check(CLI::IsMember({"language", "stategraph"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (measure_cmd->parsed())
      return run_measure(measure_name, model_src, log_src, measure_options);
    if (axiom_cmd->parsed())
      return run_axiom(axiom_id, ax_measure, ax_model, ax_model1, ax_model2,
                       ax_log, ax_log1, ax_log2, ax_runs, ax_seeds,
                       axiom_options);
    if (reproduce_cmd->parsed()) {
      ReproduceResult result = reproduce_paper();
      std::cout << result.to_text();
      return result.all_pass ? 0 : 1;
    }
    if (corpus_list->parsed()) {
      for (const auto& name : corpus::list_entries()) std::cout << name << "\n";
      return 0;
    }
    if (corpus_show->parsed()) {
      const auto& entry = corpus::get(corpus_name);
      std::cout << "# " << entry.name << " (" << entry.provenance << ")\n"
                << entry.payload;
      return 0;
    }
    if (corpus_export->parsed()) {
      const auto& entry = corpus::get(corpus_name);
      std::string ext =
          entry.kind == corpus::CorpusEntry::Kind::Model ? ".net" : ".log";
      std::filesystem::path path =
          std::filesystem::path(export_dir) / (entry.name + ext);
      std::ofstream out(path);
      if (!out) throw Error("cannot write '" + path.string() + "'");
      out << entry.payload;
      std::cout << path.string() << "\n";
      return 0;
    }
    if (dot_cmd->parsed()) {
      AcceptingPetriNet apn = load_model(dot_model);
      if (dot_what == "stategraph")
        std::cout << to_dot(explore(apn), apn);
      else
        std::cout << to_dot(language_dfa(apn));
      return 0;
    }
  } catch (const UndecidedError& e) {
    std::cerr << "undecided: " << e.what() << "\n";
    return EXIT_UNDEFINED;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_INPUT_ERROR;
  }
  return EXIT_INPUT_ERROR;
}
