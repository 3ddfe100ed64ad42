#include "precima/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "json.hpp"
#include "precima/corpus.hpp"

namespace precima {

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

MeasureOptions seeded_options(MeasureOptions opt, std::uint64_t seed) {
  opt.seed = seed;
  opt.tiebreak = Tiebreak::seeded_random(seed);
  opt.negative_mode = MeasureOptions::NegativeEventMode::Sampled;
  return opt;
}

std::vector<std::uint64_t> default_seeds(std::size_t n) {
  std::vector<std::uint64_t> seeds(n);
  for (std::size_t i = 0; i < n; ++i) seeds[i] = i + 1;
  return seeds;
}

/// Evaluate a stochastic measure over a seed batch; empty optional when some
/// evaluation came back undefined.
std::optional<std::vector<double>> seed_batch(const MeasureHandle& measure,
                                              const EventLog& log,
                                              const AcceptingPetriNet& model,
                                              const MeasureOptions& opt,
                                              std::size_t n) {
  std::vector<double> values;
  for (std::uint64_t seed : default_seeds(n)) {
    PrecisionReport r = measure.eval(log, model, seeded_options(opt, seed));
    if (!r.defined()) return std::nullopt;
    values.push_back(*r.value);
  }
  return values;
}

double mean(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / (double)xs.size();
}

double sample_variance(const std::vector<double>& xs, double m) {
  double sum = 0.0;
  for (double x : xs) sum += (x - m) * (x - m);
  return sum / ((double)xs.size() - 1.0);
}

// Upper critical values of Student's t at one-tailed alpha=0.01 and 0.005
// (two-tailed 0.01), dof 1..40; larger dof clamp to the dof-40 entry, which
// only errs toward "not significant".
const double T_CRIT_010[40] = {
    31.821, 6.965, 4.541, 3.747, 3.365, 3.143, 2.998, 2.896, 2.821, 2.764,
    2.718,  2.681, 2.650, 2.624, 2.602, 2.583, 2.567, 2.552, 2.539, 2.528,
    2.518,  2.508, 2.500, 2.492, 2.485, 2.479, 2.473, 2.467, 2.462, 2.457,
    2.453,  2.449, 2.445, 2.441, 2.437, 2.434, 2.431, 2.429, 2.426, 2.423};
const double T_CRIT_005[40] = {
    63.657, 9.925, 5.841, 4.604, 4.032, 3.707, 3.499, 3.355, 3.250, 3.169,
    3.106,  3.055, 3.012, 2.977, 2.947, 2.921, 2.898, 2.878, 2.861, 2.845,
    2.831,  2.819, 2.807, 2.797, 2.787, 2.779, 2.771, 2.763, 2.756, 2.750,
    2.744,  2.738, 2.733, 2.728, 2.724, 2.719, 2.715, 2.712, 2.708, 2.704};

WelchComparison welch(const std::vector<double>& xs,
                      const std::vector<double>& ys, bool two_tailed) {
  if (xs.size() < 2 || ys.size() < 2)
    throw Error("welch comparison needs at least two samples per side");
  WelchComparison out;
  double mx = mean(xs), my = mean(ys);
  double vx = sample_variance(xs, mx), vy = sample_variance(ys, my);
  double se2 = vx / (double)xs.size() + vy / (double)ys.size();
  if (se2 == 0.0) {
    out.t = mx == my ? 0.0 : (mx > my ? 1e9 : -1e9);
    out.dof = (double)(xs.size() + ys.size() - 2);
    out.significant = two_tailed ? mx != my : mx > my;
    return out;
  }
  out.t = (mx - my) / std::sqrt(se2);
  double a = vx / (double)xs.size();
  double b = vy / (double)ys.size();
  out.dof = (a + b) * (a + b) /
            (a * a / ((double)xs.size() - 1.0) +
             b * b / ((double)ys.size() - 1.0));
  int idx = std::clamp((int)std::floor(out.dof), 1, 40) - 1;
  double crit = two_tailed ? T_CRIT_005[idx] : T_CRIT_010[idx];
  out.significant = two_tailed ? std::fabs(out.t) > crit : out.t > crit;
  return out;
}

void put_batch_witness(AxiomReport& report, const std::string& tag,
                       const std::vector<double>& values) {
  double m = mean(values);
  report.witness["mean." + tag] = fmt4(m);
  report.witness["sd." + tag] = fmt4(std::sqrt(sample_variance(values, m)));
  report.witness["runs." + tag] = std::to_string(values.size());
}

constexpr std::size_t BATCH = 20;

}  // namespace

WelchComparison welch_greater(const std::vector<double>& xs,
                              const std::vector<double>& ys) {
  return welch(xs, ys, false);
}

WelchComparison welch_unequal(const std::vector<double>& xs,
                              const std::vector<double>& ys) {
  return welch(xs, ys, true);
}

// ---------------------------------------------------------------------------
// Registry

const std::vector<MeasureHandle>& measure_registry() {
  static const std::vector<MeasureHandle> registry = {
      {"greco",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return greco_precision(l, m, o);
       },
       false},
      {"simple-ba",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return simple_ba(l, m, o);
       },
       true},
      {"advanced-ba",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return advanced_ba(l, m, o);
       },
       false},
      {"etc",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return etc_precision(l, m, o);
       },
       false},
      {"one-align-etc",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return one_align_etc(l, m, o);
       },
       true},
      {"all-align-etc",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return all_align_etc(l, m, o);
       },
       false},
      {"negative-event",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return negative_event_precision(l, m, o);
       },
       true},
      {"pcc",
       [](const EventLog& l, const AcceptingPetriNet& m, const MeasureOptions& o) {
         return pcc_precision(l, m, o);
       },
       false},
  };
  return registry;
}

const MeasureHandle& find_measure(const std::string& name) {
  for (const auto& handle : measure_registry())
    if (handle.name == name) return handle;
  throw UnknownNameError("no measure named '" + name + "'");
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SatisfiedOnInstances: return "satisfied-on-instances";
    case Verdict::Violated: return "violated";
    case Verdict::HypothesisNotMet: return "hypothesis-not-met";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

std::string AxiomReport::to_text() const {
  std::string out = "axiom=" + axiom + "\n";
  out += "verdict=" + verdict_name(verdict) + "\n";
  for (const auto& [key, val] : witness) out += "witness." + key + "=" + val + "\n";
  for (const auto& e : hypothesis_evidence) out += "hypothesis=" + e + "\n";
  return out;
}

std::string AxiomReport::to_record() const {
  nlohmann::ordered_json record;
  record["axiom"] = axiom;
  record["verdict"] = verdict_name(verdict);
  record["witness"] = witness;
  record["hypothesis_evidence"] = hypothesis_evidence;
  return record.dump();
}

// ---------------------------------------------------------------------------
// Axiom checks

AxiomReport check_a1(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& model, int runs,
                     const std::vector<std::uint64_t>& seeds,
                     const MeasureOptions& opt) {
  if (runs < 2) throw Error("check_a1 needs at least two runs");
  AxiomReport report;
  report.axiom = "A1";
  report.witness["measure"] = measure.name;

  std::vector<std::optional<double>> values;
  std::vector<std::string> labels;
  if (measure.seeded) {
    std::vector<std::uint64_t> use = seeds;
    if (use.empty()) use = default_seeds((std::size_t)runs);
    for (std::uint64_t seed : use) {
      values.push_back(measure.eval(log, model, seeded_options(opt, seed)).value);
      labels.push_back("seed " + std::to_string(seed));
    }
  } else {
    for (int i = 0; i < runs; ++i) {
      values.push_back(measure.eval(log, model, opt).value);
      labels.push_back("run " + std::to_string(i + 1));
    }
  }

  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) {
      report.verdict = Verdict::Violated;
      report.witness["reason"] =
          "undefined result on a valid instance (partial function)";
      report.witness["at"] = labels[i];
      return report;
    }
  }
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (*values[i] != *values[0]) {
      report.verdict = Verdict::Violated;
      report.witness["reason"] = "two evaluations differ";
      report.witness["first"] = labels[0] + " -> " + fmt4(*values[0]);
      report.witness["second"] = labels[i] + " -> " + fmt4(*values[i]);
      return report;
    }
  }
  report.verdict = Verdict::SatisfiedOnInstances;
  report.witness["value"] = fmt4(*values[0]);
  report.witness["runs"] = std::to_string(values.size());
  return report;
}

namespace {

/// Shared A2/A3/A4/A5 value comparison. `direction` is what the axiom
/// requires; `Violated` is reported only when the hypotheses were proven.
struct ValuePair {
  std::optional<double> v1, v2;
  bool stochastic = false;
  std::optional<std::vector<double>> batch1, batch2;
};

ValuePair evaluate_pair(const MeasureHandle& measure, const EventLog& log1,
                        const AcceptingPetriNet& m1, const EventLog& log2,
                        const AcceptingPetriNet& m2, const MeasureOptions& opt) {
  ValuePair out;
  if (measure.seeded) {
    out.stochastic = true;
    out.batch1 = seed_batch(measure, log1, m1, opt, BATCH);
    out.batch2 = seed_batch(measure, log2, m2, opt, BATCH);
    if (out.batch1) out.v1 = mean(*out.batch1);
    if (out.batch2) out.v2 = mean(*out.batch2);
  } else {
    out.v1 = measure.eval(log1, m1, opt).value;
    out.v2 = measure.eval(log2, m2, opt).value;
  }
  return out;
}

}  // namespace

AxiomReport check_a2(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& m1, const AcceptingPetriNet& m2,
                     const MeasureOptions& opt) {
  AxiomReport report;
  report.axiom = "A2";
  report.witness["measure"] = measure.name;
  try {
    if (!is_fitting(log, m1, opt.limits)) {
      report.verdict = Verdict::HypothesisNotMet;
      report.witness["reason"] = "log does not fit the first model";
      return report;
    }
    report.hypothesis_evidence.push_back(
        "trace set of the log is contained in L(m1): verified by replay");
    SubsetResult sub = is_subset(language_dfa(m1, opt.limits),
                                 language_dfa(m2, opt.limits));
    if (!sub.holds) {
      report.verdict = Verdict::HypothesisNotMet;
      std::string w;
      for (const auto& a : *sub.witness) w += (w.empty() ? "" : ",") + a;
      report.witness["reason"] = "L(m1) is not a subset of L(m2)";
      report.witness["subset_counterexample"] = "<" + w + ">";
      return report;
    }
    report.hypothesis_evidence.push_back(
        "L(m1) is a subset of L(m2): verified on language automata");
  } catch (const UndecidedError& e) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = e.what();
    return report;
  }

  ValuePair values = evaluate_pair(measure, log, m1, log, m2, opt);
  if (!values.v1 || !values.v2) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = "measure undefined on an instance";
    return report;
  }
  if (values.stochastic) {
    put_batch_witness(report, "m1", *values.batch1);
    put_batch_witness(report, "m2", *values.batch2);
    WelchComparison cmp = welch_greater(*values.batch2, *values.batch1);
    report.witness["welch_t"] = fmt4(cmp.t);
    report.witness["welch_dof"] = fmt4(cmp.dof);
    report.verdict =
        cmp.significant ? Verdict::Violated : Verdict::SatisfiedOnInstances;
    if (cmp.significant)
      report.witness["reason"] =
          "mean prec(L,m1) < mean prec(L,m2) at significance 0.01";
    return report;
  }
  report.witness["prec_m1"] = fmt4(*values.v1);
  report.witness["prec_m2"] = fmt4(*values.v2);
  report.verdict = *values.v1 < *values.v2 ? Verdict::Violated
                                           : Verdict::SatisfiedOnInstances;
  if (report.verdict == Verdict::Violated)
    report.witness["reason"] = "prec(L,m1) < prec(L,m2)";
  return report;
}

AxiomReport check_a3(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& model,
                     const std::set<Activity>& alphabet,
                     const MeasureOptions& opt) {
  AxiomReport report;
  report.axiom = "A3";
  report.witness["measure"] = measure.name;
  AcceptingPetriNet flower = flower_model(alphabet);
  try {
    Dfa model_lang = language_dfa(model, opt.limits);
    if (is_universal(model_lang, alphabet)) {
      report.verdict = Verdict::HypothesisNotMet;
      report.witness["reason"] = "model language is already universal";
      return report;
    }
    SubsetResult sub =
        is_subset(model_lang, language_dfa(flower, opt.limits));
    if (!sub.holds) {
      report.verdict = Verdict::HypothesisNotMet;
      report.witness["reason"] =
          "model uses activities outside the given alphabet";
      return report;
    }
    report.hypothesis_evidence.push_back(
        "L(model) is a strict subset of the universal language: verified");
  } catch (const UndecidedError& e) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = e.what();
    return report;
  }

  ValuePair values = evaluate_pair(measure, log, model, log, flower, opt);
  if (!values.v1 || !values.v2) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = "measure undefined on an instance";
    return report;
  }
  if (values.stochastic) {
    put_batch_witness(report, "model", *values.batch1);
    put_batch_witness(report, "flower", *values.batch2);
    WelchComparison greater = welch_greater(*values.batch1, *values.batch2);
    WelchComparison less = welch_greater(*values.batch2, *values.batch1);
    report.witness["welch_t"] = fmt4(greater.t);
    if (greater.significant)
      report.verdict = Verdict::SatisfiedOnInstances;
    else if (less.significant || *values.v1 == *values.v2)
      report.verdict = Verdict::Violated;
    else
      report.verdict = Verdict::Undecided;
    return report;
  }
  report.witness["prec_model"] = fmt4(*values.v1);
  report.witness["prec_flower"] = fmt4(*values.v2);
  report.verdict = *values.v1 > *values.v2 ? Verdict::SatisfiedOnInstances
                                           : Verdict::Violated;
  if (report.verdict == Verdict::Violated)
    report.witness["reason"] =
        "prec(L,model) <= prec(L,flower) although L(model) is strictly smaller";
  return report;
}

AxiomReport check_a4(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& m1, const AcceptingPetriNet& m2,
                     const MeasureOptions& opt) {
  AxiomReport report;
  report.axiom = "A4";
  report.witness["measure"] = measure.name;
  try {
    if (!same_language(language_dfa(m1, opt.limits),
                       language_dfa(m2, opt.limits))) {
      report.verdict = Verdict::HypothesisNotMet;
      report.witness["reason"] = "models are not language-equivalent";
      return report;
    }
    report.hypothesis_evidence.push_back(
        "L(m1) = L(m2): verified by minimal-DFA comparison");
  } catch (const UndecidedError& e) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = e.what();
    return report;
  }

  ValuePair values = evaluate_pair(measure, log, m1, log, m2, opt);
  if (!values.v1 || !values.v2) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = "measure undefined on an instance";
    return report;
  }
  if (values.stochastic) {
    put_batch_witness(report, "m1", *values.batch1);
    put_batch_witness(report, "m2", *values.batch2);
    WelchComparison cmp = welch_unequal(*values.batch1, *values.batch2);
    report.witness["welch_t"] = fmt4(cmp.t);
    report.verdict =
        cmp.significant ? Verdict::Violated : Verdict::SatisfiedOnInstances;
    return report;
  }
  report.witness["prec_m1"] = fmt4(*values.v1);
  report.witness["prec_m2"] = fmt4(*values.v2);
  report.verdict = *values.v1 == *values.v2 ? Verdict::SatisfiedOnInstances
                                            : Verdict::Violated;
  if (report.verdict == Verdict::Violated)
    report.witness["reason"] = "language-equal models got different values";
  return report;
}

AxiomReport check_a5(const MeasureHandle& measure, const EventLog& l1,
                     const EventLog& l2, const AcceptingPetriNet& model,
                     const MeasureOptions& opt) {
  AxiomReport report;
  report.axiom = "A5";
  report.witness["measure"] = measure.name;
  std::set<Trace> t1 = trace_set(l1), t2 = trace_set(l2);
  if (!std::includes(t2.begin(), t2.end(), t1.begin(), t1.end())) {
    report.verdict = Verdict::HypothesisNotMet;
    report.witness["reason"] = "trace set of l1 is not contained in l2's";
    return report;
  }
  report.hypothesis_evidence.push_back("trace_set(l1) within trace_set(l2)");
  try {
    if (!is_fitting(l2, model, opt.limits)) {
      report.verdict = Verdict::HypothesisNotMet;
      report.witness["reason"] = "l2 does not fit the model";
      return report;
    }
  } catch (const UndecidedError& e) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = e.what();
    return report;
  }
  report.hypothesis_evidence.push_back("l2 fits the model: verified by replay");

  ValuePair values = evaluate_pair(measure, l1, model, l2, model, opt);
  if (!values.v1 || !values.v2) {
    report.verdict = Verdict::Undecided;
    report.witness["reason"] = "measure undefined on an instance";
    return report;
  }
  if (values.stochastic) {
    put_batch_witness(report, "l1", *values.batch1);
    put_batch_witness(report, "l2", *values.batch2);
    WelchComparison cmp = welch_greater(*values.batch1, *values.batch2);
    report.witness["welch_t"] = fmt4(cmp.t);
    report.verdict =
        cmp.significant ? Verdict::Violated : Verdict::SatisfiedOnInstances;
    if (cmp.significant)
      report.witness["reason"] =
          "mean prec(l2,M) < mean prec(l1,M) at significance 0.01";
    return report;
  }
  report.witness["prec_l1"] = fmt4(*values.v1);
  report.witness["prec_l2"] = fmt4(*values.v2);
  report.verdict = *values.v2 < *values.v1 ? Verdict::Violated
                                           : Verdict::SatisfiedOnInstances;
  if (report.verdict == Verdict::Violated)
    report.witness["reason"] = "adding fitting traces lowered precision";
  return report;
}

AcceptingPetriNet flower_model(const std::set<Activity>& alphabet) {
  if (alphabet.empty()) throw Error("flower_model: alphabet must be non-empty");
  AcceptingPetriNet apn;
  apn.net.place_names = {"p"};
  apn.net.place_index["p"] = 0;
  for (const auto& a : alphabet) {
    TransId t = (TransId)apn.net.trans_names.size();
    apn.net.trans_names.push_back("t_" + a);
    apn.net.trans_index["t_" + a] = t;
    apn.net.labels.push_back(a);
    apn.net.pre.push_back({0});
    apn.net.post.push_back({0});
  }
  apn.initial = {1};
  apn.finals = {{1}};
  return apn;
}

// ---------------------------------------------------------------------------
// Matrix over the bundled counterexample instances

namespace {

// Net with duplicate labels and two replay paths that enable different
// transition counts; replay choice changes the simple-ba statistic.
const char* DUPLICATE_LABEL_NET = R"(place p0 init=1
place p1
place p2
place pf
trans a1 label=a
trans a2 label=a
trans b1 label=b
trans b2 label=b
trans c1 label=c
arc p0 a1
arc a1 p1
arc p0 a2
arc a2 p2
arc p1 b1
arc b1 pf
arc p2 b2
arc b2 pf
arc p2 c1
arc c1 pf
final pf=1
)";

const char* SEQUENTIAL_NET = R"(place p0 init=1
place p1
place p2
place p3
trans a label=a
trans b label=b
trans c label=c
arc p0 a
arc a p1
arc p1 b
arc b p2
arc p2 c
arc c p3
final p3=1
)";

struct SuiteEntry {
  std::string measure;
  std::string axiom;
  std::function<AxiomReport()> run;
};

std::vector<SuiteEntry> build_suite() {
  using corpus::generate_fig6_log;
  namespace cp = corpus;
  MeasureOptions base;
  std::vector<SuiteEntry> suite;

  suite.push_back({"simple-ba", "A1", [base] {
    return check_a1(find_measure("simple-ba"),
                    parse_log("1x a,b"), parse_net(DUPLICATE_LABEL_NET), 20, {},
                    base);
  }});
  suite.push_back({"simple-ba", "A4", [base] {
    return check_a4(find_measure("simple-ba"), cp::log("fig5_log"),
                    cp::model("fig5a_flower"), cp::model("fig5b_flower_tau"),
                    base);
  }});
  suite.push_back({"advanced-ba", "A1", [base] {
    return check_a1(find_measure("advanced-ba"), parse_log("1x a,b,c"),
                    parse_net(SEQUENTIAL_NET), 5, {}, base);
  }});
  suite.push_back({"advanced-ba", "A3", [base] {
    return check_a3(find_measure("advanced-ba"), parse_log("1x a,c"),
                    cp::model("fig2_loop_wfnet"), {"a", "b", "c", "d"}, base);
  }});
  suite.push_back({"advanced-ba", "A4", [base] {
    return check_a4(find_measure("advanced-ba"), cp::log("fig5_log"),
                    cp::model("fig5a_flower"), cp::model("fig5b_flower_tau"),
                    base);
  }});
  suite.push_back({"one-align-etc", "A1", [base] {
    return check_a1(find_measure("one-align-etc"),
                    parse_log("1x a,c\n1x a,c,d"), cp::model("fig4_model"), 20,
                    {}, base);
  }});
  suite.push_back({"one-align-etc", "A2", [base] {
    return check_a2(find_measure("one-align-etc"), cp::log("fig5_log"),
                    cp::model("fig5c_constrained"),
                    cp::model("fig5b_flower_tau"), base);
  }});
  suite.push_back({"one-align-etc", "A4", [base] {
    return check_a4(find_measure("one-align-etc"), cp::log("fig5_log"),
                    cp::model("fig5a_flower"), cp::model("fig5b_flower_tau"),
                    base);
  }});
  suite.push_back({"one-align-etc", "A5", [base] {
    return check_a5(find_measure("one-align-etc"), cp::log("fig4_log_l1"),
                    cp::log("fig4_log_l2"), cp::model("fig4_model"), base);
  }});
  suite.push_back({"negative-event", "A1", [base] {
    return check_a1(find_measure("negative-event"), generate_fig6_log(1, 10),
                    cp::model("fig6_m1"), 20, {}, base);
  }});
  suite.push_back({"negative-event", "A2", [base] {
    return check_a2(find_measure("negative-event"), generate_fig6_log(1, 10),
                    cp::model("fig6_m2"), cp::model("fig6_m1"), base);
  }});
  suite.push_back({"pcc", "A2", [base] {
    return check_a2(find_measure("pcc"), cp::log("fig7_log"),
                    cp::model("fig7b_unrolled"), cp::model("fig7a_loop"), base);
  }});
  suite.push_back({"pcc", "A5", [base] {
    MeasureOptions opt = base;
    opt.k = 3;  // the published flower figures use the full alphabet
    return check_a5(find_measure("pcc"), cp::log("fig8_log_l1"),
                    cp::log("fig8_log_l2"), cp::model("fig8_flower"), opt);
  }});
  return suite;
}

}  // namespace

char AxiomMatrix::cell(const std::string& measure,
                       const std::string& axiom) const {
  auto it = cells.find({measure, axiom});
  return it == cells.end() ? '.' : it->second;
}

std::string AxiomMatrix::to_text() const {
  const std::vector<std::string> axioms = {"A1", "A2", "A3", "A4", "A5"};
  std::size_t width = 14;
  for (const auto& m : measures) width = std::max(width, m.size() + 2);
  std::string out(width, ' ');
  for (const auto& a : axioms) out += "  " + a;
  out += '\n';
  for (const auto& m : measures) {
    std::string row = m;
    row.resize(width, ' ');
    for (const auto& a : axioms) {
      char c = cell(m, a);
      row += "   ";
      row += c == 'v' ? 'o' : c;  // render satisfied as 'o', violated as 'x'
    }
    out += row + '\n';
  }
  out += "x = violated on the bundled instances, o = satisfied on them, "
         ". = unknown, ? = undecided\n";
  return out;
}

AxiomMatrix axiom_matrix() {
  AxiomMatrix matrix;
  matrix.measures = {"simple-ba", "advanced-ba", "one-align-etc",
                     "negative-event", "pcc"};
  for (const auto& entry : build_suite()) {
    AxiomReport report = entry.run();
    auto key = std::make_pair(entry.measure, entry.axiom);
    char verdict;
    switch (report.verdict) {
      case Verdict::Violated: verdict = 'x'; break;
      case Verdict::SatisfiedOnInstances: verdict = 'v'; break;
      default: verdict = '?'; break;
    }
    auto it = matrix.cells.find(key);
    // A single violated instance settles the cell.
    if (it == matrix.cells.end() || verdict == 'x' ||
        (it->second == '?' && verdict == 'v'))
      matrix.cells[key] = verdict;
    matrix.reports.emplace_back(entry.measure + "/" + entry.axiom,
                                std::move(report));
  }
  return matrix;
}

}  // namespace precima
