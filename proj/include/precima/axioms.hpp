#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "precima/measures.hpp"

namespace precima {

struct MeasureHandle {
  std::string name;
  std::function<PrecisionReport(const EventLog&, const AcceptingPetriNet&,
                                const MeasureOptions&)>
      eval;
  // True when the measure exposes an arbitrary internal choice through a
  // seed (alignment/replay tie-breaking, match sampling).
  bool seeded = false;
};

const std::vector<MeasureHandle>& measure_registry();
const MeasureHandle& find_measure(const std::string& name);

enum class Verdict { SatisfiedOnInstances, Violated, HypothesisNotMet, Undecided };
std::string verdict_name(Verdict v);

/// Verdict plus everything needed to replay it: instances, seeds, values and
/// the proven side conditions. A `Violated` verdict always carries a complete
/// witness.
struct AxiomReport {
  std::string axiom;
  Verdict verdict = Verdict::Undecided;
  std::map<std::string, std::string> witness;
  std::vector<std::string> hypothesis_evidence;

  std::string to_text() const;
  std::string to_record() const;
};

/// A1: determinism. Repeated evaluation (over seeds when the measure has
/// them); an undefined result on valid input also violates A1.
AxiomReport check_a1(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& model, int runs = 5,
                     const std::vector<std::uint64_t>& seeds = {},
                     const MeasureOptions& opt = {});

/// A2: language inclusion is rewarded. Requires the proven side conditions
/// trace_set(log) in L(m1) and L(m1) in L(m2).
AxiomReport check_a2(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& m1, const AcceptingPetriNet& m2,
                     const MeasureOptions& opt = {});

/// A3: any strict sublanguage of the universal language beats the flower.
AxiomReport check_a3(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& model,
                     const std::set<Activity>& alphabet,
                     const MeasureOptions& opt = {});

/// A4: language-equal models measure equal.
AxiomReport check_a4(const MeasureHandle& measure, const EventLog& log,
                     const AcceptingPetriNet& m1, const AcceptingPetriNet& m2,
                     const MeasureOptions& opt = {});

/// A5: growing a fitting log never lowers precision.
AxiomReport check_a5(const MeasureHandle& measure, const EventLog& l1,
                     const EventLog& l2, const AcceptingPetriNet& model,
                     const MeasureOptions& opt = {});

/// Single marked place with one self-loop transition per activity; the place
/// is initial and final, so the language is universal over the alphabet.
AcceptingPetriNet flower_model(const std::set<Activity>& alphabet);

/// Welch's t statistic for unequal variances; one- or two-tailed comparison
/// against the 0.01 critical value.
struct WelchComparison {
  double t = 0.0;
  double dof = 0.0;
  bool significant = false;  // mean(xs) > mean(ys) (one-tailed) or != (two-tailed)
};
WelchComparison welch_greater(const std::vector<double>& xs,
                              const std::vector<double>& ys);
WelchComparison welch_unequal(const std::vector<double>& xs,
                              const std::vector<double>& ys);

/// One matrix cell per (measure, axiom): violated / satisfied on the bundled
/// instances / unknown when no counterexample instance exists.
struct AxiomMatrix {
  std::vector<std::string> measures;                    // row order
  std::map<std::pair<std::string, std::string>, char> cells;  // 'x', 'v', '?'
  std::vector<std::pair<std::string, AxiomReport>> reports;   // cell key -> report

  char cell(const std::string& measure, const std::string& axiom) const;
  std::string to_text() const;
};

AxiomMatrix axiom_matrix();

}  // namespace precima
