#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "precima/alignment.hpp"
#include "precima/event_log.hpp"
#include "precima/petri.hpp"
#include "precima/types.hpp"

namespace precima {

struct MeasureOptions {
  std::uint32_t k = 2;           // pcc: projection subset size
  std::uint32_t max_window = 5;  // negative events: largest context window
  std::uint64_t seed = 0;
  enum class Weighting { Visits, Events };
  Weighting weighting = Weighting::Visits;  // one-align state weights
  Tiebreak tiebreak;                        // replay / alignment choice
  enum class NegativeEventMode { Deterministic, Sampled };
  NegativeEventMode negative_mode = NegativeEventMode::Deterministic;
  std::uint64_t trace_cap = 100000;  // greco: finite-language enumeration cap
  std::size_t align_cap = 10000;     // all-align enumeration cap
  std::size_t subset_cap = 5000;     // pcc: max projection subsets
  ExploreLimits limits;
};

/// Result of one measure evaluation. `value` is empty for the explicit
/// "undefined" state (never NaN). Diagnostics are enough to recompute the
/// value by hand and serialize deterministically.
struct PrecisionReport {
  std::string measure;
  std::optional<double> value;
  std::map<std::string, std::string> diagnostics;
  std::map<std::string, std::string> options;  // the options that mattered

  bool defined() const { return value.has_value(); }
  std::string to_text() const;    // key=value lines
  std::string to_record() const;  // one JSON document
};

/// Pairs of activities that sometimes, but not always, follow (precede) each
/// other.
struct SometimesRelations {
  std::set<std::pair<Activity, Activity>> follows;
  std::set<std::pair<Activity, Activity>> precedes;
};

SometimesRelations log_sometimes_relations(const EventLog& log);
SometimesRelations model_sometimes_relations(const AcceptingPetriNet& apn,
                                             const ExploreLimits& limits = {});

/// Distinct fitting log traces divided by the number of paths through the
/// model; 0 as soon as the model has a loop.
PrecisionReport greco_precision(const EventLog& log, const AcceptingPetriNet& apn,
                                const MeasureOptions& opt = {});

/// Mean enabled-visible-transition count during replay, normalized by the
/// visible transition count.
PrecisionReport simple_ba(const EventLog& log, const AcceptingPetriNet& apn,
                          const MeasureOptions& opt = {});

PrecisionReport advanced_ba(const EventLog& log, const AcceptingPetriNet& apn,
                            const MeasureOptions& opt = {});

/// Escaping-edges precision on the activity prefix automaton of the log.
PrecisionReport etc_precision(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt = {});

/// Escaping edges on the automaton of one optimal firing sequence per trace
/// (tau firings generate states of their own).
PrecisionReport one_align_etc(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt = {});

/// Same statistic averaged over every optimal alignment per trace.
PrecisionReport all_align_etc(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt = {});

/// Induced-negative-event precision TP/(TP+FP) with window-length confidence
/// weights; `Sampled` mode subsamples context matches per seed.
PrecisionReport negative_event_precision(const EventLog& log,
                                         const AcceptingPetriNet& apn,
                                         const MeasureOptions& opt = {});

/// Projected conformance precision over all activity subsets of size k.
PrecisionReport pcc_precision(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt = {});

}  // namespace precima
