#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "precima/automata.hpp"
#include "precima/event_log.hpp"
#include "precima/types.hpp"

namespace precima {

using PlaceId = std::uint32_t;
using TransId = std::uint32_t;

/// Token counts indexed by place. Dense and always net-sized, so markings are
/// canonical by construction and compare deterministically.
using Marking = std::vector<std::uint32_t>;

struct LabeledPetriNet {
  std::vector<std::string> place_names;
  std::vector<std::string> trans_names;
  std::vector<std::string> labels;  // "" means tau
  std::vector<std::vector<PlaceId>> pre;   // per transition, sorted place ids
  std::vector<std::vector<PlaceId>> post;

  std::map<std::string, PlaceId> place_index;
  std::map<std::string, TransId> trans_index;

  bool is_tau(TransId t) const { return labels[t].empty(); }
  std::size_t num_places() const { return place_names.size(); }
  std::size_t num_transitions() const { return trans_names.size(); }
  std::set<Activity> alphabet() const;
  std::size_t visible_transition_count() const;
};

struct AcceptingPetriNet {
  LabeledPetriNet net;
  Marking initial;
  std::vector<Marking> finals;  // sorted, unique, non-empty

  bool is_final(const Marking& m) const;
};

/// Materialized step relation over the reachable markings.
struct StateGraph {
  std::vector<Marking> states;  // BFS order from the initial marking
  std::map<Marking, int> index;
  std::vector<std::tuple<int, TransId, int>> edges;  // (from, transition, to)
  std::vector<std::vector<int>> out;                 // per state, edge indices
  int initial = 0;
  std::vector<int> accepting;  // state indices whose marking is final
  bool bounded = true;
  std::optional<PlaceId> overflow_place;  // witness when !bounded
};

struct ExploreLimits {
  std::uint32_t bound = 8;         // per-place token cap
  std::size_t state_cap = 100000;  // max explored markings
};

std::vector<TransId> enabled(const AcceptingPetriNet& apn, const Marking& m);
Marking fire(const AcceptingPetriNet& apn, const Marking& m, TransId t);

/// Breadth-first closure of the reachable markings. Markings exceeding the
/// per-place bound are recorded as an overflow witness and not expanded;
/// exceeding `state_cap` throws ExplorationOverflowError.
StateGraph explore(const AcceptingPetriNet& apn, const ExploreLimits& limits = {});

/// Minimal DFA for L(apn). Throws UnboundedNetError when the bound is hit.
Dfa language_dfa(const AcceptingPetriNet& apn, const ExploreLimits& limits = {});

/// Membership in L(apn). On nets that overflow the bound the search is still
/// sound for "true"; an exhausted budget throws UndecidedError, never a
/// silent false.
bool is_trace(const AcceptingPetriNet& apn, const Trace& trace,
              const ExploreLimits& limits = {});

/// Every distinct log trace is a trace of the net.
bool is_fitting(const EventLog& log, const AcceptingPetriNet& apn,
                const ExploreLimits& limits = {});

/// Net DSL, one declaration per line:
///   place <id> [init=<n>]
///   trans <id> [label=<activity>]
///   arc <from> <to>
///   final <place>=<n>[,<place>=<n>...]
/// `#` starts a comment. Every parse error carries its line number.
AcceptingPetriNet parse_net(std::string_view text);

std::string serialize_net(const AcceptingPetriNet& apn);

/// Empty string when the net has WF shape (single source place, single sink
/// place, every node on a path between them); otherwise the reason.
std::string wf_shape_issue(const AcceptingPetriNet& apn);

std::string marking_to_string(const AcceptingPetriNet& apn, const Marking& m);
std::string to_dot(const StateGraph& graph, const AcceptingPetriNet& apn);

}  // namespace precima
