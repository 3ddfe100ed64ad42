#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "precima/petri.hpp"
#include "precima/types.hpp"

namespace precima {

enum class MoveKind { Synchronous, LogOnly, ModelOnly };

struct Move {
  MoveKind kind;
  std::optional<Activity> activity;     // synchronous and log moves
  std::optional<TransId> transition;    // synchronous and model moves

  bool operator==(const Move&) const = default;
};

/// Unit-cost scheme by default; synchronous and tau model moves are free.
struct AlignmentCosts {
  std::int64_t log_move = 1;
  std::int64_t visible_model_move = 1;
};

struct Tiebreak {
  enum class Mode { Lexicographic, SeededRandom };
  Mode mode = Mode::Lexicographic;
  std::uint64_t seed = 0;

  static Tiebreak lexicographic() { return {}; }
  static Tiebreak seeded_random(std::uint64_t seed) {
    return {Mode::SeededRandom, seed};
  }
};

struct Alignment {
  std::vector<Move> moves;
  std::int64_t cost = 0;
  std::vector<TransId> firing_sequence;  // model projection, tau included
  Marking final_marking;

  bool operator==(const Alignment&) const = default;
};

/// Minimum-cost alignment found by search over the synchronous product of the
/// trace and the reachability graph. Alignments are simple paths: no
/// (marking, position) pair repeats, which cuts zero-cost tau cycles.
/// Lexicographic tie-breaking is deterministic; seeded-random picks an
/// arbitrary optimal alignment reproducibly per seed.
Alignment optimal_alignment(const AcceptingPetriNet& apn, const Trace& trace,
                            const AlignmentCosts& costs = {},
                            const Tiebreak& tiebreak = {},
                            const ExploreLimits& limits = {});

/// Every distinct minimum-cost alignment, in lexicographic order. `cap`
/// bounds both the result count and the search effort; exceeding it throws
/// EnumerationOverflowError.
std::vector<Alignment> all_optimal_alignments(const AcceptingPetriNet& apn,
                                              const Trace& trace,
                                              const AlignmentCosts& costs = {},
                                              std::size_t cap = 10000,
                                              const ExploreLimits& limits = {});

/// One optimal alignment per distinct trace.
std::map<Trace, Alignment> align_log(const AcceptingPetriNet& apn,
                                     const EventLog& log,
                                     const AlignmentCosts& costs = {},
                                     const Tiebreak& tiebreak = {},
                                     const ExploreLimits& limits = {});

}  // namespace precima
