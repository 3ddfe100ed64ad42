#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string_view>

#include "precima/types.hpp"

namespace precima {

/// Finite multiset of traces. Multiplicities are always >= 1; semantics are
/// multiset semantics throughout, file order is display-only.
struct EventLog {
  std::map<Trace, std::uint64_t> traces;

  std::uint64_t total_traces() const;  // sum of multiplicities
  std::set<Activity> alphabet() const;
  bool empty() const { return traces.empty(); }
};

/// Support of the multiset: distinct traces, multiplicities dropped.
std::set<Trace> trace_set(const EventLog& log);

/// Line format: `<count>x <act>,<act>,...` or `<count>x` for the empty trace.
/// Lines starting with `#` and blank lines are skipped; equal traces merge.
EventLog parse_log(std::string_view text);

/// Emits counts in descending multiplicity, ties broken lexicographically.
std::string serialize_log(const EventLog& log);

/// Drop every event not in `keep` from every trace (merging multiplicities).
EventLog project_log(const EventLog& log, const std::set<Activity>& keep);

}  // namespace precima
