#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "precima/event_log.hpp"
#include "precima/petri.hpp"

namespace precima {
namespace corpus {

struct CorpusEntry {
  std::string name;
  enum class Kind { Model, Log } kind;
  std::string payload;     // net DSL or log text
  std::string provenance;  // source tag inside the bundled counterexample set
  std::map<std::string, double> expected;  // published measure -> value
};

std::vector<std::string> list_entries();
const CorpusEntry& get(const std::string& name);
AcceptingPetriNet model(const std::string& name);
EventLog log(const std::string& name);

/// Traces sampled from the restricted long-term-dependency net by seeded
/// random firing (uniform over enabled transitions); every trace fits both
/// fig6 variants.
EventLog generate_fig6_log(std::uint64_t seed, std::size_t n_traces);

}  // namespace corpus
}  // namespace precima
