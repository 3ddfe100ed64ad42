#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "precima/event_log.hpp"
#include "precima/types.hpp"

namespace precima {

/// Nondeterministic automaton with epsilon edges (symbol index -1).
struct Nfa {
  std::vector<Activity> alphabet;  // sorted, unique
  int num_states = 0;
  std::vector<std::tuple<int, int, int>> edges;  // (from, symbol or -1, to)
  std::vector<int> initials;
  std::vector<int> accepting;
};

/// Deterministic automaton with a partial transition function. There is no
/// explicit dead state; a missing transition means the word is rejected.
struct Dfa {
  std::vector<Activity> alphabet;       // sorted, unique
  int num_states = 0;
  std::vector<std::vector<int>> next;   // [state][symbol] -> state or -1
  int initial = 0;
  std::vector<bool> accepting;

  int symbol_index(const Activity& a) const;
  bool accepts(const Trace& trace) const;
  int out_degree(int state) const;
};

/// Subset construction with epsilon closure.
Dfa determinize(const Nfa& nfa);

/// Unique minimal DFA for the same language, trimmed to useful states and
/// renumbered in BFS order so that equal languages give equal structures.
Dfa minimize(const Dfa& dfa);

/// Rewrites a DFA over a larger alphabet (no new transitions).
Dfa widen_alphabet(const Dfa& dfa, const std::set<Activity>& alphabet);

/// L(a) == L(b), decided structurally on minimized canonical forms.
bool same_language(const Dfa& a, const Dfa& b);

struct ProductDfa {
  Dfa dfa;
  std::vector<std::pair<int, int>> origin;  // product state -> (a-state, b-state)
};

/// Conjunction automaton: accepts exactly L(a) n L(b). Alphabets are unioned;
/// a symbol missing on either side has no transition in the product.
ProductDfa product(const Dfa& a, const Dfa& b);

struct SubsetResult {
  bool holds = false;
  std::optional<Trace> witness;  // shortest string in L(a) \ L(b) when !holds

  explicit operator bool() const { return holds; }
};

SubsetResult is_subset(const Dfa& a, const Dfa& b);

/// Accepts every string over `alphabet`.
bool is_universal(const Dfa& dfa, const std::set<Activity>& alphabet);

/// Language projection: dropped symbols become epsilon, result is minimal.
Dfa project_dfa(const Dfa& dfa, const std::set<Activity>& keep);

/// Minimal DFA accepting exactly the given finite trace set.
Dfa trace_set_dfa(const std::set<Trace>& traces, const std::set<Activity>& alphabet);

/// Tree automaton with one node per distinct log prefix. `visits` counts the
/// traces passing through the prefix, `ends` the traces stopping exactly there.
struct PrefixAutomaton {
  struct Node {
    std::map<Activity, int> children;
    std::uint64_t visits = 0;
    std::uint64_t ends = 0;
  };
  std::vector<Node> nodes;  // node 0 is the root (empty prefix)

  std::uint64_t event_weight(int node) const {
    return nodes[node].visits - nodes[node].ends;
  }
};

PrefixAutomaton build_prefix_automaton(const EventLog& log);

std::string to_dot(const Dfa& dfa, const std::string& name = "dfa");

}  // namespace precima
