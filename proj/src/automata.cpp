#include "precima/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace precima {

int Dfa::symbol_index(const Activity& a) const {
  auto it = std::lower_bound(alphabet.begin(), alphabet.end(), a);
  if (it == alphabet.end() || *it != a) return -1;
  return (int)(it - alphabet.begin());
}

bool Dfa::accepts(const Trace& trace) const {
  int state = initial;
  for (const auto& a : trace) {
    int sym = symbol_index(a);
    if (sym < 0) return false;
    state = next[state][sym];
    if (state < 0) return false;
  }
  return accepting[state];
}

int Dfa::out_degree(int state) const {
  int n = 0;
  for (int target : next[state])
    if (target >= 0) ++n;
  return n;
}

namespace {

Dfa empty_language_dfa(const std::vector<Activity>& alphabet) {
  Dfa dfa;
  dfa.alphabet = alphabet;
  dfa.num_states = 1;
  dfa.next.assign(1, std::vector<int>(alphabet.size(), -1));
  dfa.initial = 0;
  dfa.accepting = {false};
  return dfa;
}

/// Renumber reachable states in BFS order (symbols in alphabet order) so that
/// structurally equal automata are bitwise equal.
Dfa canonicalize(const Dfa& dfa) {
  std::vector<int> order(dfa.num_states, -1);
  std::deque<int> queue{dfa.initial};
  order[dfa.initial] = 0;
  int count = 1;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int target : dfa.next[s]) {
      if (target >= 0 && order[target] < 0) {
        order[target] = count++;
        queue.push_back(target);
      }
    }
  }
  Dfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = count;
  out.next.assign(count, std::vector<int>(dfa.alphabet.size(), -1));
  out.accepting.assign(count, false);
  out.initial = 0;
  for (int s = 0; s < dfa.num_states; ++s) {
    if (order[s] < 0) continue;
    out.accepting[order[s]] = dfa.accepting[s];
    for (std::size_t sym = 0; sym < dfa.alphabet.size(); ++sym) {
      int target = dfa.next[s][sym];
      out.next[order[s]][sym] = target >= 0 && order[target] >= 0
                                    ? order[target]
                                    : -1;
    }
  }
  return out;
}

}  // namespace

Dfa determinize(const Nfa& nfa) {
  // Epsilon closure per state set, subset construction over sorted vectors.
  std::vector<std::vector<std::pair<int, int>>> eps(nfa.num_states);
  std::vector<std::vector<std::pair<int, int>>> sym_edges(nfa.num_states);
  for (const auto& [from, sym, to] : nfa.edges) {
    if (sym < 0)
      eps[from].emplace_back(0, to);
    else
      sym_edges[from].emplace_back(sym, to);
  }
  auto closure = [&](std::vector<int> states) {
    std::deque<int> queue(states.begin(), states.end());
    std::set<int> seen(states.begin(), states.end());
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (const auto& [ignored, to] : eps[s])
        if (seen.insert(to).second) queue.push_back(to);
    }
    return std::vector<int>(seen.begin(), seen.end());
  };

  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, int> subset_index;
  auto intern = [&](std::vector<int> subset) {
    auto [it, inserted] = subset_index.try_emplace(subset, (int)subsets.size());
    if (inserted) subsets.push_back(std::move(subset));
    return it->second;
  };

  Dfa dfa;
  dfa.alphabet = nfa.alphabet;
  const int nsym = (int)nfa.alphabet.size();
  int start = intern(closure(nfa.initials));
  dfa.initial = start;
  std::deque<int> queue{start};
  std::vector<std::vector<int>> next_rows;
  std::set<int> accepting_set(nfa.accepting.begin(), nfa.accepting.end());
  std::vector<bool> accepting;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    while ((int)next_rows.size() <= id) {
      next_rows.emplace_back(nsym, -1);
      accepting.push_back(false);
    }
    const auto subset = subsets[id];
    accepting[id] = std::any_of(subset.begin(), subset.end(), [&](int s) {
      return accepting_set.count(s) > 0;
    });
    for (int sym = 0; sym < nsym; ++sym) {
      std::set<int> targets;
      for (int s : subset)
        for (const auto& [edge_sym, to] : sym_edges[s])
          if (edge_sym == sym) targets.insert(to);
      if (targets.empty()) continue;
      int before = (int)subsets.size();
      int target_id =
          intern(closure(std::vector<int>(targets.begin(), targets.end())));
      next_rows[id][sym] = target_id;
      if (target_id == before) queue.push_back(target_id);
    }
  }
  dfa.num_states = (int)next_rows.size();
  dfa.next = std::move(next_rows);
  dfa.accepting = std::move(accepting);
  return dfa;
}

Dfa minimize(const Dfa& dfa) {
  const int nsym = (int)dfa.alphabet.size();
  // Trim: keep states reachable from the initial and co-reachable to an
  // accepting state. Everything else behaves like the implicit dead state.
  std::vector<bool> reachable(dfa.num_states, false);
  std::deque<int> queue{dfa.initial};
  reachable[dfa.initial] = true;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int target : dfa.next[s])
      if (target >= 0 && !reachable[target]) {
        reachable[target] = true;
        queue.push_back(target);
      }
  }
  std::vector<std::vector<int>> reverse(dfa.num_states);
  for (int s = 0; s < dfa.num_states; ++s)
    for (int target : dfa.next[s])
      if (target >= 0) reverse[target].push_back(s);
  std::vector<bool> useful(dfa.num_states, false);
  for (int s = 0; s < dfa.num_states; ++s)
    if (dfa.accepting[s] && reachable[s] && !useful[s]) {
      useful[s] = true;
      queue.push_back(s);
    }
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int source : reverse[s])
      if (!useful[source]) {
        useful[source] = true;
        queue.push_back(source);
      }
  }
  for (int s = 0; s < dfa.num_states; ++s) useful[s] = useful[s] && reachable[s];
  if (!useful[dfa.initial]) return empty_language_dfa(dfa.alphabet);

  std::vector<int> ids;
  std::vector<int> id_of(dfa.num_states, -1);
  for (int s = 0; s < dfa.num_states; ++s)
    if (useful[s]) {
      id_of[s] = (int)ids.size();
      ids.push_back(s);
    }
  const int n = (int)ids.size();

  // Moore partition refinement over the trimmed partial DFA; a missing
  // transition is its own block (-1).
  std::vector<int> block(n);
  for (int i = 0; i < n; ++i) block[i] = dfa.accepting[ids[i]] ? 1 : 0;
  int num_blocks = 2;
  while (true) {
    std::map<std::vector<int>, int> signature_block;
    std::vector<int> new_block(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> signature{block[i]};
      for (int sym = 0; sym < nsym; ++sym) {
        int target = dfa.next[ids[i]][sym];
        signature.push_back(target >= 0 && id_of[target] >= 0
                                ? block[id_of[target]]
                                : -1);
      }
      auto [it, inserted] =
          signature_block.try_emplace(signature, (int)signature_block.size());
      new_block[i] = it->second;
    }
    int new_count = (int)signature_block.size();
    block = std::move(new_block);
    if (new_count == num_blocks) break;
    num_blocks = new_count;
  }

  Dfa out;
  out.alphabet = dfa.alphabet;
  out.num_states = num_blocks;
  out.next.assign(num_blocks, std::vector<int>(nsym, -1));
  out.accepting.assign(num_blocks, false);
  out.initial = block[id_of[dfa.initial]];
  for (int i = 0; i < n; ++i) {
    out.accepting[block[i]] = dfa.accepting[ids[i]];
    for (int sym = 0; sym < nsym; ++sym) {
      int target = dfa.next[ids[i]][sym];
      out.next[block[i]][sym] =
          target >= 0 && id_of[target] >= 0 ? block[id_of[target]] : -1;
    }
  }
  return canonicalize(out);
}

Dfa widen_alphabet(const Dfa& dfa, const std::set<Activity>& alphabet) {
  std::set<Activity> merged(alphabet);
  merged.insert(dfa.alphabet.begin(), dfa.alphabet.end());
  Dfa out;
  out.alphabet.assign(merged.begin(), merged.end());
  out.num_states = dfa.num_states;
  out.initial = dfa.initial;
  out.accepting = dfa.accepting;
  out.next.assign(dfa.num_states, std::vector<int>(out.alphabet.size(), -1));
  for (std::size_t sym = 0; sym < dfa.alphabet.size(); ++sym) {
    int merged_sym = out.symbol_index(dfa.alphabet[sym]);
    for (int s = 0; s < dfa.num_states; ++s)
      out.next[s][merged_sym] = dfa.next[s][sym];
  }
  return out;
}

bool same_language(const Dfa& a, const Dfa& b) {
  std::set<Activity> merged(a.alphabet.begin(), a.alphabet.end());
  merged.insert(b.alphabet.begin(), b.alphabet.end());
  Dfa ca = minimize(widen_alphabet(a, merged));
  Dfa cb = minimize(widen_alphabet(b, merged));
  return ca.num_states == cb.num_states && ca.accepting == cb.accepting &&
         ca.next == cb.next;
}

ProductDfa product(const Dfa& a, const Dfa& b) {
  std::set<Activity> merged(a.alphabet.begin(), a.alphabet.end());
  merged.insert(b.alphabet.begin(), b.alphabet.end());
  Dfa wa = widen_alphabet(a, merged);
  Dfa wb = widen_alphabet(b, merged);
  const int nsym = (int)wa.alphabet.size();

  ProductDfa out;
  out.dfa.alphabet = wa.alphabet;
  std::map<std::pair<int, int>, int> index;
  auto intern = [&](int sa, int sb) {
    auto [it, inserted] =
        index.try_emplace(std::make_pair(sa, sb), (int)out.origin.size());
    if (inserted) {
      out.origin.emplace_back(sa, sb);
      out.dfa.next.emplace_back(nsym, -1);
      out.dfa.accepting.push_back(wa.accepting[sa] && wb.accepting[sb]);
    }
    return it->second;
  };
  int start = intern(wa.initial, wb.initial);
  out.dfa.initial = start;
  std::deque<int> queue{start};
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    auto [sa, sb] = out.origin[id];
    for (int sym = 0; sym < nsym; ++sym) {
      int ta = wa.next[sa][sym];
      int tb = wb.next[sb][sym];
      if (ta < 0 || tb < 0) continue;
      int before = (int)out.origin.size();
      int target = intern(ta, tb);
      out.dfa.next[id][sym] = target;
      if (target == before) queue.push_back(target);
    }
  }
  out.dfa.num_states = (int)out.origin.size();
  return out;
}

SubsetResult is_subset(const Dfa& a, const Dfa& b) {
  std::set<Activity> merged(a.alphabet.begin(), a.alphabet.end());
  merged.insert(b.alphabet.begin(), b.alphabet.end());
  Dfa wa = widen_alphabet(a, merged);
  Dfa wb = widen_alphabet(b, merged);
  const int nsym = (int)wa.alphabet.size();
  const int DEAD = -1;

  // BFS over (a-state, b-state-or-dead); the first a-accepting, b-rejecting
  // pair gives a shortest witness in L(a) \ L(b).
  std::map<std::pair<int, int>, std::pair<std::pair<int, int>, int>> parent;
  std::deque<std::pair<int, int>> queue;
  auto start = std::make_pair(wa.initial, wb.initial);
  parent[start] = {start, -1};
  queue.push_back(start);
  while (!queue.empty()) {
    auto node = queue.front();
    queue.pop_front();
    auto [sa, sb] = node;
    if (wa.accepting[sa] && (sb == DEAD || !wb.accepting[sb])) {
      Trace witness;
      auto cursor = node;
      while (parent[cursor].second >= 0) {
        witness.push_back(wa.alphabet[parent[cursor].second]);
        cursor = parent[cursor].first;
      }
      std::reverse(witness.begin(), witness.end());
      return {false, witness};
    }
    for (int sym = 0; sym < nsym; ++sym) {
      int ta = wa.next[sa][sym];
      if (ta < 0) continue;  // word leaves L(a)
      int tb = sb == DEAD ? DEAD : wb.next[sb][sym];
      auto target = std::make_pair(ta, tb);
      if (parent.try_emplace(target, std::make_pair(node, sym)).second)
        queue.push_back(target);
    }
  }
  return {true, std::nullopt};
}

bool is_universal(const Dfa& dfa, const std::set<Activity>& alphabet) {
  Dfa w = widen_alphabet(dfa, alphabet);
  std::vector<Activity> symbols(alphabet.begin(), alphabet.end());
  const int DEAD = -1;
  std::set<int> seen{w.initial};
  std::deque<int> queue{w.initial};
  if (!w.accepting[w.initial]) return false;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (const auto& a : symbols) {
      int target = w.next[s][w.symbol_index(a)];
      if (target == DEAD || !w.accepting[target]) return false;
      if (seen.insert(target).second) queue.push_back(target);
    }
  }
  return true;
}

Dfa project_dfa(const Dfa& dfa, const std::set<Activity>& keep) {
  Nfa nfa;
  nfa.alphabet.assign(keep.begin(), keep.end());
  nfa.num_states = dfa.num_states;
  nfa.initials = {dfa.initial};
  for (int s = 0; s < dfa.num_states; ++s)
    if (dfa.accepting[s]) nfa.accepting.push_back(s);
  std::map<Activity, int> symbol;
  for (int i = 0; i < (int)nfa.alphabet.size(); ++i) symbol[nfa.alphabet[i]] = i;
  for (int s = 0; s < dfa.num_states; ++s) {
    for (std::size_t sym = 0; sym < dfa.alphabet.size(); ++sym) {
      int target = dfa.next[s][sym];
      if (target < 0) continue;
      auto it = symbol.find(dfa.alphabet[sym]);
      nfa.edges.emplace_back(s, it == symbol.end() ? -1 : it->second, target);
    }
  }
  return minimize(determinize(nfa));
}

Dfa trace_set_dfa(const std::set<Trace>& traces,
                  const std::set<Activity>& alphabet) {
  std::set<Activity> merged(alphabet);
  for (const auto& trace : traces) merged.insert(trace.begin(), trace.end());
  Dfa trie;
  trie.alphabet.assign(merged.begin(), merged.end());
  const int nsym = (int)trie.alphabet.size();
  trie.next.emplace_back(nsym, -1);
  trie.accepting.push_back(false);
  for (const auto& trace : traces) {
    int node = 0;
    for (const auto& a : trace) {
      int sym = trie.symbol_index(a);
      if (trie.next[node][sym] < 0) {
        trie.next[node][sym] = (int)trie.next.size();
        trie.next.emplace_back(nsym, -1);
        trie.accepting.push_back(false);
      }
      node = trie.next[node][sym];
    }
    trie.accepting[node] = true;
  }
  trie.num_states = (int)trie.next.size();
  trie.initial = 0;
  return minimize(trie);
}

PrefixAutomaton build_prefix_automaton(const EventLog& log) {
  PrefixAutomaton out;
  out.nodes.emplace_back();
  for (const auto& [trace, count] : log.traces) {
    int node = 0;
    out.nodes[0].visits += count;
    for (const auto& a : trace) {
      auto it = out.nodes[node].children.find(a);
      int child;
      if (it == out.nodes[node].children.end()) {
        child = (int)out.nodes.size();
        out.nodes[node].children[a] = child;
        out.nodes.emplace_back();
      } else {
        child = it->second;
      }
      node = child;
      out.nodes[node].visits += count;
    }
    out.nodes[node].ends += count;
  }
  return out;
}

std::string to_dot(const Dfa& dfa, const std::string& name) {
  std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
  for (int s = 0; s < dfa.num_states; ++s)
    out += "  q" + std::to_string(s) +
           (dfa.accepting[s] ? " [peripheries=2];\n" : ";\n");
  for (int s = 0; s < dfa.num_states; ++s)
    for (std::size_t sym = 0; sym < dfa.alphabet.size(); ++sym)
      if (dfa.next[s][sym] >= 0)
        out += "  q" + std::to_string(s) + " -> q" +
               std::to_string(dfa.next[s][sym]) + " [label=\"" +
               dfa.alphabet[sym] + "\"];\n";
  return out + "}\n";
}

}  // namespace precima
