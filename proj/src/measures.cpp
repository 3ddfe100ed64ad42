#include "precima/measures.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>

#include "json.hpp"

namespace precima {

namespace {

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string trace_to_string(const Trace& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += t[i];
  }
  return out + ">";
}

std::string tiebreak_text(const Tiebreak& tb) {
  return tb.mode == Tiebreak::Mode::Lexicographic
             ? "lexicographic"
             : "seeded-random:" + std::to_string(tb.seed);
}

/// Marking-set semantics of a log prefix: every marking reachable by firing
/// the prefix labels, closed under tau firings.
struct LangContext {
  const AcceptingPetriNet& apn;
  StateGraph sg;

  LangContext(const AcceptingPetriNet& apn_, const ExploreLimits& limits)
      : apn(apn_), sg(explore(apn_, limits)) {}

  std::set<int> closure(std::set<int> states) const {
    std::deque<int> queue(states.begin(), states.end());
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int e : sg.out[s]) {
        const auto& [from, t, to] = sg.edges[e];
        if (apn.net.is_tau(t) && states.insert(to).second) queue.push_back(to);
      }
    }
    return states;
  }

  std::set<int> initial_set() const { return closure({sg.initial}); }

  std::set<int> step(const std::set<int>& states, const Activity& a) const {
    std::set<int> out;
    for (int s : states)
      for (int e : sg.out[s]) {
        const auto& [from, t, to] = sg.edges[e];
        if (!apn.net.is_tau(t) && apn.net.labels[t] == a) out.insert(to);
      }
    return closure(std::move(out));
  }

  std::set<Activity> enabled_activities(const std::set<int>& states) const {
    std::set<Activity> out;
    for (int s : states)
      for (int e : sg.out[s]) {
        const auto& [from, t, to] = sg.edges[e];
        if (!apn.net.is_tau(t)) out.insert(apn.net.labels[t]);
      }
    return out;
  }
};

void require_fitting(const EventLog& log, const AcceptingPetriNet& apn,
                     const ExploreLimits& limits, const std::string& measure) {
  for (const auto& trace : trace_set(log))
    if (!is_trace(apn, trace, limits))
      throw PreconditionError(measure + ": log does not fit the model, trace " +
                              trace_to_string(trace) + " is not in its language");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::string PrecisionReport::to_text() const {
  std::string out = "measure=" + measure + "\n";
  out += "value=" + (value ? fmt4(*value) : std::string("undefined")) + "\n";
  for (const auto& [key, val] : options) out += "option." + key + "=" + val + "\n";
  for (const auto& [key, val] : diagnostics)
    out += "diagnostic." + key + "=" + val + "\n";
  return out;
}

std::string PrecisionReport::to_record() const {
  nlohmann::ordered_json record;
  record["measure"] = measure;
  record["defined"] = defined();
  if (value)
    record["value"] = *value;
  else
    record["value"] = nullptr;
  record["options"] = options;
  record["diagnostics"] = diagnostics;
  return record.dump();
}

// ---------------------------------------------------------------------------
// Sometimes-relations

SometimesRelations log_sometimes_relations(const EventLog& log) {
  SometimesRelations out;
  std::set<Activity> alphabet = log.alphabet();
  std::map<std::pair<Activity, Activity>, std::pair<bool, bool>> follows,
      precedes;  // pair -> (witness, counter)
  for (const auto& trace : trace_set(log)) {
    for (std::size_t i = 0; i < trace.size(); ++i) {
      std::set<Activity> after(trace.begin() + i + 1, trace.end());
      std::set<Activity> before(trace.begin(), trace.begin() + i);
      for (const auto& y : alphabet) {
        auto& f = follows[{trace[i], y}];
        (after.count(y) ? f.first : f.second) = true;
        auto& p = precedes[{trace[i], y}];
        (before.count(y) ? p.first : p.second) = true;
      }
    }
  }
  for (const auto& [pair, flags] : follows)
    if (flags.first && flags.second) out.follows.insert(pair);
  for (const auto& [pair, flags] : precedes)
    if (flags.first && flags.second) out.precedes.insert(pair);
  return out;
}

SometimesRelations model_sometimes_relations(const AcceptingPetriNet& apn,
                                             const ExploreLimits& limits) {
  StateGraph sg = explore(apn, limits);
  if (!sg.bounded)
    throw UnboundedNetError(
        "sometimes-relations require exhaustive state-space exploration");
  const int n = (int)sg.states.size();

  std::vector<std::vector<int>> fwd(n), rev(n);
  for (const auto& [from, t, to] : sg.edges) {
    fwd[from].push_back(to);
    rev[to].push_back(from);
  }
  auto bfs = [&](const std::vector<int>& sources,
                 const std::vector<std::vector<int>>& adj) {
    std::vector<bool> seen(n, false);
    std::deque<int> queue;
    for (int s : sources)
      if (!seen[s]) {
        seen[s] = true;
        queue.push_back(s);
      }
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      for (int to : adj[s])
        if (!seen[to]) {
          seen[to] = true;
          queue.push_back(to);
        }
    }
    return seen;
  };

  // States that can still complete to a final marking.
  std::vector<bool> useful = bfs(sg.accepting, rev);

  std::set<Activity> alphabet = apn.net.alphabet();
  std::map<Activity, std::vector<std::pair<int, int>>> occurrences;
  for (const auto& [from, t, to] : sg.edges)
    if (!apn.net.is_tau(t)) occurrences[apn.net.labels[t]].push_back({from, to});

  SometimesRelations out;
  for (const auto& y : alphabet) {
    // can_reach_y: states from which a y firing with a viable continuation is
    // still reachable.
    std::vector<int> y_sources, y_targets;
    for (const auto& [from, to] : occurrences[y]) {
      if (useful[to]) y_sources.push_back(from);
      y_targets.push_back(to);
    }
    std::vector<bool> can_reach_y = bfs(y_sources, rev);
    std::vector<bool> via_y = bfs(y_targets, fwd);

    std::vector<std::vector<int>> fwd_no_y(n), rev_no_y(n);
    for (const auto& [from, t, to] : sg.edges) {
      if (!apn.net.is_tau(t) && apn.net.labels[t] == y) continue;
      fwd_no_y[from].push_back(to);
      rev_no_y[to].push_back(from);
    }
    std::vector<bool> final_avoiding_y = bfs(sg.accepting, rev_no_y);
    std::vector<bool> initial_avoiding_y = bfs({sg.initial}, fwd_no_y);

    for (const auto& x : alphabet) {
      bool fw = false, fc = false, pw = false, pc = false;
      for (const auto& [from, to] : occurrences[x]) {
        if (!useful[to]) continue;
        fw = fw || can_reach_y[to];
        fc = fc || final_avoiding_y[to];
        pw = pw || via_y[from];
        pc = pc || initial_avoiding_y[from];
      }
      if (fw && fc) out.follows.insert({x, y});
      if (pw && pc) out.precedes.insert({x, y});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Measures

PrecisionReport greco_precision(const EventLog& log, const AcceptingPetriNet& apn,
                                const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "greco";
  report.options["trace_cap"] = std::to_string(opt.trace_cap);

  Dfa dfa = language_dfa(apn, opt.limits);

  // The minimal DFA is trimmed, so any cycle lies on an accepting path.
  std::vector<int> color(dfa.num_states, 0);
  bool cyclic = false;
  std::function<void(int)> dfs = [&](int s) {
    color[s] = 1;
    for (int target : dfa.next[s]) {
      if (target < 0) continue;
      if (color[target] == 1) cyclic = true;
      if (color[target] == 0 && !cyclic) dfs(target);
    }
    color[s] = 2;
  };
  dfs(dfa.initial);

  if (cyclic) {
    report.value = 0.0;
    report.diagnostics["model_paths"] = "infinite";
    return report;
  }

  std::vector<std::uint64_t> memo(dfa.num_states, 0);
  std::vector<bool> done(dfa.num_states, false);
  bool overflow = false;
  std::function<std::uint64_t(int)> count = [&](int s) -> std::uint64_t {
    if (done[s]) return memo[s];
    std::uint64_t total = dfa.accepting[s] ? 1 : 0;
    for (int target : dfa.next[s]) {
      if (target < 0) continue;
      total += count(target);
      if (total > opt.trace_cap) overflow = true;
    }
    done[s] = true;
    return memo[s] = total;
  };
  std::uint64_t model_paths = count(dfa.initial);
  if (overflow)
    throw UndecidedError("greco: model has more than " +
                         std::to_string(opt.trace_cap) + " paths");

  std::uint64_t seen = 0;
  for (const auto& trace : trace_set(log))
    if (dfa.accepts(trace)) ++seen;
  report.diagnostics["model_paths"] = std::to_string(model_paths);
  report.diagnostics["log_paths_in_model"] = std::to_string(seen);
  if (model_paths == 0) {
    report.diagnostics["reason"] = "model language is empty";
    return report;  // undefined
  }
  report.value = (double)seen / (double)model_paths;
  return report;
}

PrecisionReport simple_ba(const EventLog& log, const AcceptingPetriNet& apn,
                          const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "simple-ba";
  report.options["tiebreak"] = tiebreak_text(opt.tiebreak);
  std::string wf = wf_shape_issue(apn);
  report.diagnostics["wf_shape"] = wf.empty() ? "ok" : "violated: " + wf;

  const std::size_t visible = apn.net.visible_transition_count();
  report.diagnostics["visible_transitions"] = std::to_string(visible);
  if (visible <= 1) {
    report.diagnostics["reason"] = "needs more than one visible transition";
    return report;  // undefined
  }

  std::uint64_t steps = 0;
  std::uint64_t enabled_sum = 0;
  for (const auto& [trace, count] : log.traces) {
    Alignment replay =
        optimal_alignment(apn, trace, {}, opt.tiebreak, opt.limits);
    if (replay.cost != 0)
      throw PreconditionError("simple-ba: trace " + trace_to_string(trace) +
                              " cannot be replayed on the model");
    Marking m = apn.initial;
    for (TransId t : replay.firing_sequence) {
      if (!apn.net.is_tau(t)) {
        std::uint64_t n = 0;
        for (TransId u : enabled(apn, m))
          if (!apn.net.is_tau(u)) ++n;
        enabled_sum += count * n;
        steps += count;
      }
      m = fire(apn, m, t);
    }
  }
  if (steps == 0) {
    report.diagnostics["reason"] = "no events to replay";
    return report;  // undefined
  }
  double x_bar = (double)enabled_sum / (double)steps;
  report.diagnostics["x_bar"] = fmt4(x_bar);
  report.value = ((double)visible - x_bar) / ((double)visible - 1.0);
  return report;
}

PrecisionReport advanced_ba(const EventLog& log, const AcceptingPetriNet& apn,
                            const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "advanced-ba";
  std::string wf = wf_shape_issue(apn);
  report.diagnostics["wf_shape"] = wf.empty() ? "ok" : "violated: " + wf;

  SometimesRelations model;
  try {
    model = model_sometimes_relations(apn, opt.limits);
  } catch (const ExplorationOverflowError& e) {
    throw UndecidedError(std::string("advanced-ba: ") + e.what());
  }
  SometimesRelations logrel = log_sometimes_relations(log);

  auto intersection_size = [](const auto& a, const auto& b) {
    std::size_t n = 0;
    for (const auto& pair : a)
      if (b.count(pair)) ++n;
    return n;
  };
  std::size_t follows_common = intersection_size(logrel.follows, model.follows);
  std::size_t precedes_common =
      intersection_size(logrel.precedes, model.precedes);
  report.diagnostics["log_sometimes_follows"] =
      std::to_string(logrel.follows.size());
  report.diagnostics["log_sometimes_precedes"] =
      std::to_string(logrel.precedes.size());
  report.diagnostics["model_sometimes_follows"] =
      std::to_string(model.follows.size());
  report.diagnostics["model_sometimes_precedes"] =
      std::to_string(model.precedes.size());
  report.diagnostics["common_follows"] = std::to_string(follows_common);
  report.diagnostics["common_precedes"] = std::to_string(precedes_common);

  if (model.follows.empty() || model.precedes.empty()) {
    report.diagnostics["reason"] = "model sometimes-relations are empty";
    return report;  // undefined: the measure is partial here
  }
  report.value = (double)follows_common / (2.0 * model.follows.size()) +
                 (double)precedes_common / (2.0 * model.precedes.size());
  return report;
}

PrecisionReport etc_precision(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "etc";
  require_fitting(log, apn, opt.limits, "etc");

  LangContext ctx(apn, opt.limits);
  PrefixAutomaton prefixes = build_prefix_automaton(log);

  std::uint64_t numerator = 0, denominator = 0;
  std::function<void(int, const std::set<int>&)> walk =
      [&](int node, const std::set<int>& markings) {
        const auto& data = prefixes.nodes[node];
        std::set<Activity> allowed = ctx.enabled_activities(markings);
        numerator += data.visits * data.children.size();
        denominator += data.visits * allowed.size();
        for (const auto& [activity, child] : data.children)
          walk(child, ctx.step(markings, activity));
      };
  walk(0, ctx.initial_set());

  report.diagnostics["numerator"] = std::to_string(numerator);
  report.diagnostics["denominator"] = std::to_string(denominator);
  report.diagnostics["prefix_states"] = std::to_string(prefixes.nodes.size());
  if (denominator == 0) {
    report.value = 1.0;
    report.diagnostics["note"] = "no activity allowed anywhere";
    return report;
  }
  report.value = (double)numerator / (double)denominator;
  return report;
}

namespace {

/// Automaton over firing-sequence prefixes: the states the chosen alignments
/// take the model through, tau firings included. Options per state are the
/// transitions enabled in its marking.
struct FiringTree {
  struct Node {
    std::map<TransId, int> children;
    double visits = 0.0;
    double ends = 0.0;
    Marking marking;
  };
  std::vector<Node> nodes;

  explicit FiringTree(const Marking& initial) {
    nodes.emplace_back();
    nodes[0].marking = initial;
  }

  void add(const AcceptingPetriNet& apn, const std::vector<TransId>& firings,
           double weight) {
    int node = 0;
    nodes[0].visits += weight;
    for (TransId t : firings) {
      auto it = nodes[node].children.find(t);
      int child;
      if (it == nodes[node].children.end()) {
        child = (int)nodes.size();
        nodes[node].children[t] = child;
        Node fresh;
        fresh.marking = fire(apn, nodes[node].marking, t);
        nodes.push_back(std::move(fresh));
      } else {
        child = it->second;
      }
      node = child;
      nodes[node].visits += weight;
    }
    nodes[node].ends += weight;
  }
};

PrecisionReport firing_tree_precision(const AcceptingPetriNet& apn,
                                      const FiringTree& tree,
                                      MeasureOptions::Weighting weighting,
                                      PrecisionReport report) {
  double numerator = 0.0, denominator = 0.0;
  for (const auto& node : tree.nodes) {
    double w = weighting == MeasureOptions::Weighting::Visits
                   ? node.visits
                   : node.visits - node.ends;
    numerator += w * (double)node.children.size();
    denominator += w * (double)enabled(apn, node.marking).size();
  }
  report.diagnostics["automaton_states"] = std::to_string(tree.nodes.size());
  report.diagnostics["numerator"] = fmt4(numerator);
  report.diagnostics["denominator"] = fmt4(denominator);
  report.options["weighting"] =
      weighting == MeasureOptions::Weighting::Visits ? "visits" : "events";
  if (denominator == 0.0) {
    report.value = 1.0;
    report.diagnostics["note"] = "no transition enabled anywhere";
    return report;
  }
  report.value = numerator / denominator;
  return report;
}

}  // namespace

PrecisionReport one_align_etc(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "one-align-etc";
  report.options["tiebreak"] = tiebreak_text(opt.tiebreak);

  auto alignments = align_log(apn, log, {}, opt.tiebreak, opt.limits);
  FiringTree tree(apn.initial);
  for (const auto& [trace, count] : log.traces)
    tree.add(apn, alignments.at(trace).firing_sequence, (double)count);
  return firing_tree_precision(apn, tree, opt.weighting, std::move(report));
}

PrecisionReport all_align_etc(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "all-align-etc";
  report.options["align_cap"] = std::to_string(opt.align_cap);

  FiringTree tree(apn.initial);
  std::uint64_t total_alignments = 0;
  for (const auto& [trace, count] : log.traces) {
    auto all = all_optimal_alignments(apn, trace, {}, opt.align_cap, opt.limits);
    total_alignments += all.size();
    double weight = (double)count / (double)all.size();
    for (const auto& alignment : all)
      tree.add(apn, alignment.firing_sequence, weight);
  }
  report.diagnostics["optimal_alignments"] = std::to_string(total_alignments);
  return firing_tree_precision(apn, tree, opt.weighting, std::move(report));
}

PrecisionReport negative_event_precision(const EventLog& log,
                                         const AcceptingPetriNet& apn,
                                         const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "negative-event";
  const bool sampled =
      opt.negative_mode == MeasureOptions::NegativeEventMode::Sampled;
  report.options["mode"] = sampled ? "sampled" : "deterministic";
  if (sampled) report.options["seed"] = std::to_string(opt.seed);
  const std::uint32_t window = std::max<std::uint32_t>(1, opt.max_window);
  report.options["max_window"] = std::to_string(window);

  require_fitting(log, apn, opt.limits, "negative-event");
  LangContext ctx(apn, opt.limits);

  std::set<Activity> alphabet = log.alphabet();
  for (const auto& a : apn.net.alphabet()) alphabet.insert(a);

  std::vector<Trace> distinct(trace_set(log).begin(), trace_set(log).end());
  // Sites matching the window before event ti of trace si are kept per seed;
  // dropping sites can only induce more negatives.
  auto keep_site = [&](std::size_t si, std::size_t ti, std::uint32_t k,
                       std::size_t ri, std::size_t j) {
    if (!sampled) return true;
    std::uint64_t h = opt.seed;
    h = splitmix64(h ^ (std::uint64_t)si);
    h = splitmix64(h ^ (std::uint64_t)ti);
    h = splitmix64(h ^ (std::uint64_t)k);
    h = splitmix64(h ^ (std::uint64_t)ri);
    h = splitmix64(h ^ (std::uint64_t)j);
    return (h & 3) != 0;  // keep 3 of 4
  };

  double tp = 0.0, fp = 0.0;
  std::size_t si = 0;
  for (const auto& [trace, count] : log.traces) {
    std::set<int> markings = ctx.initial_set();
    for (std::size_t i = 0; i < trace.size(); ++i) {
      std::map<Activity, double> negative_weight;
      for (std::uint32_t k = 1; k <= window; ++k) {
        std::size_t len = std::min<std::size_t>(k, i);
        auto begin = trace.begin() + (i - len);
        auto end = trace.begin() + i;
        std::set<Activity> followers;
        std::size_t sites = 0;
        for (std::size_t ri = 0; ri < distinct.size(); ++ri) {
          const Trace& other = distinct[ri];
          for (std::size_t j = len; j <= other.size(); ++j) {
            if (!std::equal(begin, end, other.begin() + (j - len))) continue;
            if (!keep_site(si, i, k, ri, j)) continue;
            ++sites;
            if (j < other.size()) followers.insert(other[j]);
          }
        }
        if (sites == 0) continue;
        double weight = (double)k / (double)window;
        for (const auto& a : alphabet)
          if (!followers.count(a)) {
            double& w = negative_weight[a];
            w = std::max(w, weight);
          }
      }
      for (const auto& a : ctx.enabled_activities(markings)) {
        auto it = negative_weight.find(a);
        if (it == negative_weight.end() || it->second == 0.0)
          tp += (double)count;
        else
          fp += (double)count * it->second;
      }
      markings = ctx.step(markings, trace[i]);
    }
    ++si;
  }

  report.diagnostics["true_positives"] = fmt4(tp);
  report.diagnostics["false_positives"] = fmt4(fp);
  if (tp + fp == 0.0) {
    report.diagnostics["reason"] = "no classified positions";
    return report;  // undefined
  }
  report.value = tp / (tp + fp);
  return report;
}

PrecisionReport pcc_precision(const EventLog& log, const AcceptingPetriNet& apn,
                              const MeasureOptions& opt) {
  PrecisionReport report;
  report.measure = "pcc";
  if (opt.k < 1) throw Error("pcc: k must be >= 1");

  std::set<Activity> alphabet = log.alphabet();
  for (const auto& a : apn.net.alphabet()) alphabet.insert(a);
  if (alphabet.empty()) {
    report.diagnostics["reason"] = "empty activity alphabet";
    return report;  // undefined
  }
  const std::size_t k = std::min<std::size_t>(opt.k, alphabet.size());
  report.options["k"] = std::to_string(k);

  Dfa model_dfa = language_dfa(apn, opt.limits);
  std::vector<Activity> symbols(alphabet.begin(), alphabet.end());

  // All k-subsets in lexicographic order.
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start,
                                                             std::size_t depth) {
    if (depth == k) {
      subsets.push_back(pick);
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= symbols.size(); ++i) {
      pick[depth] = i;
      choose(i + 1, depth + 1);
      if (subsets.size() > opt.subset_cap)
        throw EnumerationOverflowError("pcc: more than " +
                                       std::to_string(opt.subset_cap) +
                                       " projection subsets");
    }
  };
  choose(0, 0);

  double total_share = 0.0;
  std::string shares;
  for (const auto& subset : subsets) {
    std::set<Activity> keep;
    for (std::size_t i : subset) keep.insert(symbols[i]);
    Dfa model = project_dfa(model_dfa, keep);
    Dfa logdfa = trace_set_dfa(trace_set(project_log(log, keep)), keep);
    ProductDfa conj = product(model, logdfa);

    // Options per model state: outgoing activities plus stopping when
    // accepting. Every model state contributes at least one instance; a state
    // the log never reaches counts as an instance with nothing observed.
    std::vector<int> instances(model.num_states, 0);
    double numerator = 0.0;
    for (int c = 0; c < conj.dfa.num_states; ++c) {
      ++instances[conj.origin[c].first];
      numerator +=
          conj.dfa.out_degree(c) + (conj.dfa.accepting[c] ? 1 : 0);
    }
    double denominator = 0.0;
    for (int s = 0; s < model.num_states; ++s) {
      int options = model.out_degree(s) + (model.accepting[s] ? 1 : 0);
      denominator += (double)options * std::max(instances[s], 1);
    }
    double share = denominator > 0.0 ? numerator / denominator : 1.0;
    total_share += share;
    if (!shares.empty()) shares += " ";
    std::string label;
    for (std::size_t i : subset) label += (label.empty() ? "" : ",") + symbols[i];
    shares += label + "=" + fmt4(share);
  }
  report.diagnostics["subsets"] = std::to_string(subsets.size());
  report.diagnostics["subset_shares"] = shares;
  report.value = total_share / (double)subsets.size();
  return report;
}

}  // namespace precima
