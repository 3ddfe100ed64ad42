#include "precima/petri.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace precima {

std::set<Activity> LabeledPetriNet::alphabet() const {
  std::set<Activity> out;
  for (const auto& label : labels)
    if (!label.empty()) out.insert(label);
  return out;
}

std::size_t LabeledPetriNet::visible_transition_count() const {
  std::size_t n = 0;
  for (const auto& label : labels)
    if (!label.empty()) ++n;
  return n;
}

bool AcceptingPetriNet::is_final(const Marking& m) const {
  return std::binary_search(finals.begin(), finals.end(), m);
}

namespace {

void check_marking(const AcceptingPetriNet& apn, const Marking& m) {
  if (m.size() != apn.net.num_places())
    throw InvalidMarkingError("marking refers to " + std::to_string(m.size()) +
                              " places, net has " +
                              std::to_string(apn.net.num_places()));
}

bool enabled_at(const LabeledPetriNet& net, const Marking& m, TransId t) {
  for (PlaceId p : net.pre[t])
    if (m[p] == 0) return false;
  return true;
}

}  // namespace

std::vector<TransId> enabled(const AcceptingPetriNet& apn, const Marking& m) {
  check_marking(apn, m);
  std::vector<TransId> out;
  for (TransId t = 0; t < apn.net.num_transitions(); ++t)
    if (enabled_at(apn.net, m, t)) out.push_back(t);
  return out;
}

Marking fire(const AcceptingPetriNet& apn, const Marking& m, TransId t) {
  check_marking(apn, m);
  if (t >= apn.net.num_transitions())
    throw NotEnabledError("no such transition id " + std::to_string(t));
  if (!enabled_at(apn.net, m, t))
    throw NotEnabledError("transition '" + apn.net.trans_names[t] +
                          "' is not enabled");
  Marking next = m;
  for (PlaceId p : apn.net.pre[t]) --next[p];
  for (PlaceId p : apn.net.post[t]) ++next[p];
  return next;
}

StateGraph explore(const AcceptingPetriNet& apn, const ExploreLimits& limits) {
  if (limits.bound < 1 || limits.state_cap < 1)
    throw Error("explore: bound and state_cap must be >= 1");
  StateGraph g;
  g.states.push_back(apn.initial);
  g.index[apn.initial] = 0;
  g.out.emplace_back();
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    const Marking m = g.states[s];
    for (TransId t = 0; t < apn.net.num_transitions(); ++t) {
      if (!enabled_at(apn.net, m, t)) continue;
      Marking next = m;
      for (PlaceId p : apn.net.pre[t]) --next[p];
      for (PlaceId p : apn.net.post[t]) ++next[p];
      bool overflow = false;
      for (PlaceId p = 0; p < next.size(); ++p) {
        if (next[p] > limits.bound) {
          g.bounded = false;
          if (!g.overflow_place) g.overflow_place = p;
          overflow = true;
        }
      }
      if (overflow) continue;  // recorded, not expanded
      auto [it, inserted] = g.index.try_emplace(next, (int)g.states.size());
      if (inserted) {
        if (g.states.size() >= limits.state_cap)
          throw ExplorationOverflowError(
              "state cap " + std::to_string(limits.state_cap) +
              " exceeded during exploration");
        g.states.push_back(next);
        g.out.emplace_back();
        queue.push_back(it->second);
      }
      g.out[s].push_back((int)g.edges.size());
      g.edges.emplace_back(s, t, it->second);
    }
  }
  for (int s = 0; s < (int)g.states.size(); ++s)
    if (apn.is_final(g.states[s])) g.accepting.push_back(s);
  return g;
}

Dfa language_dfa(const AcceptingPetriNet& apn, const ExploreLimits& limits) {
  StateGraph g = explore(apn, limits);
  if (!g.bounded)
    throw UnboundedNetError(
        "net exceeds bound " + std::to_string(limits.bound) + " at place '" +
        apn.net.place_names[*g.overflow_place] + "'");
  std::set<Activity> alphabet = apn.net.alphabet();
  Nfa nfa;
  nfa.alphabet.assign(alphabet.begin(), alphabet.end());
  nfa.num_states = (int)g.states.size();
  nfa.initials = {g.initial};
  nfa.accepting = g.accepting;
  std::map<Activity, int> symbol;
  for (int i = 0; i < (int)nfa.alphabet.size(); ++i) symbol[nfa.alphabet[i]] = i;
  for (const auto& [from, t, to] : g.edges) {
    int sym = apn.net.is_tau(t) ? -1 : symbol.at(apn.net.labels[t]);
    nfa.edges.emplace_back(from, sym, to);
  }
  return minimize(determinize(nfa));
}

bool is_trace(const AcceptingPetriNet& apn, const Trace& trace,
              const ExploreLimits& limits) {
  StateGraph g;
  bool capped = false;
  try {
    g = explore(apn, limits);
  } catch (const ExplorationOverflowError&) {
    throw UndecidedError("membership search budget exhausted (state cap)");
  }
  capped = !g.bounded;

  // BFS over (state, consumed-prefix-length); sound for acceptance even on a
  // truncated graph.
  const int len = (int)trace.size();
  std::vector<std::vector<bool>> seen(g.states.size(),
                                      std::vector<bool>(len + 1, false));
  std::deque<std::pair<int, int>> queue;
  queue.emplace_back(g.initial, 0);
  seen[g.initial][0] = true;
  while (!queue.empty()) {
    auto [s, pos] = queue.front();
    queue.pop_front();
    if (pos == len && apn.is_final(g.states[s])) return true;
    for (int e : g.out[s]) {
      const auto& [from, t, to] = g.edges[e];
      int npos;
      if (apn.net.is_tau(t)) {
        npos = pos;
      } else if (pos < len && apn.net.labels[t] == trace[pos]) {
        npos = pos + 1;
      } else {
        continue;
      }
      if (!seen[to][npos]) {
        seen[to][npos] = true;
        queue.emplace_back(to, npos);
      }
    }
  }
  if (capped)
    throw UndecidedError(
        "membership undecided: net exceeds the exploration bound at place '" +
        apn.net.place_names[*g.overflow_place] + "'");
  return false;
}

bool is_fitting(const EventLog& log, const AcceptingPetriNet& apn,
                const ExploreLimits& limits) {
  for (const auto& trace : trace_set(log))
    if (!is_trace(apn, trace, limits)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Net DSL

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

std::uint32_t parse_count(const std::string& s, int lineno) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(lineno, "expected a non-negative integer, got '" + s + "'");
  try {
    unsigned long v = std::stoul(s);
    if (v > 1000000) throw std::out_of_range("count");
    return (std::uint32_t)v;
  } catch (const std::exception&) {
    throw ParseError(lineno, "count out of range: '" + s + "'");
  }
}

}  // namespace

AcceptingPetriNet parse_net(std::string_view text) {
  AcceptingPetriNet apn;
  LabeledPetriNet& net = apn.net;
  std::vector<std::map<std::string, std::uint32_t>> final_specs;
  std::map<std::string, std::uint32_t> initial_spec;
  std::set<std::pair<std::string, std::string>> seen_arcs;

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& kind = tokens[0];

    if (kind == "place") {
      if (tokens.size() < 2) throw ParseError(lineno, "place needs a name");
      const std::string& name = tokens[1];
      if (net.place_index.count(name) || net.trans_index.count(name))
        throw ParseError(lineno, "duplicate identifier '" + name + "'");
      net.place_index[name] = (PlaceId)net.place_names.size();
      net.place_names.push_back(name);
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (tokens[i].rfind("init=", 0) == 0)
          initial_spec[name] = parse_count(tokens[i].substr(5), lineno);
        else
          throw ParseError(lineno, "unknown place attribute '" + tokens[i] + "'");
      }
    } else if (kind == "trans") {
      if (tokens.size() < 2) throw ParseError(lineno, "trans needs a name");
      const std::string& name = tokens[1];
      if (net.place_index.count(name) || net.trans_index.count(name))
        throw ParseError(lineno, "duplicate identifier '" + name + "'");
      net.trans_index[name] = (TransId)net.trans_names.size();
      net.trans_names.push_back(name);
      std::string label;
      for (std::size_t i = 2; i < tokens.size(); ++i) {
        if (tokens[i].rfind("label=", 0) == 0) {
          label = tokens[i].substr(6);
          if (label.empty()) throw ParseError(lineno, "empty label");
        } else {
          throw ParseError(lineno,
                           "unknown trans attribute '" + tokens[i] + "'");
        }
      }
      net.labels.push_back(label);
      net.pre.emplace_back();
      net.post.emplace_back();
    } else if (kind == "arc") {
      if (tokens.size() != 3) throw ParseError(lineno, "arc needs two endpoints");
      const std::string& from = tokens[1];
      const std::string& to = tokens[2];
      if (!seen_arcs.insert({from, to}).second)
        throw ParseError(lineno, "duplicate arc " + from + " -> " + to);
      bool from_place = net.place_index.count(from) > 0;
      bool from_trans = net.trans_index.count(from) > 0;
      bool to_place = net.place_index.count(to) > 0;
      bool to_trans = net.trans_index.count(to) > 0;
      if (!from_place && !from_trans)
        throw ParseError(lineno, "unknown node '" + from + "'");
      if (!to_place && !to_trans)
        throw ParseError(lineno, "unknown node '" + to + "'");
      if (from_place && to_trans)
        net.pre[net.trans_index[to]].push_back(net.place_index[from]);
      else if (from_trans && to_place)
        net.post[net.trans_index[from]].push_back(net.place_index[to]);
      else
        throw ParseError(lineno, "arc must connect a place and a transition");
    } else if (kind == "final") {
      std::string spec;
      for (std::size_t i = 1; i < tokens.size(); ++i) spec += tokens[i];
      if (spec.empty()) throw ParseError(lineno, "final needs assignments");
      std::map<std::string, std::uint32_t> marking;
      std::size_t pos = 0;
      while (pos < spec.size()) {
        auto comma = spec.find(',', pos);
        std::string item =
            spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                        : comma - pos);
        auto eq = item.find('=');
        if (eq == std::string::npos)
          throw ParseError(lineno, "final expects <place>=<n>");
        std::string place = item.substr(0, eq);
        std::uint32_t n = parse_count(item.substr(eq + 1), lineno);
        if (!net.place_index.count(place))
          throw ParseError(lineno, "unknown place '" + place + "'");
        if (n == 0) throw ParseError(lineno, "final token count must be >= 1");
        marking[place] = n;
        if (comma == std::string::npos) break;
        pos = comma + 1;
      }
      final_specs.push_back(std::move(marking));
    } else {
      throw ParseError(lineno, "unknown declaration '" + kind + "'");
    }
  }

  if (final_specs.empty())
    throw ParseError(lineno, "net needs at least one final marking");

  for (auto& places : net.pre) std::sort(places.begin(), places.end());
  for (auto& places : net.post) std::sort(places.begin(), places.end());

  apn.initial.assign(net.num_places(), 0);
  for (const auto& [place, n] : initial_spec)
    apn.initial[net.place_index[place]] = n;
  for (const auto& spec : final_specs) {
    Marking m(net.num_places(), 0);
    for (const auto& [place, n] : spec) m[net.place_index[place]] = n;
    apn.finals.push_back(std::move(m));
  }
  std::sort(apn.finals.begin(), apn.finals.end());
  apn.finals.erase(std::unique(apn.finals.begin(), apn.finals.end()),
                   apn.finals.end());
  return apn;
}

std::string serialize_net(const AcceptingPetriNet& apn) {
  const LabeledPetriNet& net = apn.net;
  std::string out;
  for (PlaceId p = 0; p < net.num_places(); ++p) {
    out += "place " + net.place_names[p];
    if (apn.initial[p] > 0) out += " init=" + std::to_string(apn.initial[p]);
    out += '\n';
  }
  for (TransId t = 0; t < net.num_transitions(); ++t) {
    out += "trans " + net.trans_names[t];
    if (!net.is_tau(t)) out += " label=" + net.labels[t];
    out += '\n';
  }
  for (TransId t = 0; t < net.num_transitions(); ++t) {
    for (PlaceId p : net.pre[t])
      out += "arc " + net.place_names[p] + " " + net.trans_names[t] + '\n';
    for (PlaceId p : net.post[t])
      out += "arc " + net.trans_names[t] + " " + net.place_names[p] + '\n';
  }
  for (const auto& m : apn.finals) {
    out += "final ";
    bool first = true;
    for (PlaceId p = 0; p < m.size(); ++p) {
      if (m[p] == 0) continue;
      if (!first) out += ',';
      out += net.place_names[p] + "=" + std::to_string(m[p]);
      first = false;
    }
    out += '\n';
  }
  return out;
}

std::string wf_shape_issue(const AcceptingPetriNet& apn) {
  const LabeledPetriNet& net = apn.net;
  const int P = (int)net.num_places();
  const int T = (int)net.num_transitions();
  std::vector<bool> has_in(P, false), has_out(P, false);
  for (TransId t = 0; t < (TransId)T; ++t) {
    for (PlaceId p : net.pre[t]) has_out[p] = true;
    for (PlaceId p : net.post[t]) has_in[p] = true;
  }
  std::vector<int> sources, sinks;
  for (int p = 0; p < P; ++p) {
    if (!has_in[p]) sources.push_back(p);
    if (!has_out[p]) sinks.push_back(p);
  }
  if (sources.size() != 1)
    return "expected exactly one source place, found " +
           std::to_string(sources.size());
  if (sinks.size() != 1)
    return "expected exactly one sink place, found " +
           std::to_string(sinks.size());

  // Node graph: place ids 0..P-1, transition ids P..P+T-1.
  auto reach = [&](int start, bool forward) {
    std::vector<bool> seen(P + T, false);
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      int n = queue.front();
      queue.pop_front();
      for (int t = 0; t < T; ++t) {
        const auto& ins = forward ? net.pre[t] : net.post[t];
        const auto& outs = forward ? net.post[t] : net.pre[t];
        if (n < P) {
          if (std::find(ins.begin(), ins.end(), (PlaceId)n) != ins.end() &&
              !seen[P + t]) {
            seen[P + t] = true;
            queue.push_back(P + t);
          }
        } else if (n == P + t) {
          for (PlaceId p : outs)
            if (!seen[p]) {
              seen[p] = true;
              queue.push_back(p);
            }
        }
      }
    }
    return seen;
  };
  auto from_source = reach(sources[0], true);
  auto to_sink = reach(sinks[0], false);
  for (int n = 0; n < P + T; ++n) {
    if (!from_source[n] || !to_sink[n]) {
      std::string name =
          n < P ? net.place_names[n] : net.trans_names[n - P];
      return "node '" + name + "' is not on a path from source to sink";
    }
  }
  return "";
}

std::string marking_to_string(const AcceptingPetriNet& apn, const Marking& m) {
  std::string out = "{";
  bool first = true;
  for (PlaceId p = 0; p < m.size(); ++p) {
    if (m[p] == 0) continue;
    if (!first) out += ",";
    out += apn.net.place_names[p];
    if (m[p] > 1) out += ":" + std::to_string(m[p]);
    first = false;
  }
  return out + "}";
}

std::string to_dot(const StateGraph& graph, const AcceptingPetriNet& apn) {
  std::string out = "digraph stategraph {\n  rankdir=LR;\n";
  for (int s = 0; s < (int)graph.states.size(); ++s) {
    bool acc = std::find(graph.accepting.begin(), graph.accepting.end(), s) !=
               graph.accepting.end();
    out += "  s" + std::to_string(s) + " [label=\"" +
           marking_to_string(apn, graph.states[s]) + "\"" +
           (acc ? ", peripheries=2" : "") + "];\n";
  }
  for (const auto& [from, t, to] : graph.edges) {
    std::string label = apn.net.is_tau(t) ? "tau" : apn.net.labels[t];
    out += "  s" + std::to_string(from) + " -> s" + std::to_string(to) +
           " [label=\"" + label + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace precima
