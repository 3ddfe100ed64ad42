#include "precima/alignment.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>

namespace precima {

namespace {

constexpr std::int64_t INF = std::numeric_limits<std::int64_t>::max() / 4;

struct ProductEdge {
  int from, to;
  std::int64_t cost;
  Move move;
  int order;  // lexicographic rank at `from`
};

struct ProductGraph {
  const StateGraph* sg = nullptr;
  int len = 0;
  int num_nodes = 0;
  std::vector<ProductEdge> edges;
  std::vector<std::vector<int>> out, in;
  std::vector<int> goals;
  int start = 0;
};

int move_rank(const Move& m) {
  switch (m.kind) {
    case MoveKind::Synchronous: return 0;
    case MoveKind::LogOnly: return 1;
    case MoveKind::ModelOnly: return 2;
  }
  return 3;
}

ProductGraph build_product(const AcceptingPetriNet& apn, const StateGraph& sg,
                           const Trace& trace, const AlignmentCosts& costs) {
  ProductGraph g;
  g.sg = &sg;
  g.len = (int)trace.size();
  const int width = g.len + 1;
  g.num_nodes = (int)sg.states.size() * width;
  g.out.assign(g.num_nodes, {});
  g.in.assign(g.num_nodes, {});
  g.start = sg.initial * width + 0;

  auto add_edge = [&](int from, int to, std::int64_t cost, Move move) {
    int id = (int)g.edges.size();
    g.edges.push_back({from, to, cost, std::move(move), 0});
    g.out[from].push_back(id);
    g.in[to].push_back(id);
  };

  for (int s = 0; s < (int)sg.states.size(); ++s) {
    for (int pos = 0; pos <= g.len; ++pos) {
      int node = s * width + pos;
      for (int e : sg.out[s]) {
        const auto& [from, t, to] = sg.edges[e];
        if (pos < g.len && !apn.net.is_tau(t) &&
            apn.net.labels[t] == trace[pos]) {
          add_edge(node, to * width + pos + 1, 0,
                   Move{MoveKind::Synchronous, trace[pos], t});
        }
        std::int64_t cost =
            apn.net.is_tau(t) ? 0 : costs.visible_model_move;
        add_edge(node, to * width + pos, cost,
                 Move{MoveKind::ModelOnly,
                      apn.net.is_tau(t) ? std::nullopt
                                        : std::optional<Activity>(
                                              apn.net.labels[t]),
                      t});
      }
      if (pos < g.len)
        add_edge(node, node + 1, costs.log_move,
                 Move{MoveKind::LogOnly, trace[pos], std::nullopt});
    }
  }
  // Lexicographic order of a node's out edges: sync < log < model, then by
  // transition id.
  for (auto& outs : g.out) {
    std::sort(outs.begin(), outs.end(), [&](int a, int b) {
      const Move& ma = g.edges[a].move;
      const Move& mb = g.edges[b].move;
      if (move_rank(ma) != move_rank(mb)) return move_rank(ma) < move_rank(mb);
      TransId ta = ma.transition.value_or(0);
      TransId tb = mb.transition.value_or(0);
      return ta < tb;
    });
  }
  for (int s : sg.accepting) g.goals.push_back(s * width + g.len);
  return g;
}

std::vector<std::int64_t> dijkstra(const ProductGraph& g,
                                   const std::vector<int>& sources,
                                   bool forward) {
  std::vector<std::int64_t> dist(g.num_nodes, INF);
  using Item = std::pair<std::int64_t, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  for (int s : sources) {
    dist[s] = 0;
    pq.emplace(0, s);
  }
  while (!pq.empty()) {
    auto [d, node] = pq.top();
    pq.pop();
    if (d > dist[node]) continue;
    const auto& adjacent = forward ? g.out[node] : g.in[node];
    for (int e : adjacent) {
      const auto& edge = g.edges[e];
      int target = forward ? edge.to : edge.from;
      std::int64_t nd = d + edge.cost;
      if (nd < dist[target]) {
        dist[target] = nd;
        pq.emplace(nd, target);
      }
    }
  }
  return dist;
}

struct Enumerator {
  const AcceptingPetriNet& apn;
  const ProductGraph& g;
  const std::vector<std::int64_t>& from_start;
  const std::vector<std::int64_t>& to_goal;
  std::int64_t optimal;
  std::size_t cap;            // max results and max expansions (0 = first only)
  bool first_only;
  std::optional<std::uint64_t> shuffle_seed;

  std::vector<Alignment> results;
  std::vector<int> path_edges;
  std::vector<bool> on_path;
  std::size_t expansions = 0;

  Enumerator(const AcceptingPetriNet& apn_, const ProductGraph& g_,
             const std::vector<std::int64_t>& fs,
             const std::vector<std::int64_t>& tg, std::int64_t optimal_,
             std::size_t cap_, bool first_only_,
             std::optional<std::uint64_t> seed)
      : apn(apn_), g(g_), from_start(fs), to_goal(tg), optimal(optimal_),
        cap(cap_), first_only(first_only_), shuffle_seed(seed) {
    on_path.assign(g.num_nodes, false);
  }

  Alignment materialize(int goal_node) const {
    Alignment a;
    a.cost = optimal;
    for (int e : path_edges) {
      const Move& m = g.edges[e].move;
      a.moves.push_back(m);
      if (m.kind != MoveKind::LogOnly) a.firing_sequence.push_back(*m.transition);
    }
    int width = g.len + 1;
    a.final_marking = g.sg->states[goal_node / width];
    return a;
  }

  // Returns false when enumeration should stop.
  bool visit(int node) {
    if (++expansions > cap && !first_only)
      throw EnumerationOverflowError(
          "optimal-alignment enumeration exceeded cap " + std::to_string(cap));
    if (expansions > cap && first_only)
      throw UndecidedError("alignment search budget exhausted");
    if (to_goal[node] == 0 && std::find(g.goals.begin(), g.goals.end(), node) !=
                                  g.goals.end()) {
      results.push_back(materialize(node));
      if (first_only) return false;
      if (results.size() > cap)
        throw EnumerationOverflowError(
            "more than " + std::to_string(cap) + " optimal alignments");
    }
    std::vector<int> order = g.out[node];
    if (shuffle_seed) {
      std::mt19937_64 rng(*shuffle_seed ^
                          ((std::uint64_t)node * 0x9e3779b97f4a7c15ULL));
      std::shuffle(order.begin(), order.end(), rng);
    }
    on_path[node] = true;
    for (int e : order) {
      const auto& edge = g.edges[e];
      if (on_path[edge.to]) continue;
      if (from_start[node] + edge.cost + to_goal[edge.to] != optimal) continue;
      path_edges.push_back(e);
      bool keep_going = visit(edge.to);
      path_edges.pop_back();
      if (!keep_going) {
        on_path[node] = false;
        return false;
      }
    }
    on_path[node] = false;
    return true;
  }
};

std::vector<Alignment> search(const AcceptingPetriNet& apn, const Trace& trace,
                              const AlignmentCosts& costs, std::size_t cap,
                              bool first_only,
                              std::optional<std::uint64_t> shuffle_seed,
                              const ExploreLimits& limits) {
  if (costs.log_move < 0 || costs.visible_model_move < 0)
    throw Error("alignment costs must be non-negative");
  StateGraph sg;
  try {
    sg = explore(apn, limits);
  } catch (const ExplorationOverflowError&) {
    throw UndecidedError("alignment undecided: state cap exceeded");
  }
  if (!sg.bounded)
    throw UnboundedNetError(
        "alignment requires a net bounded within the exploration bound");
  ProductGraph g = build_product(apn, sg, trace, costs);
  if (g.goals.empty())
    throw NoAlignmentError("no final marking is reachable");
  auto from_start = dijkstra(g, {g.start}, true);
  auto to_goal = dijkstra(g, g.goals, false);
  if (to_goal[g.start] >= INF)
    throw NoAlignmentError("no final marking is reachable");
  std::int64_t optimal = to_goal[g.start];

  Enumerator enumerator(apn, g, from_start, to_goal, optimal,
                        first_only ? (std::size_t)4000000 : cap, first_only,
                        shuffle_seed);
  enumerator.visit(g.start);
  return std::move(enumerator.results);
}

}  // namespace

Alignment optimal_alignment(const AcceptingPetriNet& apn, const Trace& trace,
                            const AlignmentCosts& costs,
                            const Tiebreak& tiebreak,
                            const ExploreLimits& limits) {
  std::optional<std::uint64_t> seed;
  if (tiebreak.mode == Tiebreak::Mode::SeededRandom) seed = tiebreak.seed;
  auto results = search(apn, trace, costs, 1, true, seed, limits);
  return results.at(0);
}

std::vector<Alignment> all_optimal_alignments(const AcceptingPetriNet& apn,
                                              const Trace& trace,
                                              const AlignmentCosts& costs,
                                              std::size_t cap,
                                              const ExploreLimits& limits) {
  if (cap < 1) throw Error("alignment enumeration cap must be >= 1");
  return search(apn, trace, costs, cap, false, std::nullopt, limits);
}

std::map<Trace, Alignment> align_log(const AcceptingPetriNet& apn,
                                     const EventLog& log,
                                     const AlignmentCosts& costs,
                                     const Tiebreak& tiebreak,
                                     const ExploreLimits& limits) {
  std::map<Trace, Alignment> out;
  for (const auto& [trace, count] : log.traces)
    out.emplace(trace, optimal_alignment(apn, trace, costs, tiebreak, limits));
  return out;
}

}  // namespace precima
