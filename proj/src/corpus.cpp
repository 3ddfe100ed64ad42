#include "precima/corpus.hpp"

#include <random>

namespace precima {
namespace corpus {

namespace {

// ((a|b)(c|d))+ workflow net: the loop makes every activity pair
// sometimes-related on the model side.
const char* FIG2_LOOP_WFNET = R"(place p0 init=1
place p1
place p2
place p3
place p4
trans start
trans a label=a
trans b label=b
trans c label=c
trans d label=d
trans back
trans finish
arc p0 start
arc start p1
arc p1 a
arc p1 b
arc a p2
arc b p2
arc p2 c
arc p2 d
arc c p3
arc d p3
arc p3 back
arc back p1
arc p3 finish
arc finish p4
final p4=1
)";

// (a b)* a (c|d)
const char* FIG4_MODEL = R"(place p1 init=1
place p2
place p3
trans a label=a
trans b label=b
trans c label=c
trans d label=d
arc p1 a
arc a p3
arc p3 b
arc b p1
arc p3 c
arc p3 d
arc c p2
arc d p2
final p2=1
)";

const char* FIG4_LOG_L1 = "1x a,c\n1x a,d\n";

// The loop trace runs four a,b rounds: that is the log for which the
// published 0.7143 is the exact escaping-edge ratio (20/28).
const char* FIG4_LOG_L2 = "1x a,c\n1x a,d\n1x a,b,a,b,a,b,a,b,a,c\n";

// Flower over {a,b,c}: one visible petal per activity plus a tau petal and a
// tau return edge.
const char* FIG5A_FLOWER = R"(place p1 init=1
place p2
trans a label=a
trans b label=b
trans c label=c
trans skip
trans again
arc p1 a
arc a p2
arc p1 b
arc b p2
arc p1 c
arc c p2
arc p1 skip
arc skip p2
arc p2 again
arc again p1
final p2=1
)";

// Language-equivalent flower: a skippable c,b,a sequence inside a tau loop.
const char* FIG5B_FLOWER_TAU = R"(place p1 init=1
place p2
place p3
place p4
trans c label=c
trans sc
trans b label=b
trans sb
trans a label=a
trans sa
trans loop
arc p1 c
arc c p2
arc p1 sc
arc sc p2
arc p2 b
arc b p3
arc p2 sb
arc sb p3
arc p3 a
arc a p4
arc p3 sa
arc sa p4
arc p4 loop
arc loop p1
final p4=1
)";

// a {b,c}*: every trace starts with a.
const char* FIG5C_CONSTRAINED = R"(place p1 init=1
place p2
place p3
trans a label=a
trans b label=b
trans c label=c
trans skip
trans back
arc p1 a
arc a p2
arc p2 b
arc b p3
arc p2 c
arc c p3
arc p2 skip
arc skip p3
arc p3 back
arc back p2
final p3=1
)";

const char* FIG5_LOG = "1x a,b,c\n";

// a|b choice, a tau split into three parallel length-one loops on c, d, e
// (each must fire at least once), a tau join, then an f|g choice.
const char* FIG6_M1 = R"(place p1 init=1
place p2
place p3
place p4
place p5
place p6
place p7
place p8
place p9
place p10
trans a label=a
trans b label=b
trans split
trans c label=c
trans cback
trans d label=d
trans dback
trans e label=e
trans eback
trans join
trans f label=f
trans g label=g
arc p1 a
arc a p2
arc p1 b
arc b p2
arc p2 split
arc split p3
arc split p5
arc split p6
arc p3 d
arc d p4
arc p4 dback
arc dback p3
arc p5 c
arc c p7
arc p7 cback
arc cback p5
arc p6 e
arc e p8
arc p8 eback
arc eback p6
arc p4 join
arc p7 join
arc p8 join
arc join p9
arc p9 f
arc f p10
arc p9 g
arc g p10
final p10=1
)";

// Same net restricted by two long-term-dependency places: a commits to f and
// b commits to g.
const char* FIG6_M2 = R"(place p1 init=1
place p2
place p3
place p4
place p5
place p6
place p7
place p8
place p9
place p10
place p11
place p12
trans a label=a
trans b label=b
trans split
trans c label=c
trans cback
trans d label=d
trans dback
trans e label=e
trans eback
trans join
trans f label=f
trans g label=g
arc p1 a
arc a p2
arc p1 b
arc b p2
arc p2 split
arc split p3
arc split p5
arc split p6
arc p3 d
arc d p4
arc p4 dback
arc dback p3
arc p5 c
arc c p7
arc p7 cback
arc cback p5
arc p6 e
arc e p8
arc p8 eback
arc eback p6
arc p4 join
arc p7 join
arc p8 join
arc join p9
arc p9 f
arc f p10
arc p9 g
arc g p10
arc a p11
arc p11 f
arc b p12
arc p12 g
final p10=1
)";

// a* b as a length-one loop.
const char* FIG7A_LOOP = R"(place p1 init=1
place p2
trans a label=a
arc p1 a
arc a p1
trans b label=b
arc p1 b
arc b p2
final p2=1
)";

// The same loop unrolled to at most two executions of a.
const char* FIG7B_UNROLLED = R"(place p1 init=1
place p2
place p3
place p4
trans a1 label=a
trans a2 label=a
trans b1 label=b
trans b2 label=b
trans b3 label=b
arc p1 a1
arc a1 p2
arc p2 a2
arc a2 p3
arc p1 b1
arc b1 p4
arc p2 b2
arc b2 p4
arc p3 b3
arc b3 p4
final p4=1
)";

const char* FIG7_LOG = "1x a,b\n";

// Flower over {a,b,c}; the single place is initial and final.
const char* FIG8_FLOWER = R"(place p1 init=1
trans a label=a
arc p1 a
arc a p1
trans b label=b
arc p1 b
arc b p1
trans c label=c
arc p1 c
arc c p1
final p1=1
)";

const char* FIG8_LOG_L1 = "1x b,a,c\n1x a,a,c\n";

const char* FIG8_LOG_L2 =
    "1x b,a,c\n1x a,a,c\n"
    "1x a,b,b,b,b,b,b,b,b,b,b,b,b,b,b,b\n"
    "1x b,a,a,a,a,a,a,a,a,a,a,a,a,a,a,a\n";

const char* SEC2_EXAMPLE_LOG = "2x a,b,c\n3x b,a,c\n";

std::vector<CorpusEntry> build_entries() {
  using Kind = CorpusEntry::Kind;
  std::vector<CorpusEntry> entries = {
      {"fig2_loop_wfnet", Kind::Model, FIG2_LOOP_WFNET, "fig2", {}},
      {"fig4_model", Kind::Model, FIG4_MODEL, "fig4a", {}},
      {"fig4_log_l1",
       Kind::Log,
       FIG4_LOG_L1,
       "fig4b",
       {{"one-align-etc@fig4_model", 0.75}, {"etc@fig4_model", 0.75}}},
      {"fig4_log_l2",
       Kind::Log,
       FIG4_LOG_L2,
       "fig4c",
       {{"one-align-etc@fig4_model", 0.7143}}},
      {"fig5a_flower",
       Kind::Model,
       FIG5A_FLOWER,
       "fig5a",
       {{"one-align-etc@fig5_log", 0.3333}}},
      {"fig5b_flower_tau",
       Kind::Model,
       FIG5B_FLOWER_TAU,
       "fig5b",
       {{"one-align-etc@fig5_log", 0.5238}}},
      {"fig5c_constrained",
       Kind::Model,
       FIG5C_CONSTRAINED,
       "fig5c",
       {{"one-align-etc@fig5_log", 0.4444}}},
      {"fig5_log", Kind::Log, FIG5_LOG, "sec4.3", {}},
      {"fig6_m1", Kind::Model, FIG6_M1, "fig6", {}},
      {"fig6_m2", Kind::Model, FIG6_M2, "fig6", {}},
      {"fig6_log_template", Kind::Log, "", "sec4.4", {}},
      {"fig7a_loop",
       Kind::Model,
       FIG7A_LOOP,
       "fig7a",
       {{"pcc@fig7_log", 0.6}}},
      {"fig7b_unrolled",
       Kind::Model,
       FIG7B_UNROLLED,
       "fig7b",
       {{"pcc@fig7_log", 0.5}}},
      {"fig7_log", Kind::Log, FIG7_LOG, "sec4.5", {}},
      {"fig8_flower",
       Kind::Model,
       FIG8_FLOWER,
       "fig8",
       {{"pcc@fig8_log_l1", 0.3125}, {"pcc@fig8_log_l2", 0.2727}}},
      {"fig8_log_l1", Kind::Log, FIG8_LOG_L1, "sec4.5", {}},
      {"fig8_log_l2", Kind::Log, FIG8_LOG_L2, "sec4.5", {}},
      {"sec2_example_log", Kind::Log, SEC2_EXAMPLE_LOG, "sec2", {}},
  };
  for (auto& e : entries)
    if (e.name == "fig6_log_template")
      e.payload = serialize_log(generate_fig6_log(1, 10));
  return entries;
}

const std::vector<CorpusEntry>& entries() {
  static const std::vector<CorpusEntry> data = build_entries();
  return data;
}

}  // namespace

std::vector<std::string> list_entries() {
  std::vector<std::string> names;
  for (const auto& e : entries()) names.push_back(e.name);
  return names;
}

const CorpusEntry& get(const std::string& name) {
  for (const auto& e : entries())
    if (e.name == name) return e;
  throw UnknownNameError("no corpus entry named '" + name + "'");
}

AcceptingPetriNet model(const std::string& name) {
  const CorpusEntry& e = get(name);
  if (e.kind != CorpusEntry::Kind::Model)
    throw UnknownNameError("corpus entry '" + name + "' is a log, not a model");
  return parse_net(e.payload);
}

EventLog log(const std::string& name) {
  const CorpusEntry& e = get(name);
  if (e.kind != CorpusEntry::Kind::Log)
    throw UnknownNameError("corpus entry '" + name + "' is a model, not a log");
  return parse_log(e.payload);
}

EventLog generate_fig6_log(std::uint64_t seed, std::size_t n_traces) {
  if (n_traces < 1) throw Error("generate_fig6_log: n_traces must be >= 1");
  static const AcceptingPetriNet apn = parse_net(FIG6_M2);
  std::mt19937_64 rng(seed);
  EventLog out;
  for (std::size_t i = 0; i < n_traces; ++i) {
    Trace trace;
    while (true) {
      trace.clear();
      Marking m = apn.initial;
      bool done = false;
      for (int step = 0; step < 500; ++step) {
        if (apn.is_final(m)) {
          done = true;
          break;
        }
        auto options = enabled(apn, m);
        if (options.empty()) break;  // dead end, resample
        TransId t = options[rng() % options.size()];
        if (!apn.net.is_tau(t)) trace.push_back(apn.net.labels[t]);
        m = fire(apn, m, t);
      }
      if (done) break;
    }
    out.traces[trace] += 1;
  }
  return out;
}

}  // namespace corpus
}  // namespace precima
