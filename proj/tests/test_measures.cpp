#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "precima/axioms.hpp"
#include "precima/corpus.hpp"
#include "precima/measures.hpp"

using namespace precima;

namespace {

const char* SEQUENTIAL_NET = R"(place p0 init=1
place p1
place p2
place p3
trans a label=a
trans b label=b
trans c label=c
arc p0 a
arc a p1
arc p1 b
arc b p2
arc p2 c
arc c p3
final p3=1
)";

const char* DUPLICATE_LABEL_NET = R"(place p0 init=1
place p1
place p2
place pf
trans a1 label=a
trans a2 label=a
trans b1 label=b
trans b2 label=b
trans c1 label=c
arc p0 a1
arc a1 p1
arc p0 a2
arc a2 p2
arc p1 b1
arc b1 pf
arc p2 b2
arc b2 pf
arc p2 c1
arc c1 pf
final pf=1
)";

double value_of(const PrecisionReport& report) {
  REQUIRE(report.defined());
  return *report.value;
}

}  // namespace

// ---------------------------------------------------------------------------
// greco

TEST_CASE("greco is zero on any looping model") {
  for (const auto& name : {"fig4_model", "fig7a_loop", "fig8_flower"}) {
    auto report =
        greco_precision(corpus::log("fig7_log"), corpus::model(name));
    CHECK(value_of(report) == 0.0);
    CHECK(report.diagnostics.at("model_paths") == "infinite");
  }
}

TEST_CASE("greco is one when the log covers a finite language") {
  auto report = greco_precision(parse_log("1x b\n1x a,b\n2x a,a,b"),
                                corpus::model("fig7b_unrolled"));
  CHECK(value_of(report) == 1.0);
}

TEST_CASE("greco on the empty log is zero") {
  CHECK(value_of(greco_precision(parse_log(""),
                                 corpus::model("fig7b_unrolled"))) == 0.0);
}

TEST_CASE("greco respects the enumeration cap") {
  MeasureOptions opt;
  opt.trace_cap = 2;
  CHECK_THROWS_AS(greco_precision(parse_log("1x b"),
                                  corpus::model("fig7b_unrolled"), opt),
                  UndecidedError);
}

// ---------------------------------------------------------------------------
// simple behavioral appropriateness

TEST_CASE("simple-ba is one on a single-path model") {
  auto report =
      simple_ba(parse_log("1x a,b,c"), parse_net(SEQUENTIAL_NET));
  CHECK(value_of(report) == 1.0);
  CHECK(report.diagnostics.at("wf_shape") == "ok");
}

TEST_CASE("simple-ba drops below one on the flower") {
  auto report = simple_ba(corpus::log("fig5_log"), corpus::model("fig5a_flower"));
  CHECK(value_of(report) < 1.0);
  CHECK(value_of(report) == 0.0);  // three visible transitions always enabled
}

TEST_CASE("simple-ba depends on the replay path when labels repeat") {
  auto dup = parse_net(DUPLICATE_LABEL_NET);
  EventLog log = parse_log("1x a,b");
  std::set<double> values;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MeasureOptions opt;
    opt.tiebreak = Tiebreak::seeded_random(seed);
    values.insert(value_of(simple_ba(log, dup, opt)));
  }
  CHECK(values == std::set<double>{0.75, 0.875});
}

TEST_CASE("simple-ba is undefined with at most one visible transition") {
  auto apn = parse_net(
      "place p init=1\nplace q\ntrans a label=a\narc p a\narc a q\nfinal q=1\n");
  CHECK_FALSE(simple_ba(parse_log("1x a"), apn).defined());
}

TEST_CASE("simple-ba rejects non-fitting logs") {
  CHECK_THROWS_AS(
      simple_ba(parse_log("1x b"), corpus::model("fig5c_constrained")),
      PreconditionError);
}

// ---------------------------------------------------------------------------
// advanced behavioral appropriateness

TEST_CASE("advanced-ba is undefined on a deterministic sequential model") {
  auto report = advanced_ba(parse_log("1x a,b,c"), parse_net(SEQUENTIAL_NET));
  CHECK_FALSE(report.defined());
  CHECK(report.diagnostics.at("model_sometimes_follows") == "0");
}

TEST_CASE("advanced-ba cannot tell the loop net from the flower") {
  auto loop_net = corpus::model("fig2_loop_wfnet");
  auto flower = flower_model({"a", "b", "c", "d"});
  for (const char* text : {"1x a,c", "1x b,d\n1x a,c,b,c", "1x a,d,b,c"}) {
    EventLog log = parse_log(text);
    CHECK(value_of(advanced_ba(log, loop_net)) ==
          value_of(advanced_ba(log, flower)));
  }
}

TEST_CASE("advanced-ba reaches one when log relations equal the model's") {
  // Every ordered pair occurs in a two-activity trace and every activity in a
  // singleton, making all pairs sometimes-relations in the log, as on fig2.
  std::string text;
  for (const std::string x : {"a", "b", "c", "d"}) {
    text += "1x " + x + "\n";
    for (const std::string y : {"a", "b", "c", "d"})
      text += "1x " + x + "," + y + "\n";
  }
  auto report =
      advanced_ba(parse_log(text), corpus::model("fig2_loop_wfnet"));
  CHECK(value_of(report) == 1.0);
}

// ---------------------------------------------------------------------------
// escaping edges

TEST_CASE("etc reproduces the worked 6/8 example") {
  auto report =
      etc_precision(corpus::log("fig4_log_l1"), corpus::model("fig4_model"));
  CHECK(value_of(report) == 0.75);
  CHECK(report.diagnostics.at("numerator") == "6");
  CHECK(report.diagnostics.at("denominator") == "8");
}

TEST_CASE("etc on the larger log drops to 20/28") {
  auto report =
      etc_precision(corpus::log("fig4_log_l2"), corpus::model("fig4_model"));
  CHECK(value_of(report) == doctest::Approx(20.0 / 28.0).epsilon(1e-12));
}

TEST_CASE("etc is one when the log is the whole finite language") {
  auto report = etc_precision(parse_log("1x b\n1x a,b\n1x a,a,b"),
                              corpus::model("fig7b_unrolled"));
  CHECK(value_of(report) == 1.0);
}

TEST_CASE("etc counts escaping activities through tau closures") {
  auto report =
      etc_precision(corpus::log("fig5_log"), corpus::model("fig5a_flower"));
  CHECK(value_of(report) == doctest::Approx(0.25));  // 3 of 12 options seen
}

TEST_CASE("etc rejects non-fitting logs") {
  CHECK_THROWS_AS(etc_precision(parse_log("1x a,b,c,a"),
                                corpus::model("fig4_model")),
                  PreconditionError);
}

// ---------------------------------------------------------------------------
// one-align / all-align

TEST_CASE("one-align reproduces the published values") {
  auto fig4 = corpus::model("fig4_model");
  CHECK(value_of(one_align_etc(corpus::log("fig4_log_l1"), fig4)) == 0.75);
  CHECK(value_of(one_align_etc(corpus::log("fig4_log_l2"), fig4)) ==
        doctest::Approx(0.7143).epsilon(1e-4));

  EventLog log = corpus::log("fig5_log");
  CHECK(value_of(one_align_etc(log, corpus::model("fig5a_flower"))) ==
        doctest::Approx(0.3333).epsilon(1e-4));
  CHECK(value_of(one_align_etc(log, corpus::model("fig5b_flower_tau"))) ==
        doctest::Approx(0.5238).epsilon(1e-4));
  CHECK(value_of(one_align_etc(log, corpus::model("fig5c_constrained"))) ==
        doctest::Approx(0.4444).epsilon(1e-4));
}

TEST_CASE("one-align automaton sizes match the tool diagnostics") {
  EventLog log = corpus::log("fig5_log");
  auto a = one_align_etc(log, corpus::model("fig5a_flower"));
  auto b = one_align_etc(log, corpus::model("fig5b_flower_tau"));
  auto c = one_align_etc(log, corpus::model("fig5c_constrained"));
  CHECK(a.diagnostics.at("automaton_states") == "6");
  CHECK(b.diagnostics.at("automaton_states") == "12");
  CHECK(c.diagnostics.at("automaton_states") == "5");
}

TEST_CASE("one-align equals etc when no tau fires and alignments are unique") {
  auto fig4 = corpus::model("fig4_model");
  EventLog log = corpus::log("fig4_log_l1");
  CHECK(value_of(one_align_etc(log, fig4)) ==
        value_of(etc_precision(log, fig4)));
}

TEST_CASE("one-align event weighting drops the end states") {
  MeasureOptions opt;
  opt.weighting = MeasureOptions::Weighting::Events;
  auto report =
      one_align_etc(corpus::log("fig5_log"), corpus::model("fig5a_flower"), opt);
  CHECK(value_of(report) == doctest::Approx(5.0 / 14.0).epsilon(1e-12));
}

TEST_CASE("one-align depends on the alignment choice for non-fitting traces") {
  auto fig4 = corpus::model("fig4_model");
  EventLog log = parse_log("1x a,c\n1x a,c,d");
  std::set<double> values;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    MeasureOptions opt;
    opt.tiebreak = Tiebreak::seeded_random(seed);
    values.insert(value_of(one_align_etc(log, fig4, opt)));
  }
  CHECK(values == std::set<double>{0.5, 0.75});
}

TEST_CASE("all-align equals one-align when optimal alignments are unique") {
  auto fig4 = corpus::model("fig4_model");
  EventLog log = corpus::log("fig4_log_l1");
  CHECK(value_of(all_align_etc(log, fig4)) ==
        value_of(one_align_etc(log, fig4)));
  CHECK(value_of(all_align_etc(log, fig4)) == 0.75);
}

TEST_CASE("all-align averages over the optimal alignments") {
  auto fig4 = corpus::model("fig4_model");
  auto report = all_align_etc(parse_log("1x a,c\n1x a,c,d"), fig4);
  CHECK(report.diagnostics.at("optimal_alignments") == "3");
  CHECK(value_of(report) == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("all-align overflows on a tiny cap") {
  MeasureOptions opt;
  opt.align_cap = 2;
  CHECK_THROWS_AS(all_align_etc(corpus::log("fig5_log"),
                                corpus::model("fig5a_flower"), opt),
                  EnumerationOverflowError);
}

// ---------------------------------------------------------------------------
// negative events

TEST_CASE("negative-event precision on a two-activity flower") {
  auto flower = flower_model({"a", "b"});
  auto report = negative_event_precision(parse_log("1x a"), flower);
  // b never occurs, so it is a full-confidence negative and the only false
  // positive; a is the only true positive.
  CHECK(value_of(report) == 0.5);
  CHECK(value_of(report) < 1.0);
}

TEST_CASE("negative-event precision is one when the model enables only the "
          "observed activity") {
  auto report = negative_event_precision(parse_log("1x a,b,c"),
                                         parse_net(SEQUENTIAL_NET));
  CHECK(value_of(report) == 1.0);
}

TEST_CASE("negative-event deterministic mode is a pure function") {
  EventLog log = corpus::generate_fig6_log(3, 10);
  auto m1 = corpus::model("fig6_m1");
  auto first = negative_event_precision(log, m1);
  auto second = negative_event_precision(log, m1);
  CHECK(first.to_text() == second.to_text());
}

TEST_CASE("negative-event sampling varies by seed but not per seed") {
  EventLog log = corpus::generate_fig6_log(1, 10);
  auto m1 = corpus::model("fig6_m1");
  std::set<double> values;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    MeasureOptions opt;
    opt.negative_mode = MeasureOptions::NegativeEventMode::Sampled;
    opt.seed = seed;
    double v = value_of(negative_event_precision(log, m1, opt));
    CHECK(v == value_of(negative_event_precision(log, m1, opt)));
    values.insert(v);
  }
  CHECK(values.size() > 1);
}

TEST_CASE("negative-event rejects non-fitting logs") {
  CHECK_THROWS_AS(negative_event_precision(parse_log("1x b"),
                                           corpus::model("fig5c_constrained")),
                  PreconditionError);
}

// ---------------------------------------------------------------------------
// pcc

TEST_CASE("pcc separates the loop from its unrolling") {
  EventLog log = corpus::log("fig7_log");
  CHECK(value_of(pcc_precision(log, corpus::model("fig7a_loop"))) ==
        doctest::Approx(0.6).epsilon(1e-12));
  CHECK(value_of(pcc_precision(log, corpus::model("fig7b_unrolled"))) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pcc flower values at full-alphabet projection") {
  MeasureOptions opt;
  opt.k = 3;
  auto flower = corpus::model("fig8_flower");
  CHECK(value_of(pcc_precision(corpus::log("fig8_log_l1"), flower, opt)) ==
        0.3125);
  CHECK(value_of(pcc_precision(corpus::log("fig8_log_l2"), flower, opt)) ==
        doctest::Approx(3.0 / 11.0).epsilon(1e-12));
}

TEST_CASE("pcc is one when the log automaton equals the model automaton") {
  auto report = pcc_precision(parse_log("1x b\n1x a,b\n1x a,a,b"),
                              corpus::model("fig7b_unrolled"));
  CHECK(value_of(report) == 1.0);
}

TEST_CASE("pcc silently truncates k to the alphabet size") {
  EventLog log = corpus::log("fig7_log");
  MeasureOptions big;
  big.k = 64;
  auto truncated = pcc_precision(log, corpus::model("fig7a_loop"), big);
  auto exact = pcc_precision(log, corpus::model("fig7a_loop"));
  CHECK(value_of(truncated) == value_of(exact));
  CHECK(truncated.options.at("k") == "2");
}

TEST_CASE("pcc refuses unbounded nets") {
  auto apn = parse_net(
      "place p init=1\n"
      "trans gen label=a\n"
      "arc gen p\n"
      "final p=1\n");
  CHECK_THROWS_AS(pcc_precision(parse_log("1x a"), apn), UnboundedNetError);
}

// ---------------------------------------------------------------------------
// report plumbing and global properties

TEST_CASE("every defined value lies in the unit interval") {
  const std::vector<std::string> models = {"fig4_model", "fig5a_flower",
                                           "fig7a_loop", "fig7b_unrolled",
                                           "fig8_flower"};
  const std::vector<std::string> logs = {"fig4_log_l1", "fig5_log", "fig7_log",
                                         "fig8_log_l1"};
  for (const auto& handle : measure_registry()) {
    for (const auto& model_name : models) {
      for (const auto& log_name : logs) {
        try {
          auto report = handle.eval(corpus::log(log_name),
                                    corpus::model(model_name), {});
          if (report.defined()) {
            CHECK(*report.value >= 0.0);
            CHECK(*report.value <= 1.0);
          }
        } catch (const Error&) {
          // preconditions and budgets are allowed to fire here
        }
      }
    }
  }
}

TEST_CASE("reports serialize deterministically") {
  auto report =
      pcc_precision(corpus::log("fig7_log"), corpus::model("fig7a_loop"));
  CHECK(report.to_text() ==
        pcc_precision(corpus::log("fig7_log"), corpus::model("fig7a_loop"))
            .to_text());
  CHECK(report.to_text().find("value=0.6000") != std::string::npos);
  CHECK(report.to_record().front() == '{');
  CHECK(report.to_record().find("\"measure\":\"pcc\"") != std::string::npos);
}
