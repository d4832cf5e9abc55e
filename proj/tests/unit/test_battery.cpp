#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "carand/battery.hpp"

namespace carand {
namespace {

BatteryConfig small_config() {
  BatteryConfig c;
  c.stream_length = 20000;
  c.streams = 6;
  return c;
}

TEST(ProportionBand, DefaultsAndCalibrationBand) {
  const auto b10 = proportion_band(0.01, 10);
  EXPECT_NEAR(b10.lower, 0.99 - 3 * std::sqrt(0.0099 / 10), 1e-15);
  const auto b1000 = proportion_band(0.01, 1000);
  EXPECT_NEAR(b1000.lower, 0.9806, 1e-4);
  EXPECT_NEAR(b1000.upper, 0.9994, 1e-4);
}

TEST(Aggregate, AllPassing) {
  const std::vector<double> p = {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85, 0.95};
  const auto a = aggregate(p, 0.01, 1e-4);
  EXPECT_EQ(a.passed, 10u);
  EXPECT_DOUBLE_EQ(a.proportion, 1.0);
  EXPECT_TRUE(a.proportion_ok);
  EXPECT_NEAR(a.uniformity_p, 1.0, 1e-12);  // one value per bin
  EXPECT_TRUE(a.approved());
}

TEST(Aggregate, AllFailing) {
  const std::vector<double> p(10, 0.005);
  const auto a = aggregate(p, 0.01, 1e-4);
  EXPECT_DOUBLE_EQ(a.proportion, 0.0);
  EXPECT_FALSE(a.proportion_ok);
  EXPECT_FALSE(a.approved());
}

TEST(Aggregate, ThousandUniformValues) {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> p(1000);
  for (auto& v : p) v = u(gen);
  const auto a = aggregate(p, 0.01, 1e-4);
  EXPECT_GT(a.uniformity_p, 1e-4);
  EXPECT_TRUE(a.proportion_ok);
}

TEST(Aggregate, ErrorsAndBins) {
  EXPECT_THROW(aggregate(std::vector<double>{}, 0.01, 1e-4), std::invalid_argument);
  EXPECT_THROW(aggregate(std::vector<double>{0.5}, 0.01, 1e-4), std::invalid_argument);
  const std::vector<double> edges = {0.0, 0.1, 0.0999, 0.9, 1.0};
  const auto h = uniformity_histogram(edges);
  EXPECT_EQ(h[0], 2u);
  EXPECT_EQ(h[1], 1u);
  EXPECT_EQ(h[9], 2u);
  // Ten values in one bin: χ² = 90.
  const std::vector<double> clumped(10, 0.95);
  EXPECT_NEAR(uniformity_p_value(clumped), 1.628070471965621e-15, 1e-25);
}

TEST(Aggregate, RaisingAlphaNeverTurnsFailIntoPass) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 0.2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(10);
    for (auto& v : p) v = u(gen);
    std::size_t previous = p.size() + 1;
    for (double alpha = 0.001; alpha < 0.2; alpha += 0.001) {
      const auto a = aggregate(p, alpha, 1e-4);
      // Per stream: each p that fails at alpha fails at any larger alpha.
      EXPECT_LE(a.passed, previous);
      previous = a.passed;
    }
  }
}

TEST(Verdict, Symbols) {
  EXPECT_EQ(symbol(Verdict::approved), "A");
  EXPECT_EQ(symbol(Verdict::rejected), "R");
  EXPECT_EQ(symbol(Verdict::inapplicable), "—");
  for (auto v : {Verdict::approved, Verdict::rejected, Verdict::inapplicable}) {
    EXPECT_EQ(parse_verdict(to_string(v)), v);
  }
}

TEST(Summarize, PoolsSubtestsAndSkipsInapplicableStreams) {
  BatteryConfig c;
  std::vector<sts::TestOutcome> per_stream(4);
  for (std::size_t i = 0; i < 4; ++i) {
    per_stream[i].id = sts::TestId::serial;
    per_stream[i].applicable = i != 2;
    if (per_stream[i].applicable) per_stream[i].p_values = {0.2 + 0.1 * i, i == 0 ? 0.001 : 0.5};
  }
  const auto s = summarize(sts::TestId::serial, per_stream, c);
  EXPECT_EQ(s.applicable_streams, 3u);
  ASSERT_EQ(s.subtests.size(), 2u);
  EXPECT_EQ(s.subtests[0].passed, 3u);
  EXPECT_EQ(s.subtests[1].passed, 2u);
  EXPECT_NEAR(s.proportion, 5.0 / 6.0, 1e-15);
  EXPECT_TRUE(s.stream_p_values[2].empty());
  EXPECT_EQ(s.band, proportion_band(0.01, 3));
}

TEST(Summarize, FewerThanTwoApplicableIsInapplicable) {
  BatteryConfig c;
  std::vector<sts::TestOutcome> per_stream(3);
  for (auto& o : per_stream) {
    o.id = sts::TestId::random_excursions;
    o.note = "too few cycles";
  }
  per_stream[0].applicable = true;
  per_stream[0].p_values = std::vector<double>(8, 0.5);
  const auto s = summarize(sts::TestId::random_excursions, per_stream, c);
  EXPECT_EQ(s.verdict, Verdict::inapplicable);
  EXPECT_TRUE(s.subtests.empty());
}

TEST(RunBattery, CorpusTooShortIsIncomplete) {
  const auto c = small_config();
  const BitSequence corpus(c.stream_length * c.streams - 1, 1);
  const auto r = run_battery(corpus, 30, c);
  EXPECT_FALSE(r.complete);
  EXPECT_FALSE(r.error.empty());
  ASSERT_EQ(r.tests.size(), 15u);
  for (const auto& t : r.tests) EXPECT_EQ(t.verdict, Verdict::inapplicable);
}

TEST(RunBattery, AllZeroCorpusRejectsEveryApplicableTest) {
  BatteryConfig c;
  c.streams = 3;
  const BitSequence corpus(c.stream_length * c.streams, 0);
  const auto r = run_battery(corpus, 0, c);
  EXPECT_TRUE(r.complete);
  std::size_t applicable = 0;
  for (const auto& t : r.tests) {
    EXPECT_NE(t.verdict, Verdict::approved) << sts::key(t.id);
    applicable += t.verdict != Verdict::inapplicable;
  }
  EXPECT_GE(applicable, 13u);
}

TEST(RunBattery, ReferenceStreamsApproveAtDeskScale) {
  BatteryConfig c;
  c.streams = 4;
  const auto r = run_streams(
      -1, [&](std::size_t i) { return reference_stream(77, i, c.stream_length); }, c, 1);
  for (const auto& t : r.tests) {
    EXPECT_NE(t.verdict, Verdict::rejected) << sts::key(t.id);
  }
  EXPECT_GE(r.count(Verdict::approved), 13u);
}

TEST(RunBattery, DeterministicAcrossJobCounts) {
  auto c = small_config();
  GenSpec spec;
  spec.sequences = 12;
  const auto corpus = generate_corpus_bits(spec);
  const auto one = run_battery(corpus, 30, c, 1);
  const auto many = run_battery(corpus, 30, c, 3);
  EXPECT_EQ(one, many);
  EXPECT_EQ(one, run_battery(corpus, 30, c, 1));
  // Matrix completeness: 15 cells, each exactly one verdict.
  ASSERT_EQ(one.tests.size(), 15u);
  for (std::size_t i = 0; i < 15; ++i) EXPECT_EQ(one.tests[i].id, sts::kAllTests[i]);
  for (const auto& t : one.tests) EXPECT_EQ(t.stream_p_values.size(), c.streams);
}

TEST(ReferenceStream, LsbFirstMt19937) {
  std::mt19937_64 gen(5 + 2);
  const auto w = gen();
  const auto s = reference_stream(5, 2, 70);
  for (unsigned i = 0; i < 64; ++i) EXPECT_EQ(s[i], (w >> i) & 1U);
  EXPECT_EQ(s.size(), 70u);
}

TEST(Config, Validation) {
  BatteryConfig c;
  EXPECT_NO_THROW(c.validate());
  c.streams = 1;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.streams = 10;
  c.alpha = 0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
}

BatteryReport fake_report(std::vector<std::vector<Verdict>> cells) {
  BatteryReport r;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    RuleReport rule;
    rule.rule = static_cast<int>(k);
    rule.complete = true;
    for (std::size_t t = 0; t < 15; ++t) {
      TestSummary s;
      s.id = sts::kAllTests[t];
      s.verdict = cells[k][t % cells[k].size()];
      s.stream_p_values = {{0.5}};
      rule.tests.push_back(s);
    }
    r.rules.push_back(rule);
  }
  return r;
}

TEST(Modal, MajorityAndTieBreak) {
  using V = Verdict;
  const std::vector<BatteryReport> reps = {
      fake_report({{V::approved}}), fake_report({{V::approved}}), fake_report({{V::rejected}})};
  auto m = modal_report(reps);
  EXPECT_EQ(m.rules[0].count(V::approved), 15u);
  EXPECT_TRUE(m.rules[0].tests[0].stream_p_values.empty());

  const std::vector<BatteryReport> split = {
      fake_report({{V::approved}}), fake_report({{V::inapplicable}}), fake_report({{V::rejected}})};
  m = modal_report(split);
  EXPECT_EQ(m.rules[0].count(V::rejected), 15u);

  const std::vector<BatteryReport> two = {fake_report({{V::approved}}), fake_report({{V::inapplicable}})};
  EXPECT_EQ(modal_report(two).rules[0].count(V::rejected), 15u);

  const std::vector<BatteryReport> single = {fake_report({{V::approved, V::rejected}})};
  EXPECT_EQ(modal_report(single).rules[0].tests[1].verdict, V::rejected);
  EXPECT_THROW(modal_report(std::vector<BatteryReport>{}), std::invalid_argument);
}

TEST(Reproduce, SeedsAndSmallRun) {
  EXPECT_EQ(reproduce_seed(0, 0, 4), 0u);
  EXPECT_EQ(reproduce_seed(3, 0, 4), 3u);
  EXPECT_EQ(reproduce_seed(1, 2, 4), 9u);

  ReproduceConfig cfg;
  cfg.spec.sequences = 20;
  cfg.battery = small_config();
  cfg.battery.rules = {30, 0};
  cfg.repeats = 1;
  const auto bundle = reproduce_paper(cfg);
  ASSERT_EQ(bundle.repeats.size(), 1u);
  EXPECT_EQ(bundle.modal.rules.size(), 2u);
  EXPECT_EQ(bundle.modal.rules[0].tests, [&] {
    auto tests = bundle.repeats[0].rules[0].tests;
    for (auto& t : tests) t.stream_p_values.clear();
    return tests;
  }());
  EXPECT_TRUE(bundle.ordering_holds());
  EXPECT_EQ(bundle, reproduce_paper(cfg));
}

}  // namespace
}  // namespace carand
