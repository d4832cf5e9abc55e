#include "carand/battery.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <random>
#include <stdexcept>

#include "carand/numerics.hpp"
#include "carand/parallel.hpp"

namespace carand {

void BatteryConfig::validate() const {
  if (streams < 2) throw std::invalid_argument("battery needs at least 2 streams");
  if (stream_length == 0) throw std::invalid_argument("stream length must be positive");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
  if (!(uniformity_threshold >= 0.0 && uniformity_threshold < 1.0)) {
    throw std::invalid_argument("uniformity threshold must be in [0, 1)");
  }
}

sts::TestParams BatteryConfig::test_params() const {
  auto p = params;
  p.alpha = alpha;
  return p;
}

std::string_view symbol(Verdict v) {
  switch (v) {
    case Verdict::approved: return "A";
    case Verdict::rejected: return "R";
    case Verdict::inapplicable: return "—";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  return v == Verdict::inapplicable ? "inapplicable" : symbol(v);
}

Verdict parse_verdict(std::string_view text) {
  if (text == "A") return Verdict::approved;
  if (text == "R") return Verdict::rejected;
  if (text == "inapplicable" || text == "—") return Verdict::inapplicable;
  throw std::invalid_argument("unknown verdict '" + std::string(text) + "'");
}

ProportionBand proportion_band(double alpha, std::size_t m) {
  if (m == 0) throw std::invalid_argument("proportion band needs m > 0");
  const double centre = 1.0 - alpha;
  const double half = 3.0 * std::sqrt(alpha * (1.0 - alpha) / static_cast<double>(m));
  return {centre - half, centre + half};
}

std::array<std::size_t, 10> uniformity_histogram(std::span<const double> p_values) {
  std::array<std::size_t, 10> bins{};
  for (double p : p_values) {
    const auto b = static_cast<std::size_t>(std::clamp(p, 0.0, 1.0) * 10.0);
    ++bins[std::min<std::size_t>(b, 9)];
  }
  return bins;
}

double uniformity_p_value(std::span<const double> p_values) {
  if (p_values.empty()) throw std::invalid_argument("uniformity of an empty set");
  const auto bins = uniformity_histogram(p_values);
  const double expected = static_cast<double>(p_values.size()) / 10.0;
  double chi2 = 0.0;
  for (auto f : bins) {
    const double d = static_cast<double>(f) - expected;
    chi2 += d * d / expected;
  }
  return numerics::igamc(4.5, chi2 / 2.0);
}

Aggregate aggregate(std::span<const double> p_values, double alpha, double uniformity_threshold) {
  if (p_values.size() < 2) throw std::invalid_argument("aggregate needs at least two p-values");
  Aggregate a;
  a.count = p_values.size();
  a.passed = static_cast<std::size_t>(
      std::count_if(p_values.begin(), p_values.end(), [alpha](double p) { return p >= alpha; }));
  a.proportion = static_cast<double>(a.passed) / static_cast<double>(a.count);
  a.band = proportion_band(alpha, a.count);
  a.proportion_ok = a.band.contains(a.proportion);
  a.uniformity_p = uniformity_p_value(p_values);
  a.uniformity_ok = a.uniformity_p >= uniformity_threshold;
  return a;
}

std::size_t RuleReport::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(tests.begin(), tests.end(), [v](const TestSummary& t) { return t.verdict == v; }));
}

bool BatteryReport::complete() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleReport& r) { return r.complete; });
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2.0;
}

RuleReport incomplete(int rule, std::string why) {
  RuleReport r;
  r.rule = rule;
  r.complete = false;
  r.error = why;
  for (auto id : sts::kAllTests) {
    TestSummary t;
    t.id = id;
    t.note = why;
    r.tests.push_back(std::move(t));
  }
  return r;
}

}  // namespace

TestSummary summarize(sts::TestId id, std::span<const sts::TestOutcome> per_stream,
                      const BatteryConfig& config) {
  TestSummary s;
  s.id = id;
  s.stream_p_values.reserve(per_stream.size());
  std::size_t width = 0;
  for (const auto& o : per_stream) {
    if (o.id != id) throw std::invalid_argument("outcome for a different test");
    if (!o.applicable) {
      s.stream_p_values.emplace_back();
      if (s.note.empty()) s.note = o.note;
      continue;
    }
    if (s.applicable_streams++ == 0) {
      width = o.p_values.size();
    } else if (o.p_values.size() != width) {
      throw std::logic_error("streams disagree on the number of p-values");
    }
    s.stream_p_values.push_back(o.p_values);
  }
  if (s.applicable_streams < 2 || width == 0) {
    s.verdict = Verdict::inapplicable;
    if (s.note.empty()) s.note = "fewer than two applicable streams";
    return s;
  }
  s.note.clear();

  std::size_t pooled_pass = 0, pooled_count = 0;
  std::vector<double> column;
  std::vector<double> uniformities;
  column.reserve(s.applicable_streams);
  for (std::size_t j = 0; j < width; ++j) {
    column.clear();
    for (const auto& p : s.stream_p_values) {
      if (!p.empty()) column.push_back(p[j]);
    }
    auto a = aggregate(column, config.alpha, config.uniformity_threshold);
    pooled_pass += a.passed;
    pooled_count += a.count;
    uniformities.push_back(a.uniformity_p);
    s.subtests.push_back(a);
  }
  s.proportion = static_cast<double>(pooled_pass) / static_cast<double>(pooled_count);
  s.band = proportion_band(config.alpha, s.applicable_streams);
  s.uniformity_p = median(std::move(uniformities));
  s.verdict = s.band.contains(s.proportion) && s.uniformity_p >= config.uniformity_threshold
                  ? Verdict::approved
                  : Verdict::rejected;
  return s;
}

RuleReport run_streams(int rule, const StreamProvider& streams, const BatteryConfig& config,
                       std::size_t jobs) {
  config.validate();
  const auto params = config.test_params();
  constexpr std::size_t kTests = sts::kAllTests.size();

  // Results go into buffers sized up front. Keeping each stream's full
  // TestOutcome alive interleaves small long-lived blocks with the
  // multi-megabyte temporaries of the next stream, and the heap then grows
  // by several MB per stream (fatal at 1000 streams).
  std::array<std::size_t, kTests> width{};
  std::array<std::vector<double>, kTests> p_values;
  std::array<std::vector<std::uint8_t>, kTests> applicable;
  std::array<std::pair<std::size_t, std::string>, kTests> first_note;
  for (std::size_t t = 0; t < kTests; ++t) {
    width[t] = sts::p_value_count(sts::kAllTests[t], params);
    p_values[t].assign(config.streams * width[t], 0.0);
    applicable[t].assign(config.streams, 0);
    first_note[t] = {config.streams, {}};
    first_note[t].second.reserve(128);
  }
  std::mutex note_mutex;

  parallel_for(config.streams, jobs, [&](std::size_t i) {
    const BitSequence bits = streams(i);
    if (bits.size() != config.stream_length) throw std::length_error("stream has the wrong length");
    const auto outcomes = sts::run_all(bits, params);
    for (std::size_t t = 0; t < kTests; ++t) {
      const auto& o = outcomes[t];
      if (o.applicable) {
        if (o.p_values.size() != width[t]) throw std::logic_error("unexpected number of p-values");
        std::copy(o.p_values.begin(), o.p_values.end(), p_values[t].begin() + static_cast<std::ptrdiff_t>(i * width[t]));
        applicable[t][i] = 1;
      } else {
        std::lock_guard lock(note_mutex);
        if (i < first_note[t].first) first_note[t] = {i, o.note};
      }
    }
  });

  RuleReport report;
  report.rule = rule;
  report.complete = true;
  std::vector<sts::TestOutcome> column(config.streams);
  for (std::size_t t = 0; t < kTests; ++t) {
    for (std::size_t i = 0; i < config.streams; ++i) {
      auto& o = column[i];
      o = sts::TestOutcome{};
      o.id = sts::kAllTests[t];
      o.applicable = applicable[t][i] != 0;
      if (o.applicable) {
        const auto* first = p_values[t].data() + i * width[t];
        o.p_values.assign(first, first + width[t]);
      } else {
        o.note = first_note[t].second;
      }
    }
    report.tests.push_back(summarize(sts::kAllTests[t], column, config));
  }
  return report;
}

RuleReport run_battery(const BitSequence& corpus, int rule, const BatteryConfig& config,
                       std::size_t jobs) {
  config.validate();
  const std::size_t needed = config.streams * config.stream_length;
  if (corpus.size() < needed) {
    return incomplete(rule, "corpus has " + std::to_string(corpus.size()) + " bits, battery needs " +
                                std::to_string(needed));
  }
  return run_streams(
      rule, [&](std::size_t i) { return corpus.slice(i * config.stream_length, config.stream_length); },
      config, jobs);
}

BatteryReport run_battery(std::span<const RuleCorpus> corpora, const BatteryConfig& config,
                          std::size_t jobs) {
  BatteryReport report;
  report.config = config;
  report.config.rules.clear();
  for (const auto& c : corpora) {
    report.config.rules.push_back(c.rule);
    report.rules.push_back(run_battery(c.bits, c.rule, config, jobs));
  }
  return report;
}

BitSequence reference_stream(std::uint64_t seed, std::size_t index, std::size_t bits) {
  std::mt19937_64 gen(seed + index);
  std::vector<std::uint8_t> out(bits);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < bits; ++i) {
    if (i % 64 == 0) word = gen();
    out[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1U);
  }
  return BitSequence(std::move(out));
}

bool ReproduceBundle::ordering_holds() const {
  return !ordering.empty() && std::all_of(ordering.begin(), ordering.end(), [](bool b) { return b; });
}

std::uint64_t reproduce_seed(std::size_t rule_index, std::size_t repeat, std::size_t rule_count) {
  return static_cast<std::uint64_t>(rule_index) + static_cast<std::uint64_t>(rule_count) * repeat;
}

BatteryReport modal_report(std::span<const BatteryReport> repeats) {
  if (repeats.empty()) throw std::invalid_argument("modal report of no repeats");
  BatteryReport modal;
  modal.config = repeats.front().config;
  for (std::size_t r = 0; r < repeats.front().rules.size(); ++r) {
    RuleReport rule;
    rule.rule = repeats.front().rules[r].rule;
    rule.complete = true;
    for (const auto& rep : repeats) {
      if (rep.rules.size() != repeats.front().rules.size() || rep.rules[r].rule != rule.rule) {
        throw std::invalid_argument("repeats cover different rules");
      }
      if (!rep.rules[r].complete) {
        rule.complete = false;
        if (rule.error.empty()) rule.error = rep.rules[r].error;
      }
    }
    for (std::size_t t = 0; t < sts::kAllTests.size(); ++t) {
      std::array<std::size_t, 3> votes{};
      for (const auto& rep : repeats) ++votes[static_cast<std::size_t>(rep.rules[r].tests.at(t).verdict)];
      const auto top = *std::max_element(votes.begin(), votes.end());
      Verdict mode = Verdict::rejected;
      if (std::count(votes.begin(), votes.end(), top) == 1) {
        mode = static_cast<Verdict>(std::max_element(votes.begin(), votes.end()) - votes.begin());
      }
      const TestSummary* source = &repeats.front().rules[r].tests[t];
      for (const auto& rep : repeats) {
        if (rep.rules[r].tests[t].verdict == mode) {
          source = &rep.rules[r].tests[t];
          break;
        }
      }
      TestSummary cell = *source;
      cell.verdict = mode;
      cell.stream_p_values.clear();
      rule.tests.push_back(std::move(cell));
    }
    modal.rules.push_back(std::move(rule));
  }
  return modal;
}

ReproduceBundle reproduce_paper(const ReproduceConfig& config, std::size_t jobs) {
  if (config.repeats == 0) throw std::invalid_argument("reproduce needs at least one repeat");
  config.battery.validate();
  const auto& rules = config.battery.rules;
  if (!config.corpus_dir.empty()) std::filesystem::create_directories(config.corpus_dir);

  ReproduceBundle bundle;
  for (std::size_t rep = 0; rep < config.repeats; ++rep) {
    BatteryReport report;
    report.config = config.battery;
    for (std::size_t k = 0; k < rules.size(); ++k) {
      GenSpec spec = config.spec;
      spec.rule = rules[k];
      spec.master_seed = reproduce_seed(k, rep, rules.size());
      const BitSequence corpus = generate_corpus_bits(spec, jobs);
      if (!config.corpus_dir.empty()) {
        const auto name = "rule" + std::to_string(spec.rule) + "_rep" + std::to_string(rep) +
                          (config.corpus_format == BitFormat::ascii ? ".txt" : ".bits");
        write_corpus(spec, corpus, config.corpus_dir / name, config.corpus_format);
      }
      report.rules.push_back(run_battery(corpus, spec.rule, config.battery, jobs));
    }
    bool ordered = true;
    if (!report.rules.empty()) {
      const auto lead = report.rules.front().count(Verdict::approved);
      for (std::size_t k = 1; k < report.rules.size(); ++k) {
        ordered = ordered && lead > report.rules[k].count(Verdict::approved);
      }
    }
    bundle.ordering.push_back(ordered);
    bundle.repeats.push_back(std::move(report));
  }
  bundle.modal = modal_report(bundle.repeats);
  return bundle;
}

}  // namespace carand
