// Running the statistical tests over many streams and reducing the results
// with the two NIST final-analysis criteria: the proportion of passing
// streams and the uniformity of the p-values.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carand/bit_sequence.hpp"
#include "carand/bitio.hpp"
#include "carand/keystream.hpp"
#include "carand/sts.hpp"

namespace carand {

struct BatteryConfig {
  std::vector<int> rules = {30, 54, 73, 110};
  std::size_t stream_length = 1'000'000;
  std::size_t streams = 10;
  double alpha = 0.01;
  double uniformity_threshold = 1e-4;
  /// Per-test parameters; its alpha is overridden by `alpha` above.
  sts::TestParams params;

  /// Throws std::invalid_argument.
  void validate() const;
  sts::TestParams test_params() const;

  friend bool operator==(const BatteryConfig&, const BatteryConfig&) = default;
};

enum class Verdict { approved, rejected, inapplicable };

/// "A", "R", "—" (the text matrix symbols).
std::string_view symbol(Verdict v);
/// "A", "R", "inapplicable".
std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// Acceptable pass proportion (1-α) ± 3 sqrt(α(1-α)/m).
struct ProportionBand {
  double lower = 0;
  double upper = 0;
  bool contains(double p) const { return p >= lower && p <= upper; }
  friend bool operator==(const ProportionBand&, const ProportionBand&) = default;
};
ProportionBand proportion_band(double alpha, std::size_t m);

/// Ten equal bins on [0, 1); p = 1 lands in the last bin.
std::array<std::size_t, 10> uniformity_histogram(std::span<const double> p_values);
/// igamc(9/2, χ²/2) for the ten-bin histogram.
double uniformity_p_value(std::span<const double> p_values);

struct Aggregate {
  std::size_t count = 0;
  std::size_t passed = 0;
  double proportion = 0;
  ProportionBand band;
  bool proportion_ok = false;
  double uniformity_p = 0;
  bool uniformity_ok = false;

  bool approved() const { return proportion_ok && uniformity_ok; }
  friend bool operator==(const Aggregate&, const Aggregate&) = default;
};

/// Both criteria over one set of p-values. Throws std::invalid_argument for
/// fewer than two values.
Aggregate aggregate(std::span<const double> p_values, double alpha, double uniformity_threshold);

struct TestSummary {
  sts::TestId id = sts::TestId::frequency;
  Verdict verdict = Verdict::inapplicable;
  std::size_t applicable_streams = 0;
  /// Pooled over every (stream, sub-test) p-value.
  double proportion = 0;
  ProportionBand band;
  /// Median of the sub-test uniformity p-values.
  double uniformity_p = 0;
  std::string note;
  /// One per p-value position (148 for the non-overlapping template test).
  std::vector<Aggregate> subtests;
  /// p_values[stream]; empty for streams where the test was inapplicable.
  std::vector<std::vector<double>> stream_p_values;

  friend bool operator==(const TestSummary&, const TestSummary&) = default;
};

struct RuleReport {
  int rule = 0;
  /// False when the battery could not run (e.g. corpus too short).
  bool complete = false;
  std::string error;
  std::vector<TestSummary> tests;

  std::size_t count(Verdict v) const;
  friend bool operator==(const RuleReport&, const RuleReport&) = default;
};

struct BatteryReport {
  BatteryConfig config;
  std::vector<RuleReport> rules;

  bool complete() const;
  friend bool operator==(const BatteryReport&, const BatteryReport&) = default;
};

/// Supplies stream i (of config.streams), each config.stream_length bits.
using StreamProvider = std::function<BitSequence(std::size_t)>;

/// Reduces per-stream outcomes of one test to its summary.
TestSummary summarize(sts::TestId id, std::span<const sts::TestOutcome> per_stream,
                      const BatteryConfig& config);

/// Runs every test on every stream. Work is split by stream; the report is
/// the same for any `jobs`.
RuleReport run_streams(int rule, const StreamProvider& streams, const BatteryConfig& config,
                       std::size_t jobs = 1);

/// Carves the first streams × stream_length bits of the corpus into streams.
/// A corpus that is too short yields complete == false.
RuleReport run_battery(const BitSequence& corpus, int rule, const BatteryConfig& config,
                       std::size_t jobs = 1);

struct RuleCorpus {
  int rule = 0;
  BitSequence bits;
};

BatteryReport run_battery(std::span<const RuleCorpus> corpora, const BatteryConfig& config,
                          std::size_t jobs = 1);

/// Reference generator for calibration: stream i is drawn from
/// std::mt19937_64 seeded with seed + i, each 64-bit output LSB first.
BitSequence reference_stream(std::uint64_t seed, std::size_t index, std::size_t bits);

struct ReproduceConfig {
  GenSpec spec;  ///< rule and master_seed are set per corpus
  BatteryConfig battery;
  std::size_t repeats = 3;
  /// When non-empty each corpus is also written here with its manifest.
  std::filesystem::path corpus_dir;
  BitFormat corpus_format = BitFormat::packed;
};

struct ReproduceBundle {
  std::vector<BatteryReport> repeats;
  /// Per cell the most frequent verdict across repeats; ties resolve to R.
  BatteryReport modal;
  /// Per repeat: first rule's A count strictly above every other rule's.
  std::vector<bool> ordering;

  bool ordering_holds() const;
  friend bool operator==(const ReproduceBundle&, const ReproduceBundle&) = default;
};

/// Master seed of corpus `rule_index` in repeat `repeat`:
/// rule_index + rule_count * repeat (seeds 0..3 in the first repeat of four rules).
std::uint64_t reproduce_seed(std::size_t rule_index, std::size_t repeat, std::size_t rule_count);

/// Generates one corpus per rule and repeat, runs the battery on each and
/// reduces the repeats to modal verdicts.
ReproduceBundle reproduce_paper(const ReproduceConfig& config, std::size_t jobs = 1);

/// Modal verdict per (rule, test); numbers are taken from the first repeat
/// agreeing with the mode, without per-stream p-values.
BatteryReport modal_report(std::span<const BatteryReport> repeats);

}  // namespace carand
