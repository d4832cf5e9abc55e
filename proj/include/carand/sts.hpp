// The fifteen NIST SP 800-22 statistical tests.
//
// Every test maps a BitSequence to a TestOutcome carrying one or more
// p-values. Tests whose minimum-length (or parameter) requirements are not
// met return an outcome with applicable == false and no p-values instead of
// a fabricated number.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carand/bit_sequence.hpp"

namespace carand::sts {

enum class TestId {
  frequency,
  block_frequency,
  runs,
  longest_run,
  rank,
  dft,
  non_overlapping_template,
  overlapping_template,
  universal,
  linear_complexity,
  serial,
  approximate_entropy,
  cumulative_sums,
  random_excursions,
  random_excursions_variant,
};

inline constexpr std::array<TestId, 15> kAllTests = {
    TestId::frequency,          TestId::block_frequency,
    TestId::runs,               TestId::longest_run,
    TestId::rank,               TestId::dft,
    TestId::non_overlapping_template, TestId::overlapping_template,
    TestId::universal,          TestId::linear_complexity,
    TestId::serial,             TestId::approximate_entropy,
    TestId::cumulative_sums,    TestId::random_excursions,
    TestId::random_excursions_variant,
};

/// Stable machine key, e.g. "block_frequency".
std::string_view key(TestId id);
/// Human-readable name, e.g. "Frequency within a block".
std::string_view display_name(TestId id);
/// Inverse of key(); throws std::invalid_argument.
TestId parse_test_id(std::string_view key);

struct TestParams {
  double alpha = 0.01;
  std::size_t block_frequency_m = 128;
  std::size_t non_overlapping_m = 9;
  std::size_t overlapping_m = 9;
  std::size_t overlapping_block = 1032;
  /// 0 → chosen from n by the NIST band table.
  unsigned universal_l = 0;
  /// 0 → 10 * 2^L.
  std::size_t universal_q = 0;
  std::size_t linear_complexity_m = 500;
  std::size_t serial_m = 16;
  std::size_t apen_m = 10;
  /// false waives the minimum-length rules (for hand-sized examples).
  bool enforce_minimums = true;

  friend bool operator==(const TestParams&, const TestParams&) = default;
};

struct TestOutcome {
  TestId id = TestId::frequency;
  bool applicable = false;
  std::string note;
  std::map<std::string, double> parameters;
  std::map<std::string, double> statistics;
  std::vector<double> p_values;
  /// Set only when applicable: every p-value >= the alpha the test ran with.
  std::optional<bool> pass;

  bool passed(double alpha) const;
};

/// Number of p-values an applicable outcome carries under `params`.
std::size_t p_value_count(TestId id, const TestParams& params);

TestOutcome frequency_monobit(const BitSequence& s, const TestParams& params = {});
TestOutcome block_frequency(const BitSequence& s, const TestParams& params = {});
TestOutcome runs(const BitSequence& s, const TestParams& params = {});
TestOutcome longest_run_of_ones(const BitSequence& s, const TestParams& params = {});
TestOutcome binary_matrix_rank(const BitSequence& s, const TestParams& params = {});
TestOutcome dft_spectral(const BitSequence& s, const TestParams& params = {});
TestOutcome non_overlapping_template(const BitSequence& s, const TestParams& params = {});
TestOutcome overlapping_template(const BitSequence& s, const TestParams& params = {});
TestOutcome maurer_universal(const BitSequence& s, const TestParams& params = {});
TestOutcome linear_complexity(const BitSequence& s, const TestParams& params = {});
TestOutcome serial(const BitSequence& s, const TestParams& params = {});
TestOutcome approximate_entropy(const BitSequence& s, const TestParams& params = {});
TestOutcome cumulative_sums(const BitSequence& s, const TestParams& params = {});
TestOutcome random_excursions(const BitSequence& s, const TestParams& params = {});
TestOutcome random_excursions_variant(const BitSequence& s, const TestParams& params = {});

TestOutcome run_test(TestId id, const BitSequence& s, const TestParams& params = {});
/// All fifteen, in kAllTests order.
std::vector<TestOutcome> run_all(const BitSequence& s, const TestParams& params = {});

/// Spectral-test p-value for `below` of the n/2 peaks under the 95% threshold.
double spectral_p_value(std::size_t n, double below);

}  // namespace carand::sts
