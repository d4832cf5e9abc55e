// Reference distributions for the statistical tests. Where a closed form
// or a small dynamic program exists it is provided next to the literal
// table so the literals can be recomputed.

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace carand::sts::tables {

/// Longest-run test configuration for one band of sequence lengths.
/// Category 0 collects runs <= low, the last category runs >= high.
struct LongestRunBand {
  std::size_t min_length;
  std::size_t block;
  unsigned low;
  unsigned high;
  std::span<const double> probabilities;
};

std::span<const LongestRunBand> longest_run_bands();
/// Band for sequence length n, or nullptr when n < 128.
const LongestRunBand* longest_run_band(std::size_t n);

/// Exact category probabilities of the longest run of ones in `block`
/// fair bits: P(run <= low), P(run = low+1), ..., P(run >= high).
std::vector<double> longest_run_probabilities(std::size_t block, unsigned low, unsigned high);

/// Exact probabilities that a `block`-bit fair sequence holds 0, 1, ...,
/// categories-1, >= categories-1 overlapping occurrences of the all-ones
/// m-bit template (windows lying fully inside the block). Returns
/// `categories` values.
std::vector<double> overlapping_probabilities(std::size_t block, unsigned m, unsigned categories);

/// Probability that a random rows x cols GF(2) matrix has rank r.
double rank_probability(unsigned r, unsigned rows, unsigned cols);

/// Maurer block length L for sequence length n (0 when n < 387840).
unsigned universal_block_length(std::size_t n);
/// Expected value and variance of the per-block log2 gap statistic,
/// L = 1..16. E(L) = 2^-L Σ_{i>=1} (1 - 2^-L)^{i-1} log2 i.
double universal_expected(unsigned L);
double universal_variance(unsigned L);

/// Probability that a walk cycle visits state x exactly k times, k = 0..4,
/// and >= 5 times at index 5:
///   π_0(x) = 1 - 1/(2|x|)
///   π_k(x) = 1/(4x²) (1 - 1/(2|x|))^{k-1},  k = 1..4
///   π_5(x) = 1/(2|x|) (1 - 1/(2|x|))^4
std::span<const double, 6> excursion_probabilities(int x);

/// Linear-complexity category probabilities (T <= -2.5, ..., T > 2.5):
/// 1/96, 1/32, 1/8, 1/2, 1/4, 1/16, 1/48.
std::span<const double, 7> linear_complexity_probabilities();

}  // namespace carand::sts::tables
