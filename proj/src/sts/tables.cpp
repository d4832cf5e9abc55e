#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "carand/sts_tables.hpp"

namespace carand::sts::tables {

namespace {

// Exact values from longest_run_probabilities(block, low, high).
constexpr std::array<double, 4> kLongestRun8 = {0.21484375, 0.3671875, 0.23046875, 0.1875};
constexpr std::array<double, 6> kLongestRun128 = {0.117403578838, 0.242955959277, 0.249363483179,
                                                  0.175177060347, 0.102701071304, 0.112398847055};
constexpr std::array<double, 7> kLongestRun10000 = {0.086632311080, 0.208200648388,
                                                    0.248418581942, 0.193912786742,
                                                    0.121458485089, 0.068011089304,
                                                    0.073366097456};

const std::array<LongestRunBand, 3> kLongestRunBands = {{
    {128, 8, 1, 4, kLongestRun8},
    {6272, 128, 4, 9, kLongestRun128},
    {750000, 10000, 10, 16, kLongestRun10000},
}};

// Index L - 1. NIST SP 800-22 table; E(L) matches the series in the header
// to 7 decimals, the variance to 3.
constexpr std::array<double, 16> kUniversalExpected = {
    0.7326495, 1.5374383, 2.4016068,  3.3112247,  4.2534266,  5.2177052,
    6.1962507, 7.1836656, 8.1764248,  9.1723243,  10.170032,  11.168765,
    12.168070, 13.167693, 14.167488,  15.167379};
constexpr std::array<double, 16> kUniversalVariance = {0.690, 1.338, 1.901, 2.358, 2.705, 2.954,
                                                       3.125, 3.238, 3.311, 3.356, 3.384, 3.401,
                                                       3.410, 3.416, 3.419, 3.421};

struct UniversalThreshold {
  std::size_t min_length;
  unsigned block;
};
constexpr std::array<UniversalThreshold, 11> kUniversalBands = {{
    {387840, 6},
    {904960, 7},
    {2068480, 8},
    {4654080, 9},
    {10342400, 10},
    {22753280, 11},
    {49643520, 12},
    {107560960, 13},
    {231669760, 14},
    {496435200, 15},
    {1059061760, 16},
}};

// Rows |x| = 1..4 of the closed form in the header.
constexpr std::array<std::array<double, 6>, 4> kExcursion = {{
    {0.5, 0.25, 0.125, 0.0625, 0.03125, 0.03125},
    {0.75, 0.0625, 0.046875, 0.03515625, 0.0263671875, 0.0791015625},
    {0.8333333333333334, 0.027777777777777776, 0.023148148148148147, 0.019290123456790122,
     0.016075102880658436, 0.08037551440329219},
    {0.875, 0.015625, 0.013671875, 0.011962890625, 0.010467529296875, 0.0732727050781250},
}};

constexpr std::array<double, 7> kLinearComplexity = {1.0 / 96, 1.0 / 32, 1.0 / 8, 1.0 / 2,
                                                     1.0 / 4,  1.0 / 16, 1.0 / 48};

}  // namespace

std::span<const LongestRunBand> longest_run_bands() { return kLongestRunBands; }

const LongestRunBand* longest_run_band(std::size_t n) {
  const LongestRunBand* chosen = nullptr;
  for (const auto& band : kLongestRunBands) {
    if (n >= band.min_length) chosen = &band;
  }
  return chosen;
}

std::vector<double> longest_run_probabilities(std::size_t block, unsigned low, unsigned high) {
  if (low >= high) throw std::invalid_argument("longest-run categories need low < high");
  // cdf(r) = P(longest run <= r), by a DP over the current trailing run.
  auto cdf = [block](unsigned r) {
    std::vector<double> dp(r + 1, 0.0), next(r + 1);
    dp[0] = 1.0;
    for (std::size_t i = 0; i < block; ++i) {
      std::fill(next.begin(), next.end(), 0.0);
      for (unsigned k = 0; k <= r; ++k) {
        next[0] += 0.5 * dp[k];
        if (k + 1 <= r) next[k + 1] += 0.5 * dp[k];
      }
      dp.swap(next);
    }
    double total = 0.0;
    for (double p : dp) total += p;
    return total;
  };
  std::vector<double> probs;
  double previous = 0.0;
  for (unsigned r = low; r < high; ++r) {
    const double c = cdf(r);
    probs.push_back(c - previous);
    previous = c;
  }
  probs.push_back(1.0 - previous);
  return probs;
}

std::vector<double> overlapping_probabilities(std::size_t block, unsigned m, unsigned categories) {
  if (m == 0 || categories < 2) throw std::invalid_argument("bad overlapping-template parameters");
  const unsigned cap = categories - 1;
  // state (trailing ones capped at m, matches capped at cap)
  std::vector<double> dp((m + 1) * (cap + 1), 0.0), next(dp.size());
  auto at = [cap](unsigned run, unsigned count) { return run * (cap + 1) + count; };
  dp[at(0, 0)] = 1.0;
  for (std::size_t i = 0; i < block; ++i) {
    std::fill(next.begin(), next.end(), 0.0);
    for (unsigned run = 0; run <= m; ++run) {
      for (unsigned count = 0; count <= cap; ++count) {
        const double p = dp[at(run, count)];
        if (p == 0.0) continue;
        next[at(0, count)] += 0.5 * p;
        const unsigned grown = std::min(run + 1, m);
        const unsigned hits = grown == m ? std::min(count + 1, cap) : count;
        next[at(grown, hits)] += 0.5 * p;
      }
    }
    dp.swap(next);
  }
  std::vector<double> probs(categories, 0.0);
  for (unsigned run = 0; run <= m; ++run) {
    for (unsigned count = 0; count <= cap; ++count) probs[count] += dp[at(run, count)];
  }
  return probs;
}

double rank_probability(unsigned r, unsigned rows, unsigned cols) {
  if (r > std::min(rows, cols)) return 0.0;
  // 2^{r(Q+M-r) - MQ} Π_{i<r} (1-2^{i-Q})(1-2^{i-M}) / (1-2^{i-r})
  double p = std::ldexp(1.0, static_cast<int>(r * (rows + cols - r)) - static_cast<int>(rows * cols));
  for (unsigned i = 0; i < r; ++i) {
    const int ii = static_cast<int>(i);
    p *= (1.0 - std::ldexp(1.0, ii - static_cast<int>(rows))) *
         (1.0 - std::ldexp(1.0, ii - static_cast<int>(cols))) /
         (1.0 - std::ldexp(1.0, ii - static_cast<int>(r)));
  }
  return p;
}

unsigned universal_block_length(std::size_t n) {
  unsigned L = 0;
  for (const auto& band : kUniversalBands) {
    if (n >= band.min_length) L = band.block;
  }
  return L;
}

double universal_expected(unsigned L) {
  if (L < 1 || L > 16) throw std::out_of_range("universal block length must be 1..16");
  return kUniversalExpected[L - 1];
}

double universal_variance(unsigned L) {
  if (L < 1 || L > 16) throw std::out_of_range("universal block length must be 1..16");
  return kUniversalVariance[L - 1];
}

std::span<const double, 6> excursion_probabilities(int x) {
  const int ax = std::abs(x);
  if (ax < 1 || ax > 4) throw std::out_of_range("excursion state must be in -4..-1, 1..4");
  return kExcursion[static_cast<std::size_t>(ax - 1)];
}

std::span<const double, 7> linear_complexity_probabilities() { return kLinearComplexity; }

}  // namespace carand::sts::tables
