// Counting kernels behind the statistical tests. Exposed separately so they
// can be checked against naive scanners.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace carand::sts {

using Bits = std::span<const std::uint8_t>;

/// Number of runs V = 1 + number of k with b[k] != b[k+1]; 0 for empty input.
std::size_t count_runs(Bits bits);

std::size_t longest_run_of_ones(Bits bits);

/// Templates are m-bit values read MSB-first: template bit 0 is the most
/// significant of the m bits.
bool is_aperiodic(std::uint32_t tmpl, unsigned m);
/// All aperiodic m-bit templates in increasing numeric order.
std::vector<std::uint32_t> aperiodic_templates(unsigned m);

/// Matches of `tmpl` scanning left to right; on a match the window jumps m
/// bits, otherwise it advances one.
std::size_t count_non_overlapping(Bits block, std::uint32_t tmpl, unsigned m);
/// Matches at every offset.
std::size_t count_overlapping(Bits block, std::uint32_t tmpl, unsigned m);
/// hist[v] = number of offsets i in [0, len - m] whose m-bit window equals v.
std::vector<std::size_t> window_histogram(Bits block, unsigned m);

/// Counts of each m-bit pattern over the sequence extended cyclically by its
/// first m-1 bits (n windows in total). m == 0 returns {n}.
std::vector<std::size_t> cyclic_pattern_counts(Bits bits, unsigned m);

/// Random-walk cycle census for the random excursions test. States are
/// indexed -4..-1, 1..4 → 0..7.
struct ExcursionCensus {
  std::size_t cycles = 0;
  /// counts[state][k] = cycles visiting the state exactly k times (k = 5 means >= 5).
  std::array<std::array<std::size_t, 6>, 8> counts{};

  friend bool operator==(const ExcursionCensus&, const ExcursionCensus&) = default;
};

inline constexpr std::array<int, 8> kExcursionStates = {-4, -3, -2, -1, 1, 2, 3, 4};
inline constexpr std::array<int, 18> kVariantStates = {-9, -8, -7, -6, -5, -4, -3, -2, -1,
                                                       1,  2,  3,  4,  5,  6,  7,  8,  9};

ExcursionCensus excursion_census(Bits bits);

/// Number of cycles J of the walk S_0 = 0, S_1..S_n, S_{n+1} = 0.
std::size_t count_cycles(Bits bits);

/// Total visits to each of kVariantStates over the whole walk.
std::array<std::size_t, 18> state_visits(Bits bits);

}  // namespace carand::sts
