#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "carand/sts_counting.hpp"

namespace carand::sts {

namespace {

std::uint32_t window_mask(unsigned m) {
  return m >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
}

void check_template_length(unsigned m) {
  if (m == 0 || m > 24) throw std::invalid_argument("template length must be 1..24");
}

}  // namespace

std::size_t count_runs(Bits bits) {
  if (bits.empty()) return 0;
  std::size_t v = 1;
  for (std::size_t k = 0; k + 1 < bits.size(); ++k) v += bits[k] != bits[k + 1];
  return v;
}

std::size_t longest_run_of_ones(Bits bits) {
  std::size_t best = 0, run = 0;
  for (auto b : bits) {
    run = b ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

bool is_aperiodic(std::uint32_t tmpl, unsigned m) {
  check_template_length(m);
  // A shift s is a period when the top m-s bits equal the low m-s bits.
  for (unsigned s = 1; s < m; ++s) {
    const std::uint32_t overlap = window_mask(m - s);
    if ((tmpl >> s) == (tmpl & overlap)) return false;
  }
  return true;
}

std::vector<std::uint32_t> aperiodic_templates(unsigned m) {
  check_template_length(m);
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < (std::uint32_t{1} << m); ++v) {
    if (is_aperiodic(v, m)) out.push_back(v);
  }
  return out;
}

std::size_t count_non_overlapping(Bits block, std::uint32_t tmpl, unsigned m) {
  check_template_length(m);
  if (block.size() < m) return 0;
  const std::uint32_t mask = window_mask(m);
  std::size_t count = 0;
  std::size_t i = 0;
  std::uint32_t window = 0;
  std::size_t filled = 0;  // valid bits in `window`, ending at position i - 1
  while (i < block.size()) {
    window = ((window << 1) | block[i]) & mask;
    ++i;
    if (++filled < m) continue;
    if (window == tmpl) {
      ++count;
      filled = 0;
      window = 0;
    }
  }
  return count;
}

std::size_t count_overlapping(Bits block, std::uint32_t tmpl, unsigned m) {
  check_template_length(m);
  if (block.size() < m) return 0;
  const std::uint32_t mask = window_mask(m);
  std::size_t count = 0;
  std::uint32_t window = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    window = ((window << 1) | block[i]) & mask;
    if (i + 1 >= m && window == tmpl) ++count;
  }
  return count;
}

std::vector<std::size_t> window_histogram(Bits block, unsigned m) {
  check_template_length(m);
  std::vector<std::size_t> hist(std::size_t{1} << m, 0);
  const std::uint32_t mask = window_mask(m);
  std::uint32_t window = 0;
  for (std::size_t i = 0; i < block.size(); ++i) {
    window = ((window << 1) | block[i]) & mask;
    if (i + 1 >= m) ++hist[window];
  }
  return hist;
}

std::vector<std::size_t> cyclic_pattern_counts(Bits bits, unsigned m) {
  const std::size_t n = bits.size();
  if (m == 0) return {n};
  if (m > 24) throw std::invalid_argument("pattern length must be <= 24");
  std::vector<std::size_t> counts(std::size_t{1} << m, 0);
  if (n == 0) return counts;
  const std::uint32_t mask = window_mask(m);
  std::uint32_t window = 0;
  // Prime with the first m-1 bits, wrapping for sequences shorter than m.
  for (unsigned k = 0; k + 1 < m; ++k) window = ((window << 1) | bits[k % n]) & mask;
  std::size_t next = (m - 1) % n;
  for (std::size_t i = 0; i < n; ++i) {
    window = ((window << 1) | bits[next]) & mask;
    ++counts[window];
    if (++next == n) next = 0;
  }
  return counts;
}

ExcursionCensus excursion_census(Bits bits) {
  ExcursionCensus census;
  std::array<std::size_t, 9> visits{};  // index state + 4
  auto close_cycle = [&] {
    for (std::size_t s = 0; s < kExcursionStates.size(); ++s) {
      const auto v = visits[static_cast<std::size_t>(kExcursionStates[s] + 4)];
      ++census.counts[s][std::min<std::size_t>(v, 5)];
    }
    visits.fill(0);
    ++census.cycles;
  };
  long long position = 0;
  for (auto b : bits) {
    position += b ? 1 : -1;
    if (position == 0) {
      close_cycle();
    } else if (position >= -4 && position <= 4) {
      ++visits[static_cast<std::size_t>(position + 4)];
    }
  }
  if (!bits.empty() && position != 0) close_cycle();
  return census;
}

std::size_t count_cycles(Bits bits) {
  if (bits.empty()) return 0;
  std::size_t cycles = 0;
  long long position = 0;
  for (auto b : bits) {
    position += b ? 1 : -1;
    if (position == 0) ++cycles;
  }
  return position != 0 ? cycles + 1 : cycles;
}

std::array<std::size_t, 18> state_visits(Bits bits) {
  std::array<std::size_t, 19> raw{};  // index state + 9
  long long position = 0;
  for (auto b : bits) {
    position += b ? 1 : -1;
    if (position >= -9 && position <= 9) ++raw[static_cast<std::size_t>(position + 9)];
  }
  std::array<std::size_t, 18> out{};
  for (std::size_t i = 0; i < kVariantStates.size(); ++i) {
    out[i] = raw[static_cast<std::size_t>(kVariantStates[i] + 9)];
  }
  return out;
}

}  // namespace carand::sts
