#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "carand/numerics.hpp"
#include "carand/sts.hpp"
#include "carand/sts_counting.hpp"
#include "carand/sts_tables.hpp"

namespace carand::sts {

namespace {

using numerics::erfc;
using numerics::igamc;

TestOutcome start(TestId id, const BitSequence& s) {
  TestOutcome out;
  out.id = id;
  out.applicable = true;
  out.parameters["n"] = static_cast<double>(s.size());
  return out;
}

TestOutcome inapplicable(TestOutcome out, std::string why) {
  out.applicable = false;
  out.note = std::move(why);
  out.p_values.clear();
  out.pass.reset();
  return out;
}

TestOutcome finish(TestOutcome out, const TestParams& params) {
  for (auto& p : out.p_values) {
    if (std::isnan(p)) throw std::logic_error("NaN p-value in " + std::string(key(out.id)));
    p = std::clamp(p, 0.0, 1.0);
  }
  out.pass = out.passed(params.alpha);
  return out;
}

bool too_short(const TestParams& params, std::size_t n, std::size_t minimum) {
  return params.enforce_minimums && n < minimum;
}

double chi_square(std::span<const std::size_t> observed, std::span<const double> probs,
                  double total) {
  double chi2 = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = total * probs[i];
    const double diff = static_cast<double>(observed[i]) - expected;
    chi2 += diff * diff / expected;
  }
  return chi2;
}

// floor(log2 n) for n >= 1
unsigned floor_log2(std::size_t n) { return static_cast<unsigned>(std::bit_width(n) - 1); }

double psi_squared(Bits bits, int m) {
  if (m <= 0) return 0.0;
  const auto counts = cyclic_pattern_counts(bits, static_cast<unsigned>(m));
  unsigned long long sum_sq = 0;
  for (auto c : counts) sum_sq += static_cast<unsigned long long>(c) * c;
  const double n = static_cast<double>(bits.size());
  return std::ldexp(static_cast<double>(sum_sq), m) / n - n;
}

double phi(Bits bits, unsigned m) {
  if (m == 0) return 0.0;
  const auto counts = cyclic_pattern_counts(bits, m);
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double f = static_cast<double>(c) / n;
    sum += f * std::log(f);
  }
  return sum;
}

// One direction of the cumulative-sums p-value.
double cusum_p_value(long long n, long long z) {
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const long long nz = n / z;
  double sum1 = 0.0;
  for (long long k = (-nz + 1) / 4; k <= (nz - 1) / 4; ++k) {
    sum1 += numerics::normal_cdf(static_cast<double>(4 * k + 1) * z / sqrt_n) -
            numerics::normal_cdf(static_cast<double>(4 * k - 1) * z / sqrt_n);
  }
  double sum2 = 0.0;
  for (long long k = (-nz - 3) / 4; k <= (nz - 1) / 4; ++k) {
    sum2 += numerics::normal_cdf(static_cast<double>(4 * k + 3) * z / sqrt_n) -
            numerics::normal_cdf(static_cast<double>(4 * k + 1) * z / sqrt_n);
  }
  return 1.0 - sum1 + sum2;
}

std::size_t excursion_cycle_minimum(std::size_t n, const TestParams& params) {
  if (!params.enforce_minimums) return 1;
  return static_cast<std::size_t>(
      std::max(0.005 * std::sqrt(static_cast<double>(n)), 500.0));
}

}  // namespace

bool TestOutcome::passed(double alpha) const {
  if (!applicable || p_values.empty()) return false;
  return std::all_of(p_values.begin(), p_values.end(), [alpha](double p) { return p >= alpha; });
}

std::size_t p_value_count(TestId id, const TestParams& params) {
  switch (id) {
    case TestId::non_overlapping_template:
      return aperiodic_templates(static_cast<unsigned>(params.non_overlapping_m)).size();
    case TestId::serial:
    case TestId::cumulative_sums: return 2;
    case TestId::random_excursions: return kExcursionStates.size();
    case TestId::random_excursions_variant: return kVariantStates.size();
    default: return 1;
  }
}

TestOutcome frequency_monobit(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::frequency, s);
  const std::size_t n = s.size();
  if (n == 0 || too_short(params, n, 100)) return inapplicable(out, "requires n >= 100");
  const double sum = 2.0 * static_cast<double>(s.count_ones()) - static_cast<double>(n);
  const double s_obs = std::fabs(sum) / std::sqrt(static_cast<double>(n));
  out.statistics["S_n"] = sum;
  out.statistics["s_obs"] = s_obs;
  out.p_values = {erfc(s_obs / std::numbers::sqrt2)};
  return finish(out, params);
}

TestOutcome block_frequency(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::block_frequency, s);
  const std::size_t n = s.size();
  const std::size_t M = params.block_frequency_m;
  out.parameters["M"] = static_cast<double>(M);
  if (M == 0 || M > n) return inapplicable(out, "block length exceeds sequence length");
  if (too_short(params, n, 100)) return inapplicable(out, "requires n >= 100");
  const std::size_t N = n / M;
  const auto bits = s.bits();
  double chi2 = 0.0;
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < M; ++j) ones += bits[i * M + j];
    const double pi = static_cast<double>(ones) / static_cast<double>(M) - 0.5;
    chi2 += pi * pi;
  }
  chi2 *= 4.0 * static_cast<double>(M);
  out.parameters["N"] = static_cast<double>(N);
  out.statistics["chi2"] = chi2;
  out.p_values = {igamc(static_cast<double>(N) / 2.0, chi2 / 2.0)};
  return finish(out, params);
}

TestOutcome runs(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::runs, s);
  const std::size_t n = s.size();
  if (n == 0 || too_short(params, n, 100)) return inapplicable(out, "requires n >= 100");
  const double nd = static_cast<double>(n);
  const double pi = static_cast<double>(s.count_ones()) / nd;
  const double tau = 2.0 / std::sqrt(nd);
  out.statistics["pi"] = pi;
  if (std::fabs(pi - 0.5) >= tau) {
    out.note = "frequency prerequisite failed";
    out.statistics["prerequisite"] = 0.0;
    out.p_values = {0.0};
    return finish(out, params);
  }
  out.statistics["prerequisite"] = 1.0;
  const double v = static_cast<double>(count_runs(s.bits()));
  out.statistics["V"] = v;
  const double spread = pi * (1.0 - pi);
  out.p_values = {erfc(std::fabs(v - 2.0 * nd * spread) / (2.0 * std::sqrt(2.0 * nd) * spread))};
  return finish(out, params);
}

TestOutcome longest_run_of_ones(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::longest_run, s);
  const auto* band = tables::longest_run_band(s.size());
  if (band == nullptr) return inapplicable(out, "requires n >= 128");
  const std::size_t M = band->block;
  const std::size_t N = s.size() / M;
  const std::size_t K = band->probabilities.size() - 1;
  std::vector<std::size_t> nu(K + 1, 0);
  const auto bits = s.bits();
  for (std::size_t i = 0; i < N; ++i) {
    const auto run = longest_run_of_ones(bits.subspan(i * M, M));
    const std::size_t category =
        run <= band->low ? 0 : std::min<std::size_t>(run - band->low, K);
    ++nu[category];
  }
  const double chi2 = chi_square(nu, band->probabilities, static_cast<double>(N));
  out.parameters["M"] = static_cast<double>(M);
  out.parameters["N"] = static_cast<double>(N);
  out.parameters["K"] = static_cast<double>(K);
  out.statistics["chi2"] = chi2;
  out.p_values = {igamc(static_cast<double>(K) / 2.0, chi2 / 2.0)};
  return finish(out, params);
}

TestOutcome binary_matrix_rank(const BitSequence& s, const TestParams& params) {
  constexpr std::size_t kDim = 32;
  auto out = start(TestId::rank, s);
  const std::size_t N = s.size() / (kDim * kDim);
  out.parameters["N"] = static_cast<double>(N);
  if (N == 0 || (params.enforce_minimums && N < 38)) {
    return inapplicable(out, "requires at least 38 32x32 matrices");
  }
  const auto bits = s.bits();
  std::size_t full = 0, minus_one = 0;
  std::array<std::uint32_t, kDim> rows{};
  for (std::size_t k = 0; k < N; ++k) {
    const auto matrix = bits.subspan(k * kDim * kDim, kDim * kDim);
    for (std::size_t r = 0; r < kDim; ++r) {
      std::uint32_t word = 0;
      for (std::size_t c = 0; c < kDim; ++c) word = (word << 1) | matrix[r * kDim + c];
      rows[r] = word;
    }
    const auto rank = numerics::gf2_rank32(rows);
    if (rank == kDim) {
      ++full;
    } else if (rank == kDim - 1) {
      ++minus_one;
    }
  }
  const double p32 = tables::rank_probability(32, 32, 32);
  const double p31 = tables::rank_probability(31, 32, 32);
  const std::array<double, 3> probs = {p32, p31, 1.0 - p32 - p31};
  const std::array<std::size_t, 3> observed = {full, minus_one, N - full - minus_one};
  const double chi2 = chi_square(observed, probs, static_cast<double>(N));
  out.statistics["F_32"] = static_cast<double>(full);
  out.statistics["F_31"] = static_cast<double>(minus_one);
  out.statistics["chi2"] = chi2;
  out.p_values = {igamc(1.0, chi2 / 2.0)};
  return finish(out, params);
}

double spectral_p_value(std::size_t n, double below) {
  const double nd = static_cast<double>(n);
  const double expected = 0.95 * nd / 2.0;
  const double d = (below - expected) / std::sqrt(nd * 0.95 * 0.05 / 4.0);
  return erfc(std::fabs(d) / std::numbers::sqrt2);
}

TestOutcome dft_spectral(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::dft, s);
  const std::size_t n = s.size();
  if (n < 2 || too_short(params, n, 1000)) return inapplicable(out, "requires n >= 1000");
  std::vector<double> x(n);
  const auto bits = s.bits();
  for (std::size_t i = 0; i < n; ++i) x[i] = bits[i] ? 1.0 : -1.0;
  const auto mags = numerics::dft_magnitudes(x);
  const double threshold = std::sqrt(std::log(1.0 / 0.05) * static_cast<double>(n));
  const auto below = static_cast<double>(
      std::count_if(mags.begin(), mags.end(), [threshold](double m) { return m < threshold; }));
  out.statistics["threshold"] = threshold;
  out.statistics["N0"] = 0.95 * static_cast<double>(n) / 2.0;
  out.statistics["N1"] = below;
  out.p_values = {spectral_p_value(n, below)};
  return finish(out, params);
}

TestOutcome non_overlapping_template(const BitSequence& s, const TestParams& params) {
  constexpr std::size_t kBlocks = 8;
  auto out = start(TestId::non_overlapping_template, s);
  const auto m = static_cast<unsigned>(params.non_overlapping_m);
  if (m < 2 || m > 21) return inapplicable(out, "template length must be 2..21");
  const std::size_t n = s.size();
  const std::size_t M = n / kBlocks;
  out.parameters["m"] = m;
  out.parameters["N"] = kBlocks;
  out.parameters["M"] = static_cast<double>(M);
  if (M < m) return inapplicable(out, "requires n >= 8m");

  const double md = static_cast<double>(M);
  const double mu = (md - m + 1) / std::ldexp(1.0, static_cast<int>(m));
  const double sigma2 = md * (1.0 / std::ldexp(1.0, static_cast<int>(m)) -
                              (2.0 * m - 1.0) / std::ldexp(1.0, static_cast<int>(2 * m)));
  out.statistics["mu"] = mu;
  out.statistics["sigma2"] = sigma2;

  // Occurrences of an aperiodic template cannot overlap, so the
  // skip-on-match count equals the plain window count.
  std::vector<std::vector<std::size_t>> hist;
  hist.reserve(kBlocks);
  for (std::size_t j = 0; j < kBlocks; ++j) hist.push_back(window_histogram(s.bits().subspan(j * M, M), m));

  const auto templates = aperiodic_templates(m);
  out.p_values.reserve(templates.size());
  for (auto t : templates) {
    double chi2 = 0.0;
    for (std::size_t j = 0; j < kBlocks; ++j) {
      const double diff = static_cast<double>(hist[j][t]) - mu;
      chi2 += diff * diff / sigma2;
    }
    out.p_values.push_back(igamc(kBlocks / 2.0, chi2 / 2.0));
  }
  out.statistics["templates"] = static_cast<double>(templates.size());
  return finish(out, params);
}

TestOutcome overlapping_template(const BitSequence& s, const TestParams& params) {
  constexpr unsigned kCategories = 6;
  auto out = start(TestId::overlapping_template, s);
  const auto m = static_cast<unsigned>(params.overlapping_m);
  const std::size_t M = params.overlapping_block;
  if (m < 2 || m > 24 || M < m) return inapplicable(out, "bad template parameters");
  const std::size_t N = s.size() / M;
  out.parameters["m"] = m;
  out.parameters["M"] = static_cast<double>(M);
  out.parameters["N"] = static_cast<double>(N);
  if (N == 0) return inapplicable(out, "requires n >= block length");

  const double lambda = static_cast<double>(M - m + 1) / std::ldexp(1.0, static_cast<int>(m));
  out.statistics["lambda"] = lambda;
  out.statistics["eta"] = lambda / 2.0;
  const auto probs = tables::overlapping_probabilities(M, m, kCategories);

  const std::uint32_t all_ones = (std::uint32_t{1} << m) - 1;
  std::array<std::size_t, kCategories> nu{};
  for (std::size_t i = 0; i < N; ++i) {
    const auto hits = count_overlapping(s.bits().subspan(i * M, M), all_ones, m);
    ++nu[std::min<std::size_t>(hits, kCategories - 1)];
  }
  const double chi2 = chi_square(nu, probs, static_cast<double>(N));
  out.statistics["chi2"] = chi2;
  out.p_values = {igamc((kCategories - 1) / 2.0, chi2 / 2.0)};
  return finish(out, params);
}

TestOutcome maurer_universal(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::universal, s);
  const std::size_t n = s.size();
  const unsigned L = params.universal_l != 0 ? params.universal_l : tables::universal_block_length(n);
  if (L == 0) return inapplicable(out, "requires n >= 387840");
  if (L > 16) return inapplicable(out, "block length must be 1..16");
  const std::size_t Q = params.universal_q != 0 ? params.universal_q : std::size_t{10} << L;
  out.parameters["L"] = L;
  out.parameters["Q"] = static_cast<double>(Q);
  if (n / L <= Q) return inapplicable(out, "no test blocks after initialization");
  const std::size_t K = n / L - Q;
  out.parameters["K"] = static_cast<double>(K);

  const auto bits = s.bits();
  auto block_value = [&](std::size_t i) {  // i is 1-based
    std::uint32_t v = 0;
    for (unsigned j = 0; j < L; ++j) v = (v << 1) | bits[(i - 1) * L + j];
    return v;
  };
  std::vector<std::size_t> last_seen(std::size_t{1} << L, 0);
  for (std::size_t i = 1; i <= Q; ++i) last_seen[block_value(i)] = i;
  double sum = 0.0;
  for (std::size_t i = Q + 1; i <= Q + K; ++i) {
    const auto v = block_value(i);
    sum += std::log2(static_cast<double>(i - last_seen[v]));
    last_seen[v] = i;
  }
  const double fn = sum / static_cast<double>(K);
  const double ld = L;
  const double c = 0.7 - 0.8 / ld + (4.0 + 32.0 / ld) * std::pow(static_cast<double>(K), -3.0 / ld) / 15.0;
  const double sigma = c * std::sqrt(tables::universal_variance(L) / static_cast<double>(K));
  const double expected = tables::universal_expected(L);
  out.statistics["fn"] = fn;
  out.statistics["expected"] = expected;
  out.statistics["sigma"] = sigma;
  out.p_values = {erfc(std::fabs(fn - expected) / (std::numbers::sqrt2 * sigma))};
  return finish(out, params);
}

TestOutcome linear_complexity(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::linear_complexity, s);
  const std::size_t M = params.linear_complexity_m;
  if (M == 0) return inapplicable(out, "block length must be positive");
  const std::size_t N = s.size() / M;
  out.parameters["M"] = static_cast<double>(M);
  out.parameters["N"] = static_cast<double>(N);
  if (N == 0 || (params.enforce_minimums && N < 200)) {
    return inapplicable(out, "requires at least 200 blocks");
  }
  const double md = static_cast<double>(M);
  const double sign = (M % 2 == 0) ? 1.0 : -1.0;  // (-1)^M
  const double mu = md / 2.0 + (9.0 - sign) / 36.0 - (md / 3.0 + 2.0 / 9.0) / std::pow(2.0, md);
  out.statistics["mu"] = mu;

  std::array<std::size_t, 7> nu{};
  for (std::size_t i = 0; i < N; ++i) {
    const auto L = numerics::berlekamp_massey(s.bits().subspan(i * M, M));
    const double t = sign * (static_cast<double>(L) - mu) + 2.0 / 9.0;
    std::size_t category;
    if (t <= -2.5) {
      category = 0;
    } else if (t <= -1.5) {
      category = 1;
    } else if (t <= -0.5) {
      category = 2;
    } else if (t <= 0.5) {
      category = 3;
    } else if (t <= 1.5) {
      category = 4;
    } else if (t <= 2.5) {
      category = 5;
    } else {
      category = 6;
    }
    ++nu[category];
  }
  const double chi2 = chi_square(nu, tables::linear_complexity_probabilities(), static_cast<double>(N));
  out.statistics["chi2"] = chi2;
  out.p_values = {igamc(3.0, chi2 / 2.0)};
  return finish(out, params);
}

TestOutcome serial(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::serial, s);
  const std::size_t n = s.size();
  const std::size_t m = params.serial_m;
  out.parameters["m"] = static_cast<double>(m);
  if (n == 0 || m < 2 || m > 24) return inapplicable(out, "pattern length must be 2..24");
  if (params.enforce_minimums && !(static_cast<long long>(m) < static_cast<long long>(floor_log2(n)) - 2)) {
    return inapplicable(out, "requires m < floor(log2 n) - 2");
  }
  const int mi = static_cast<int>(m);
  const double psi_m = psi_squared(s.bits(), mi);
  const double psi_m1 = psi_squared(s.bits(), mi - 1);
  const double psi_m2 = psi_squared(s.bits(), mi - 2);
  const double del1 = std::max(0.0, psi_m - psi_m1);
  const double del2 = std::max(0.0, psi_m - 2.0 * psi_m1 + psi_m2);
  out.statistics["psi2_m"] = psi_m;
  out.statistics["psi2_m-1"] = psi_m1;
  out.statistics["psi2_m-2"] = psi_m2;
  out.statistics["del1"] = psi_m - psi_m1;
  out.statistics["del2"] = psi_m - 2.0 * psi_m1 + psi_m2;
  out.p_values = {igamc(std::ldexp(1.0, mi - 2), del1 / 2.0),
                  igamc(std::ldexp(1.0, mi - 3), del2 / 2.0)};
  return finish(out, params);
}

TestOutcome approximate_entropy(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::approximate_entropy, s);
  const std::size_t n = s.size();
  const std::size_t m = params.apen_m;
  out.parameters["m"] = static_cast<double>(m);
  if (n == 0 || m < 1 || m > 23) return inapplicable(out, "block length must be 1..23");
  if (params.enforce_minimums && !(static_cast<long long>(m) < static_cast<long long>(floor_log2(n)) - 5)) {
    return inapplicable(out, "requires m < floor(log2 n) - 5");
  }
  const auto mu = static_cast<unsigned>(m);
  const double phi_m = phi(s.bits(), mu);
  const double phi_m1 = phi(s.bits(), mu + 1);
  const double apen = phi_m - phi_m1;
  const double chi2 = 2.0 * static_cast<double>(n) * (std::numbers::ln2 - apen);
  out.statistics["phi_m"] = phi_m;
  out.statistics["phi_m+1"] = phi_m1;
  out.statistics["apen"] = apen;
  out.statistics["chi2"] = chi2;
  out.p_values = {igamc(std::ldexp(1.0, static_cast<int>(m) - 1), std::max(0.0, chi2) / 2.0)};
  return finish(out, params);
}

TestOutcome cumulative_sums(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::cumulative_sums, s);
  const std::size_t n = s.size();
  if (n == 0 || too_short(params, n, 100)) return inapplicable(out, "requires n >= 100");
  const auto bits = s.bits();
  long long sum = 0, forward = 0;
  for (auto b : bits) {
    sum += b ? 1 : -1;
    forward = std::max(forward, std::llabs(sum));
  }
  sum = 0;
  long long backward = 0;
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) {
    sum += *it ? 1 : -1;
    backward = std::max(backward, std::llabs(sum));
  }
  const auto nl = static_cast<long long>(n);
  out.statistics["z_forward"] = static_cast<double>(forward);
  out.statistics["z_backward"] = static_cast<double>(backward);
  out.p_values = {cusum_p_value(nl, forward), cusum_p_value(nl, backward)};
  return finish(out, params);
}

TestOutcome random_excursions(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::random_excursions, s);
  const auto census = excursion_census(s.bits());
  const double J = static_cast<double>(census.cycles);
  out.statistics["J"] = J;
  const std::size_t minimum = excursion_cycle_minimum(s.size(), params);
  if (s.empty() || census.cycles < minimum) {
    return inapplicable(out, "requires at least " + std::to_string(minimum) + " cycles");
  }
  for (std::size_t i = 0; i < kExcursionStates.size(); ++i) {
    const int x = kExcursionStates[i];
    const double chi2 = chi_square(census.counts[i], tables::excursion_probabilities(x), J);
    out.statistics["chi2(" + std::to_string(x) + ")"] = chi2;
    out.p_values.push_back(igamc(2.5, chi2 / 2.0));
  }
  return finish(out, params);
}

TestOutcome random_excursions_variant(const BitSequence& s, const TestParams& params) {
  auto out = start(TestId::random_excursions_variant, s);
  const std::size_t J = count_cycles(s.bits());
  out.statistics["J"] = static_cast<double>(J);
  const std::size_t minimum = excursion_cycle_minimum(s.size(), params);
  if (s.empty() || J < minimum) {
    return inapplicable(out, "requires at least " + std::to_string(minimum) + " cycles");
  }
  const auto visits = state_visits(s.bits());
  const double jd = static_cast<double>(J);
  for (std::size_t i = 0; i < kVariantStates.size(); ++i) {
    const int x = kVariantStates[i];
    const double xi = static_cast<double>(visits[i]);
    out.statistics["xi(" + std::to_string(x) + ")"] = xi;
    out.p_values.push_back(erfc(std::fabs(xi - jd) / std::sqrt(2.0 * jd * (4.0 * std::abs(x) - 2.0))));
  }
  return finish(out, params);
}

TestOutcome run_test(TestId id, const BitSequence& s, const TestParams& params) {
  switch (id) {
    case TestId::frequency: return frequency_monobit(s, params);
    case TestId::block_frequency: return block_frequency(s, params);
    case TestId::runs: return runs(s, params);
    case TestId::longest_run: return longest_run_of_ones(s, params);
    case TestId::rank: return binary_matrix_rank(s, params);
    case TestId::dft: return dft_spectral(s, params);
    case TestId::non_overlapping_template: return non_overlapping_template(s, params);
    case TestId::overlapping_template: return overlapping_template(s, params);
    case TestId::universal: return maurer_universal(s, params);
    case TestId::linear_complexity: return linear_complexity(s, params);
    case TestId::serial: return serial(s, params);
    case TestId::approximate_entropy: return approximate_entropy(s, params);
    case TestId::cumulative_sums: return cumulative_sums(s, params);
    case TestId::random_excursions: return random_excursions(s, params);
    case TestId::random_excursions_variant: return random_excursions_variant(s, params);
  }
  throw std::invalid_argument("unknown test id");
}

std::vector<TestOutcome> run_all(const BitSequence& s, const TestParams& params) {
  std::vector<TestOutcome> outcomes;
  outcomes.reserve(kAllTests.size());
  for (auto id : kAllTests) outcomes.push_back(run_test(id, s, params));
  return outcomes;
}

std::string_view key(TestId id) {
  switch (id) {
    case TestId::frequency: return "frequency";
    case TestId::block_frequency: return "block_frequency";
    case TestId::runs: return "runs";
    case TestId::longest_run: return "longest_run";
    case TestId::rank: return "rank";
    case TestId::dft: return "dft";
    case TestId::non_overlapping_template: return "non_overlapping_template";
    case TestId::overlapping_template: return "overlapping_template";
    case TestId::universal: return "universal";
    case TestId::linear_complexity: return "linear_complexity";
    case TestId::serial: return "serial";
    case TestId::approximate_entropy: return "approximate_entropy";
    case TestId::cumulative_sums: return "cumulative_sums";
    case TestId::random_excursions: return "random_excursions";
    case TestId::random_excursions_variant: return "random_excursions_variant";
  }
  return "?";
}

std::string_view display_name(TestId id) {
  switch (id) {
    case TestId::frequency: return "Frequency (Monobit)";
    case TestId::block_frequency: return "Frequency within a block";
    case TestId::runs: return "Runs";
    case TestId::longest_run: return "Longest run of ones in a block";
    case TestId::rank: return "Binary matrix rank";
    case TestId::dft: return "Discrete Fourier transform (Spectral)";
    case TestId::non_overlapping_template: return "Non-overlapping template matching";
    case TestId::overlapping_template: return "Overlapping template matching";
    case TestId::universal: return "Maurer's universal statistic";
    case TestId::linear_complexity: return "Linear complexity";
    case TestId::serial: return "Serial";
    case TestId::approximate_entropy: return "Approximate entropy";
    case TestId::cumulative_sums: return "Cumulative sums";
    case TestId::random_excursions: return "Random excursions";
    case TestId::random_excursions_variant: return "Random excursions variant";
  }
  return "?";
}

TestId parse_test_id(std::string_view text) {
  for (auto id : kAllTests) {
    if (key(id) == text) return id;
  }
  throw std::invalid_argument("unknown test '" + std::string(text) + "'");
}

}  // namespace carand::sts
