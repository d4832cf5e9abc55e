#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <utility>

#include "carand/numerics.hpp"

namespace carand::numerics {

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
}

BinaryMatrix BinaryMatrix::from_bits(std::size_t rows, std::size_t cols,
                                     std::span<const std::uint8_t> bits) {
  if (bits.size() != rows * cols) throw std::invalid_argument("bit count does not match rows*cols");
  BinaryMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (bits[r * cols + c]) m.set(r, c, true);
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
  auto& word = data_[r * stride_ + (c >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (c & 63);
  word = value ? (word | bit) : (word & ~bit);
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (get(r, c)) t.set(c, r, true);
    }
  }
  return t;
}

std::size_t gf2_rank(const BinaryMatrix& m) {
  BinaryMatrix a = m;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && !a.get(pivot, col)) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) {
      auto x = a.row(pivot), y = a.row(rank);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const auto prow = a.row(rank);
    for (std::size_t r = rank + 1; r < a.rows(); ++r) {
      if (!a.get(r, col)) continue;
      auto target = a.row(r);
      for (std::size_t w = col >> 6; w < target.size(); ++w) target[w] ^= prow[w];
    }
    ++rank;
  }
  return rank;
}

std::size_t gf2_rank32(std::span<const std::uint32_t, 32> rows) {
  std::array<std::uint32_t, 32> a{};
  std::copy(rows.begin(), rows.end(), a.begin());
  std::size_t rank = 0;
  for (int bit = 31; bit >= 0 && rank < 32; --bit) {
    const std::uint32_t mask = std::uint32_t{1} << bit;
    std::size_t pivot = rank;
    while (pivot < 32 && !(a[pivot] & mask)) ++pivot;
    if (pivot == 32) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < 32; ++r) {
      if (a[r] & mask) a[r] ^= a[rank];
    }
    ++rank;
  }
  return rank;
}

namespace {

// 64 bits of `v` starting at bit position `pos`; v must have a spare word.
inline std::uint64_t load64(const std::vector<std::uint64_t>& v, std::size_t pos) {
  const std::size_t w = pos >> 6;
  const unsigned s = pos & 63;
  if (s == 0) return v[w];
  return (v[w] >> s) | (v[w + 1] << (64 - s));
}

}  // namespace

std::size_t berlekamp_massey(std::span<const std::uint8_t> bits) {
  const std::size_t n = bits.size();
  if (n == 0) return 0;
  const std::size_t words = n / 64 + 2;

  // rev bit k holds s[n-1-k], so s[N-i] for i = 0.. is a contiguous run
  // starting at bit n-1-N.
  std::vector<std::uint64_t> rev(words + 1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    if (bits[n - 1 - k]) rev[k >> 6] |= std::uint64_t{1} << (k & 63);
  }

  std::vector<std::uint64_t> c(words, 0), b(words, 0), t(words, 0);
  c[0] = b[0] = 1;
  std::size_t L = 0;
  std::size_t deg_b = 0;  // upper bound on deg B
  std::size_t last_change = 0;
  bool changed_once = false;

  for (std::size_t N = 0; N < n; ++N) {
    const std::size_t base = n - 1 - N;
    std::uint64_t acc = 0;
    const std::size_t cw = L / 64 + 1;
    for (std::size_t q = 0; q < cw; ++q) acc ^= c[q] & load64(rev, base + 64 * q);
    if ((std::popcount(acc) & 1) == 0) continue;

    // m = -1 before the first length change.
    const std::size_t shift = changed_once ? N - last_change : N + 1;
    const bool grow = 2 * L <= N;
    if (grow) std::copy(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(cw), t.begin());

    const std::size_t ws = shift >> 6;
    const unsigned bs = shift & 63;
    const std::size_t bw = deg_b / 64 + 1;
    for (std::size_t q = 0; q < bw && q + ws < words; ++q) {
      c[q + ws] ^= b[q] << bs;
      if (bs != 0 && q + ws + 1 < words) c[q + ws + 1] ^= b[q] >> (64 - bs);
    }

    if (grow) {
      const std::size_t old_l = L;
      L = N + 1 - L;
      last_change = N;
      changed_once = true;
      std::fill(b.begin(), b.end(), 0);
      std::copy(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(cw), b.begin());
      deg_b = old_l;
    }
  }
  return L;
}

}  // namespace carand::numerics
