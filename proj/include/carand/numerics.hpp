// Special functions and GF(2) / spectral kernels used by the statistical tests.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace carand::numerics {

/// Complementary error function.
double erfc(double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// Regularized upper incomplete gamma Q(a, x) = Γ(a, x) / Γ(a).
/// Series for x < a + 1, Lentz continued fraction otherwise.
/// Throws std::domain_error if a <= 0 or x < 0 (or either is NaN).
double igamc(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x).
double igam(double a, double x);

/// Dense binary matrix, rows packed into 64-bit words (bit j % 64 of word
/// j / 64 is column j).
class BinaryMatrix {
 public:
  /// Throws std::invalid_argument for a zero dimension.
  BinaryMatrix(std::size_t rows, std::size_t cols);

  /// Fills row-major from `bits` (rows * cols entries, each 0/1).
  static BinaryMatrix from_bits(std::size_t rows, std::size_t cols,
                                std::span<const std::uint8_t> bits);
  static BinaryMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool value);
  BinaryMatrix transposed() const;

  std::span<std::uint64_t> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * stride_, stride_};
  }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t stride_;
  std::vector<std::uint64_t> data_;
};

/// Rank over GF(2) by Gaussian elimination on a copy.
std::size_t gf2_rank(const BinaryMatrix& m);

/// Rank of a 32x32 matrix whose rows are given as 32-bit words.
std::size_t gf2_rank32(std::span<const std::uint32_t, 32> rows);

/// Linear complexity: length of the shortest LFSR generating `bits` over
/// GF(2). Bit-packed Berlekamp–Massey, O(n^2 / 64).
std::size_t berlekamp_massey(std::span<const std::uint8_t> bits);

/// |X_j| for j = 0 .. n/2 - 1 of the DFT of real input x (exact length n,
/// no padding). O(n log n). Throws std::invalid_argument if n < 2.
std::vector<double> dft_magnitudes(std::span<const double> x);

}  // namespace carand::numerics
