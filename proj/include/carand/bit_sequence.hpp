#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carand {

/// Finite 0/1 sequence, one byte per bit. This is what the statistical
/// tests consume and what the cipher XORs against.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::size_t n, std::uint8_t fill = 0);
  /// Throws std::invalid_argument if any element is not 0 or 1.
  explicit BitSequence(std::vector<std::uint8_t> bits);

  /// '0'/'1' characters; anything else throws std::invalid_argument.
  static BitSequence from_string(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const BitSequence& other);
  void append(std::span<const std::uint8_t> bits);
  void reserve(std::size_t n) { bits_.reserve(n); }
  void truncate(std::size_t n);

  std::span<const std::uint8_t> bits() const { return bits_; }
  BitSequence slice(std::size_t offset, std::size_t length) const;
  BitSequence complement() const;
  std::size_t count_ones() const;
  std::string to_string() const;

  friend bool operator==(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace carand
