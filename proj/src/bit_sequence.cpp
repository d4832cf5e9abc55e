#include "carand/bit_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace carand {

BitSequence::BitSequence(std::size_t n, std::uint8_t fill) : bits_(n, fill ? 1 : 0) {}

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b > 1; })) {
    throw std::invalid_argument("bit sequence elements must be 0 or 1");
  }
}

BitSequence BitSequence::from_string(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    bits.push_back(ch == '1' ? 1 : 0);
  }
  BitSequence out;
  out.bits_ = std::move(bits);
  return out;
}

void BitSequence::append(const BitSequence& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitSequence::append(std::span<const std::uint8_t> bits) {
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("bit sequence elements must be 0 or 1");
  }
  bits_.insert(bits_.end(), bits.begin(), bits.end());
}

void BitSequence::truncate(std::size_t n) {
  if (n < bits_.size()) bits_.resize(n);
}

BitSequence BitSequence::slice(std::size_t offset, std::size_t length) const {
  if (offset > bits_.size() || length > bits_.size() - offset) {
    throw std::out_of_range("bit sequence slice out of range");
  }
  BitSequence out;
  out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                   bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
  return out;
}

BitSequence BitSequence::complement() const {
  BitSequence out = *this;
  for (auto& b : out.bits_) b ^= 1;
  return out;
}

std::size_t BitSequence::count_ones() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitSequence::to_string() const {
  std::string out(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) out[i] = '1';
  }
  return out;
}

}  // namespace carand
