// Vernam-style demonstration cipher: plaintext XOR a CA keystream.
//
// NOT production cryptography. There is no authentication, no nonce and
// no key schedule; reusing a key for two messages leaks their XOR.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carand/bit_sequence.hpp"
#include "carand/ca.hpp"
#include "carand/keystream.hpp"

namespace carand {

struct CipherKey {
  static constexpr std::size_t kMinWidth = 64;

  int rule = 30;
  Lattice initial{kMinWidth};  ///< the secret; its boundary is part of the key
  Extraction extraction = Extraction::row_concat;
  std::size_t warmup_rows = 64;

  /// Throws std::domain_error for a bad rule, std::invalid_argument for width < 64 or an all-zero
  /// or all-one lattice.
  void validate() const;

  friend bool operator==(const CipherKey&, const CipherKey&) = default;
};

/// Key with a SplitMix64-drawn lattice (redrawn if degenerate).
CipherKey random_key(int rule, std::size_t width, std::uint64_t seed,
                     Extraction extraction = Extraction::row_concat, std::size_t warmup_rows = 64);

/// First n bits after warmup.
BitSequence keystream(const CipherKey& key, std::size_t n_bits);

/// XOR with the keystream packed MSB-first, as in the packed file format.
std::vector<std::uint8_t> encrypt(std::span<const std::uint8_t> plaintext, const CipherKey& key);
std::vector<std::uint8_t> decrypt(std::span<const std::uint8_t> ciphertext, const CipherKey& key);

/// {"format", "rule", "width", "lattice" (hex, cells packed MSB-first),
///  "extraction", "warmup", "boundary"}
std::string key_to_json(const CipherKey& key);
/// Throws FormatError.
CipherKey key_from_json(std::string_view text);

}  // namespace carand
