// On-disk bit formats.
//
// ASCII:  one '0'/'1' per bit, a '\n' after every 100 bits (and after a
//         final partial line). Newlines ('\n', '\r') are ignored on read.
// Packed: bytes 0..11  "CARANDPACKED"
//         bytes 12..15 format version, uint32 little-endian (currently 1)
//         bytes 16..23 bit count, uint64 little-endian
//         then ceil(count / 8) bytes, bits MSB-first, final byte zero-padded.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "carand/bit_sequence.hpp"

namespace carand {

/// Filesystem or stream failure. The CLI maps this to exit status 2.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed file content.
class FormatError : public IoError {
 public:
  using IoError::IoError;
};

enum class BitFormat { ascii, packed };

inline constexpr std::size_t kAsciiLineLength = 100;
inline constexpr std::uint32_t kPackedVersion = 1;
inline constexpr char kPackedMagic[12] = {'C', 'A', 'R', 'A', 'N', 'D',
                                          'P', 'A', 'C', 'K', 'E', 'D'};

std::vector<std::uint8_t> pack_msb_first(std::span<const std::uint8_t> bits);
BitSequence unpack_msb_first(std::span<const std::uint8_t> bytes, std::size_t bit_count);

void write_ascii(std::ostream& out, const BitSequence& bits);
BitSequence read_ascii(std::istream& in);

void write_packed(std::ostream& out, const BitSequence& bits);
BitSequence read_packed(std::istream& in);

void save_bits(const std::filesystem::path& path, const BitSequence& bits, BitFormat format);
/// Detects the format from the packed magic.
BitSequence load_bits(const std::filesystem::path& path);

/// ".txt" / ".ascii" → ascii, anything else → packed.
BitFormat format_for_path(const std::filesystem::path& path);

/// Lower-case hex SHA-256 of the MSB-first packed payload; identical for a
/// given sequence regardless of the file format it is stored in.
std::string bits_sha256(const BitSequence& bits);
std::string sha256_hex(std::span<const std::uint8_t> bytes);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);
std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path);
void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace carand
