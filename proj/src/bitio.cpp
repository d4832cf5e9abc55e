#include "carand/bitio.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

namespace carand {

namespace {

void put_le(std::ostream& out, std::uint64_t value, int bytes) {
  for (int i = 0; i < bytes; ++i) {
    out.put(static_cast<char>((value >> (8 * i)) & 0xFF));
  }
}

std::uint64_t get_le(std::span<const std::uint8_t> bytes) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < bytes.size(); ++i) value |= std::uint64_t{bytes[i]} << (8 * i);
  return value;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void check_written(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

}  // namespace

std::vector<std::uint8_t> pack_msb_first(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i >> 3] |= static_cast<std::uint8_t>(0x80U >> (i & 7));
  }
  return bytes;
}

BitSequence unpack_msb_first(std::span<const std::uint8_t> bytes, std::size_t bit_count) {
  if (bit_count > bytes.size() * 8) throw FormatError("packed payload shorter than bit count");
  std::vector<std::uint8_t> bits(bit_count);
  for (std::size_t i = 0; i < bit_count; ++i) bits[i] = (bytes[i >> 3] >> (7 - (i & 7))) & 1U;
  return BitSequence(std::move(bits));
}

void write_ascii(std::ostream& out, const BitSequence& bits) {
  std::string line;
  line.reserve(kAsciiLineLength + 1);
  const auto data = bits.bits();
  for (std::size_t i = 0; i < data.size(); i += kAsciiLineLength) {
    const std::size_t end = std::min(data.size(), i + kAsciiLineLength);
    line.clear();
    for (std::size_t j = i; j < end; ++j) line.push_back(data[j] ? '1' : '0');
    line.push_back('\n');
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
}

BitSequence read_ascii(std::istream& in) {
  std::vector<std::uint8_t> bits;
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    const auto got = static_cast<std::size_t>(in.gcount());
    for (std::size_t i = 0; i < got; ++i) {
      const char ch = buffer[i];
      if (ch == '0' || ch == '1') {
        bits.push_back(ch == '1' ? 1 : 0);
      } else if (ch != '\n' && ch != '\r') {
        throw FormatError("ASCII bit file contains a character other than '0', '1' or newline");
      }
    }
  }
  if (in.bad()) throw IoError("read error in ASCII bit stream");
  return BitSequence(std::move(bits));
}

void write_packed(std::ostream& out, const BitSequence& bits) {
  out.write(kPackedMagic, sizeof kPackedMagic);
  put_le(out, kPackedVersion, 4);
  put_le(out, bits.size(), 8);
  const auto bytes = pack_msb_first(bits.bits());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

BitSequence read_packed(std::istream& in) {
  std::array<std::uint8_t, 24> header{};
  in.read(reinterpret_cast<char*>(header.data()), header.size());
  if (in.gcount() != static_cast<std::streamsize>(header.size())) {
    throw FormatError("packed bit file truncated in header");
  }
  if (std::memcmp(header.data(), kPackedMagic, sizeof kPackedMagic) != 0) {
    throw FormatError("packed bit file has wrong magic");
  }
  const auto version = get_le(std::span(header).subspan(12, 4));
  if (version != kPackedVersion) {
    throw FormatError("unsupported packed bit file version " + std::to_string(version));
  }
  const auto count = get_le(std::span(header).subspan(16, 8));
  std::vector<std::uint8_t> payload((count + 7) / 8);
  in.read(reinterpret_cast<char*>(payload.data()), static_cast<std::streamsize>(payload.size()));
  if (in.gcount() != static_cast<std::streamsize>(payload.size())) {
    throw FormatError("packed bit file truncated in payload");
  }
  return unpack_msb_first(payload, count);
}

void save_bits(const std::filesystem::path& path, const BitSequence& bits, BitFormat format) {
  auto out = open_out(path);
  if (format == BitFormat::ascii) {
    write_ascii(out, bits);
  } else {
    write_packed(out, bits);
  }
  check_written(out, path);
}

BitSequence load_bits(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::array<char, sizeof kPackedMagic> probe{};
  in.read(probe.data(), probe.size());
  const bool packed = in.gcount() == static_cast<std::streamsize>(probe.size()) &&
                      std::memcmp(probe.data(), kPackedMagic, probe.size()) == 0;
  in.clear();
  in.seekg(0);
  return packed ? read_packed(in) : read_ascii(in);
}

BitFormat format_for_path(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".txt" || ext == ".ascii") ? BitFormat::ascii : BitFormat::packed;
}

std::string sha256_hex(std::span<const std::uint8_t> bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    hex.push_back(kHex[digest[i] >> 4]);
    hex.push_back(kHex[digest[i] & 15]);
  }
  return hex;
}

std::string bits_sha256(const BitSequence& bits) { return sha256_hex(pack_msb_first(bits.bits())); }

std::string read_text_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("read error on '" + path.string() + "'");
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  auto out = open_out(path);
  out << text;
  check_written(out, path);
}

std::vector<std::uint8_t> read_binary_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read error on '" + path.string() + "'");
  return bytes;
}

void write_binary_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  auto out = open_out(path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  check_written(out, path);
}

}  // namespace carand
