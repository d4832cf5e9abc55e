#include "carand/cipher.hpp"

#include <stdexcept>

#include "carand/bitio.hpp"
#include "json.hpp"

namespace carand {

using nlohmann::json;

void CipherKey::validate() const {
  (void)RuleTable::from_number(rule);
  if (initial.width() < kMinWidth) {
    throw std::invalid_argument("key lattice must be at least " + std::to_string(kMinWidth) +
                                " cells wide");
  }
  const auto ones = initial.popcount();
  if (ones == 0 || ones == initial.width()) {
    throw std::invalid_argument("degenerate key: lattice is all-zero or all-one");
  }
}

CipherKey random_key(int rule, std::size_t width, std::uint64_t seed, Extraction extraction,
                     std::size_t warmup_rows) {
  SplitMix64 rng(seed);
  CipherKey key;
  key.rule = rule;
  key.extraction = extraction;
  key.warmup_rows = warmup_rows;
  do {
    key.initial = random_initial(width, rng);
  } while (key.initial.popcount() == 0 || key.initial.popcount() == width);
  key.validate();
  return key;
}

BitSequence keystream(const CipherKey& key, std::size_t n_bits) {
  key.validate();
  KeystreamGenerator gen(key.initial, RuleTable::from_number(key.rule), key.extraction,
                         key.warmup_rows);
  return gen.take(n_bits);
}

std::vector<std::uint8_t> encrypt(std::span<const std::uint8_t> plaintext, const CipherKey& key) {
  const auto pad = pack_msb_first(keystream(key, plaintext.size() * 8).bits());
  std::vector<std::uint8_t> out(plaintext.begin(), plaintext.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= pad[i];
  return out;
}

std::vector<std::uint8_t> decrypt(std::span<const std::uint8_t> ciphertext, const CipherKey& key) {
  return encrypt(ciphertext, key);
}

std::string key_to_json(const CipherKey& key) {
  static constexpr char kHex[] = "0123456789abcdef";
  const auto cells = key.initial.cells();
  std::string hex;
  for (auto byte : pack_msb_first(cells)) {
    hex += kHex[byte >> 4];
    hex += kHex[byte & 0xF];
  }
  json j{{"format", "carand-cipher-key"},
         {"rule", key.rule},
         {"width", key.initial.width()},
         {"lattice", hex},
         {"extraction", to_string(key.extraction)},
         {"warmup", key.warmup_rows},
         {"boundary", to_string(key.initial.boundary())}};
  return j.dump(2) + "\n";
}

CipherKey key_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != "carand-cipher-key") throw FormatError("not a key file");
    const auto width = j.at("width").get<std::size_t>();
    const auto hex = j.at("lattice").get<std::string>();
    if (hex.size() != 2 * ((width + 7) / 8)) throw FormatError("lattice hex has the wrong length");
    std::vector<std::uint8_t> bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2) {
      bytes.push_back(static_cast<std::uint8_t>(std::stoul(hex.substr(i, 2), nullptr, 16)));
    }
    const auto cells = unpack_msb_first(bytes, width);
    CipherKey key;
    key.rule = j.at("rule").get<int>();
    key.initial = Lattice::from_cells(cells.bits(), parse_boundary(j.at("boundary").get<std::string>()));
    key.extraction = parse_extraction(j.at("extraction").get<std::string>());
    key.warmup_rows = j.at("warmup").get<std::size_t>();
    key.validate();
    return key;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed key: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid key: ") + e.what());
  } catch (const std::domain_error& e) {
    throw FormatError(std::string("invalid key: ") + e.what());
  }
}

}  // namespace carand
