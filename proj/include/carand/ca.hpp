// Elementary (radius-1, binary) cellular automata.
//
// A rule is an 8-entry lookup keyed by the neighborhood value 4*l + 2*c + r,
// so bit i of the Wolfram rule number is the output for neighborhood i.
// Lattices are stored as packed 64-bit words; bit (i % 64) of word (i / 64)
// is cell i, cell 0 is the leftmost cell.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carand {

class RuleTable {
 public:
  /// Throws std::domain_error unless 0 <= number <= 255.
  static RuleTable from_number(int number);

  /// Neighborhood value 0..7 → output bit.
  std::uint8_t output(unsigned neighborhood) const { return outputs_.at(neighborhood); }
  const std::array<std::uint8_t, 8>& outputs() const { return outputs_; }
  int number() const;

  /// Left-right mirror image (rule 30 ↔ rule 86).
  RuleTable mirrored() const;

  friend bool operator==(const RuleTable&, const RuleTable&) = default;

 private:
  explicit RuleTable(std::array<std::uint8_t, 8> outputs) : outputs_(outputs) {}
  std::array<std::uint8_t, 8> outputs_;
};

inline RuleTable rule_from_number(int number) { return RuleTable::from_number(number); }

enum class Boundary { cyclic, fixed_zero };

class Lattice {
 public:
  static constexpr std::size_t kMinWidth = 3;

  /// All-zero row. Throws std::invalid_argument if width < 3.
  explicit Lattice(std::size_t width, Boundary boundary = Boundary::cyclic);

  static Lattice from_cells(std::span<const std::uint8_t> cells,
                            Boundary boundary = Boundary::cyclic);
  /// Accepts '0'/'1' characters only.
  static Lattice from_string(std::string_view text, Boundary boundary = Boundary::cyclic);

  std::size_t width() const { return width_; }
  Boundary boundary() const { return boundary_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t popcount() const;
  std::vector<std::uint8_t> cells() const;
  std::string to_string() const;

  /// Packed storage; unused high bits of the last word are always zero.
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  /// Cyclic rotation: cell i of the result is cell (i - shift) mod width.
  Lattice rotated(std::size_t shift) const;
  Lattice reversed() const;

  friend bool operator==(const Lattice&, const Lattice&) = default;

 private:
  std::size_t width_;
  Boundary boundary_;
  std::vector<std::uint64_t> words_;
};

/// One synchronous update. O(width / 64) word operations.
Lattice step(const Lattice& state, const RuleTable& rule);

/// Rows 0..steps, row 0 being `initial`.
std::vector<Lattice> evolve(const Lattice& initial, const RuleTable& rule, std::size_t steps);

enum class WolframClass { unclassified, class1, class2, class3, class4 };

enum class Subclass { RD, DP, CDP, DKCA_symmetric, DKCA_asymmetric };

struct RuleMetadata {
  int number = 0;
  WolframClass wolfram_class = WolframClass::unclassified;
  std::vector<Subclass> subclasses;
  /// Member of the 38 rules that behave chaotically from random seeds.
  bool chaotic_from_random_seed = false;
  /// Member of the 13 class-3/4 rules found from a single-cell seed.
  bool complex_from_simple_seed = false;
};

RuleMetadata rule_metadata(int number);

std::span<const int> class3_rules();
std::span<const int> simple_seed_complex_rules();

std::string_view to_string(WolframClass c);
std::string_view to_string(Subclass s);

}  // namespace carand
