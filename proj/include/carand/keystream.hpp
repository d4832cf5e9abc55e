// Turning CA evolutions into bit sequences and reproducible corpora.
//
// Seeding is fully specified so that a corpus is a pure function of its
// GenSpec:
//
//   SplitMix64::next():  state += 0x9E3779B97F4A7C15
//                        z = state
//                        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                        z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                        return z ^ (z >> 31)
//
//   Sequence `index` of a corpus with master seed S draws its initial row
//   from SplitMix64(mix(S) ^ index), where mix() is the output finalizer
//   above applied to S without the increment. Cell j of a random row is
//   bit (j % 64) of the (j / 64)-th output (least significant bit first).

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "carand/bit_sequence.hpp"
#include "carand/bitio.hpp"
#include "carand/ca.hpp"

namespace carand {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Generator for the initial row of sequence `index` under `master_seed`.
SplitMix64 sequence_rng(std::uint64_t master_seed, std::size_t index);

enum class Extraction {
  row_concat,     ///< whole rows, top to bottom
  center_column,  ///< one bit per row from cell width / 2
};

std::string_view to_string(Extraction e);
/// Accepts "rows", "row-concat", "center", "center-column".
Extraction parse_extraction(std::string_view text);

std::string_view to_string(Boundary b);
Boundary parse_boundary(std::string_view text);

struct GenSpec {
  int rule = 30;
  std::size_t seed_width = 100;
  Extraction extraction = Extraction::row_concat;
  std::size_t warmup_rows = 0;
  std::size_t bits_per_sequence = 10000;
  std::size_t sequences = 1000;
  std::uint64_t master_seed = 0;
  Boundary boundary = Boundary::cyclic;

  /// Throws std::invalid_argument on a broken invariant.
  void validate() const;
  /// Rows kept after warmup to yield bits_per_sequence bits.
  std::size_t rows_per_sequence() const;
  std::uint64_t total_bits() const {
    return static_cast<std::uint64_t>(bits_per_sequence) * sequences;
  }

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

Lattice random_initial(std::size_t width, SplitMix64& rng, Boundary boundary = Boundary::cyclic);

/// Discards `warmup` rows, then reads every remaining row (row-concat) or
/// the centre cell of every remaining row. Throws std::length_error when no
/// rows remain.
BitSequence extract(std::span<const Lattice> rows, Extraction strategy, std::size_t warmup);

/// As above but exactly `bits` long; std::length_error if the evolution is
/// too shallow.
BitSequence extract(std::span<const Lattice> rows, Extraction strategy, std::size_t warmup,
                    std::size_t bits);

/// Streaming equivalent of evolve() + extract(): holds one row at a time.
class KeystreamGenerator {
 public:
  KeystreamGenerator(Lattice initial, const RuleTable& rule, Extraction strategy,
                     std::size_t warmup);

  BitSequence take(std::size_t n);

 private:
  void advance();

  Lattice row_;
  RuleTable rule_;
  Extraction strategy_;
  std::size_t offset_ = 0;  // next unread cell of row_ (row-concat)
};

BitSequence generate_sequence(const GenSpec& spec, std::size_t index);

/// All sequences concatenated in index order. Parallel over indices; the
/// result does not depend on `jobs`.
BitSequence generate_corpus_bits(const GenSpec& spec, std::size_t jobs = 1);

struct CorpusManifest {
  GenSpec spec;
  std::string corpus_file;  ///< file name, relative to the manifest
  BitFormat file_format = BitFormat::packed;
  std::uint64_t total_bits = 0;
  std::vector<std::uint64_t> offsets;  ///< start bit of each sequence
  std::string sha256;                  ///< bits_sha256() of the corpus

  friend bool operator==(const CorpusManifest&, const CorpusManifest&) = default;
};

std::string manifest_to_json(const CorpusManifest& manifest);
/// Throws FormatError on malformed input.
CorpusManifest manifest_from_json(std::string_view text);

/// "<corpus>.manifest.json"
std::filesystem::path manifest_path_for(const std::filesystem::path& corpus);

/// Writes the corpus and its manifest; returns the manifest.
CorpusManifest generate_corpus(const GenSpec& spec, const std::filesystem::path& out,
                               BitFormat format, std::size_t jobs = 1);

/// As generate_corpus() for bits already produced by generate_corpus_bits(spec).
CorpusManifest write_corpus(const GenSpec& spec, const BitSequence& corpus,
                            const std::filesystem::path& out, BitFormat format);

CorpusManifest load_manifest(const std::filesystem::path& path);

}  // namespace carand
