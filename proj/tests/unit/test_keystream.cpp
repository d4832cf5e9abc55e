#include <gtest/gtest.h>

#include <unistd.h>

#include <filesystem>

#include "carand/keystream.hpp"

namespace carand {
namespace {

namespace fs = std::filesystem;

fs::path temp_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("carand_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

GenSpec small_spec() {
  GenSpec s;
  s.seed_width = 20;
  s.bits_per_sequence = 400;
  s.sequences = 7;
  s.master_seed = 99;
  return s;
}

TEST(SplitMix64, ReferenceOutputs) {
  // First outputs for seed 0 of the published algorithm.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ULL);
  EXPECT_EQ(rng.next(), 0x06C45D188009454FULL);
}

TEST(RandomInitial, GoldenRow) {
  auto rng = sequence_rng(0, 0);
  EXPECT_EQ(random_initial(100, rng).to_string(),
            "1111010110110011101110001101111010011100000101010000010001000111"
            "001011111010011010011101100001010101");
}

TEST(RandomInitial, Deterministic) {
  auto a = sequence_rng(5, 3);
  auto b = sequence_rng(5, 3);
  EXPECT_EQ(random_initial(100, a), random_initial(100, b));
  auto c = sequence_rng(5, 4);
  auto d = sequence_rng(5, 3);
  EXPECT_NE(random_initial(100, c), random_initial(100, d));
}

TEST(Extract, RowConcat) {
  const auto rows = evolve(Lattice::from_string("0101"), rule_from_number(204), 2);
  EXPECT_EQ(extract(rows, Extraction::row_concat, 0).to_string(), "010101010101");
  EXPECT_EQ(extract(rows, Extraction::row_concat, 1).to_string(), "01010101");
  EXPECT_EQ(extract(rows, Extraction::row_concat, 0, 5).to_string(), "01010");
}

TEST(Extract, HundredRowsGiveTenThousandBits) {
  auto rng = sequence_rng(1, 0);
  const auto rows = evolve(random_initial(100, rng), rule_from_number(30), 99);
  EXPECT_EQ(extract(rows, Extraction::row_concat, 0).size(), 10000u);
}

TEST(Extract, CenterSingleRow) {
  const std::vector<Lattice> rows = {Lattice::from_string("00100")};
  EXPECT_EQ(extract(rows, Extraction::center_column, 0).to_string(), "1");
}

TEST(Extract, InsufficientDepthThrows) {
  const auto rows = evolve(Lattice::from_string("00100"), rule_from_number(30), 2);
  EXPECT_THROW(extract(rows, Extraction::row_concat, 3), std::length_error);
  EXPECT_THROW(extract(rows, Extraction::row_concat, 0, 16), std::length_error);
}

TEST(Extract, Rule30CenterColumn) {
  Lattice init(101);
  init.set(50, true);
  const auto rows = evolve(init, rule_from_number(30), 9);
  EXPECT_EQ(extract(rows, Extraction::center_column, 0).to_string(), "1101110011");
}

TEST(KeystreamGenerator, MatchesEvolveExtract) {
  auto rng = sequence_rng(3, 1);
  const auto init = random_initial(37, rng);
  for (auto strategy : {Extraction::row_concat, Extraction::center_column}) {
    for (std::size_t warmup : {0u, 5u}) {
      const auto rows = evolve(init, rule_from_number(30), 80);
      const std::size_t n = strategy == Extraction::row_concat ? 1000 : 60;
      const auto expected = extract(rows, strategy, warmup, n);
      KeystreamGenerator gen(init, rule_from_number(30), strategy, warmup);
      BitSequence got = gen.take(n / 3);
      got.append(gen.take(n - n / 3));
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(GenerateSequence, DefaultShapeAndDeterminism) {
  GenSpec spec;
  const auto a = generate_sequence(spec, 0);
  EXPECT_EQ(a.size(), 10000u);
  EXPECT_EQ(a, generate_sequence(spec, 0));
  EXPECT_EQ(a.slice(0, 64).to_string(),
            "1111010110110011101110001101111010011100000101010000010001000111");
  EXPECT_THROW(generate_sequence(spec, spec.sequences), std::out_of_range);
}

TEST(GenerateSequence, Rule0IsZeroAfterFirstRow) {
  GenSpec spec = small_spec();
  spec.rule = 0;
  const auto s = generate_sequence(spec, 0);
  for (std::size_t i = spec.seed_width; i < s.size(); ++i) ASSERT_EQ(s[i], 0);
}

TEST(GenerateSequence, Rule204IsPeriodic) {
  GenSpec spec = small_spec();
  spec.rule = 204;
  const auto s = generate_sequence(spec, 2);
  for (std::size_t i = spec.seed_width; i < s.size(); ++i) ASSERT_EQ(s[i], s[i - spec.seed_width]);
}

TEST(GenSpec, Validation) {
  GenSpec s;
  EXPECT_NO_THROW(s.validate());
  s.bits_per_sequence = 10001;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.extraction = Extraction::center_column;
  EXPECT_NO_THROW(s.validate());
  s.sequences = 0;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  GenSpec r;
  r.rule = 300;
  EXPECT_ANY_THROW(r.validate());
}

TEST(Corpus, GoldenHashOfTwoDefaultSequences) {
  GenSpec spec;
  spec.sequences = 2;
  EXPECT_EQ(bits_sha256(generate_corpus_bits(spec)),
            "02f8e89066045f2c066444ea70bf642bd53f998e9dec5214c33c64b1ccfa9fdc");
}

TEST(Corpus, IndependentOfJobs) {
  const auto spec = small_spec();
  const auto one = generate_corpus_bits(spec, 1);
  EXPECT_EQ(one.size(), spec.total_bits());
  EXPECT_EQ(one, generate_corpus_bits(spec, 4));
  for (std::size_t i = 0; i < spec.sequences; ++i) {
    EXPECT_EQ(one.slice(i * spec.bits_per_sequence, spec.bits_per_sequence), generate_sequence(spec, i));
  }
}

TEST(Corpus, SingleSequenceEqualsGenerateSequence) {
  auto spec = small_spec();
  spec.sequences = 1;
  EXPECT_EQ(generate_corpus_bits(spec), generate_sequence(spec, 0));
}

TEST(Corpus, FileAndManifestRoundTrip) {
  const auto dir = temp_dir("corpus");
  const auto spec = small_spec();
  for (auto format : {BitFormat::packed, BitFormat::ascii}) {
    const auto path = dir / (format == BitFormat::packed ? "c.bits" : "c.txt");
    const auto m = generate_corpus(spec, path, format);
    EXPECT_EQ(m.total_bits, spec.total_bits());
    EXPECT_EQ(m.offsets.size(), spec.sequences);
    EXPECT_EQ(m.offsets[3], 3 * spec.bits_per_sequence);
    const auto bits = load_bits(path);
    EXPECT_EQ(bits, generate_corpus_bits(spec));
    const auto loaded = load_manifest(manifest_path_for(path));
    EXPECT_EQ(loaded, m);
    // Regenerating from the manifest reproduces the corpus.
    EXPECT_EQ(bits_sha256(generate_corpus_bits(loaded.spec)), loaded.sha256);
  }
  fs::remove_all(dir);
}

TEST(Manifest, RejectsGarbage) {
  EXPECT_THROW(manifest_from_json("{"), FormatError);
  EXPECT_THROW(manifest_from_json(R"({"format":"other"})"), FormatError);
}

TEST(Parse, ExtractionAndBoundary) {
  EXPECT_EQ(parse_extraction("rows"), Extraction::row_concat);
  EXPECT_EQ(parse_extraction("center"), Extraction::center_column);
  EXPECT_EQ(parse_boundary("fixed-zero"), Boundary::fixed_zero);
  EXPECT_THROW(parse_extraction("diagonal"), std::invalid_argument);
}

}  // namespace
}  // namespace carand
