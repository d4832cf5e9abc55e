#include "carand/keystream.hpp"

#include <stdexcept>

#include "carand/parallel.hpp"
#include "json.hpp"

namespace carand {

using nlohmann::json;

SplitMix64 sequence_rng(std::uint64_t master_seed, std::size_t index) {
  return SplitMix64(SplitMix64::mix(master_seed) ^ static_cast<std::uint64_t>(index));
}

std::string_view to_string(Extraction e) {
  return e == Extraction::row_concat ? "rows" : "center";
}

Extraction parse_extraction(std::string_view text) {
  if (text == "rows" || text == "row-concat") return Extraction::row_concat;
  if (text == "center" || text == "center-column") return Extraction::center_column;
  throw std::invalid_argument("unknown extraction '" + std::string(text) + "' (expected rows|center)");
}

std::string_view to_string(Boundary b) { return b == Boundary::cyclic ? "cyclic" : "fixed-zero"; }

Boundary parse_boundary(std::string_view text) {
  if (text == "cyclic") return Boundary::cyclic;
  if (text == "fixed-zero") return Boundary::fixed_zero;
  throw std::invalid_argument("unknown boundary '" + std::string(text) + "'");
}

void GenSpec::validate() const {
  if (rule < 0 || rule > 255) throw std::invalid_argument("rule must be in [0, 255]");
  if (seed_width < Lattice::kMinWidth) throw std::invalid_argument("seed width must be at least 3");
  if (bits_per_sequence == 0) throw std::invalid_argument("bits per sequence must be positive");
  if (sequences == 0) throw std::invalid_argument("sequence count must be positive");
  if (extraction == Extraction::row_concat && bits_per_sequence % seed_width != 0) {
    throw std::invalid_argument("bits per sequence (" + std::to_string(bits_per_sequence) +
                                ") must be a multiple of the seed width (" +
                                std::to_string(seed_width) + ") for row extraction");
  }
}

std::size_t GenSpec::rows_per_sequence() const {
  return extraction == Extraction::row_concat ? bits_per_sequence / seed_width : bits_per_sequence;
}

Lattice random_initial(std::size_t width, SplitMix64& rng, Boundary boundary) {
  Lattice row(width, boundary);
  auto words = row.mutable_words();
  for (auto& w : words) w = rng.next();
  if (const std::size_t used = width & 63; used != 0) {
    words.back() &= (std::uint64_t{1} << used) - 1;
  }
  return row;
}

BitSequence extract(std::span<const Lattice> rows, Extraction strategy, std::size_t warmup) {
  if (rows.size() <= warmup) {
    throw std::length_error("evolution has " + std::to_string(rows.size()) +
                            " rows, none left after discarding " + std::to_string(warmup));
  }
  BitSequence out;
  const auto kept = rows.subspan(warmup);
  if (strategy == Extraction::row_concat) {
    out.reserve(kept.size() * kept.front().width());
    for (const auto& row : kept) {
      for (std::size_t i = 0; i < row.width(); ++i) out.push_back(row.get(i));
    }
  } else {
    out.reserve(kept.size());
    for (const auto& row : kept) out.push_back(row.get(row.width() / 2));
  }
  return out;
}

BitSequence extract(std::span<const Lattice> rows, Extraction strategy, std::size_t warmup,
                    std::size_t bits) {
  BitSequence out = extract(rows, strategy, warmup);
  if (out.size() < bits) {
    throw std::length_error("evolution supplies " + std::to_string(out.size()) +
                            " bits after warmup, " + std::to_string(bits) + " requested");
  }
  out.truncate(bits);
  return out;
}

KeystreamGenerator::KeystreamGenerator(Lattice initial, const RuleTable& rule,
                                       Extraction strategy, std::size_t warmup)
    : row_(std::move(initial)), rule_(rule), strategy_(strategy) {
  for (std::size_t t = 0; t < warmup; ++t) row_ = step(row_, rule_);
}

void KeystreamGenerator::advance() {
  row_ = step(row_, rule_);
  offset_ = 0;
}

BitSequence KeystreamGenerator::take(std::size_t n) {
  BitSequence out;
  out.reserve(n);
  const std::size_t width = row_.width();
  if (strategy_ == Extraction::row_concat) {
    while (out.size() < n) {
      if (offset_ == width) advance();
      const std::size_t stop = std::min(width, offset_ + (n - out.size()));
      for (; offset_ < stop; ++offset_) out.push_back(row_.get(offset_));
    }
  } else {
    while (out.size() < n) {
      if (offset_ != 0) advance();
      out.push_back(row_.get(width / 2));
      offset_ = 1;
    }
  }
  return out;
}

BitSequence generate_sequence(const GenSpec& spec, std::size_t index) {
  spec.validate();
  if (index >= spec.sequences) {
    throw std::out_of_range("sequence index " + std::to_string(index) + " >= " +
                            std::to_string(spec.sequences));
  }
  auto rng = sequence_rng(spec.master_seed, index);
  KeystreamGenerator gen(random_initial(spec.seed_width, rng, spec.boundary),
                         RuleTable::from_number(spec.rule), spec.extraction, spec.warmup_rows);
  return gen.take(spec.bits_per_sequence);
}

BitSequence generate_corpus_bits(const GenSpec& spec, std::size_t jobs) {
  spec.validate();
  std::vector<BitSequence> parts(spec.sequences);
  parallel_for(spec.sequences, jobs, [&](std::size_t i) { parts[i] = generate_sequence(spec, i); });
  BitSequence corpus;
  corpus.reserve(static_cast<std::size_t>(spec.total_bits()));
  for (const auto& part : parts) corpus.append(part);
  return corpus;
}

std::string manifest_to_json(const CorpusManifest& m) {
  json j;
  j["format"] = "carand-corpus-manifest";
  j["version"] = 1;
  j["rule"] = m.spec.rule;
  j["seed_width"] = m.spec.seed_width;
  j["extraction"] = to_string(m.spec.extraction);
  j["warmup_rows"] = m.spec.warmup_rows;
  j["bits_per_sequence"] = m.spec.bits_per_sequence;
  j["sequences"] = m.spec.sequences;
  j["master_seed"] = m.spec.master_seed;
  j["boundary"] = to_string(m.spec.boundary);
  j["corpus_file"] = m.corpus_file;
  j["file_format"] = m.file_format == BitFormat::ascii ? "ascii" : "packed";
  j["total_bits"] = m.total_bits;
  j["offsets"] = m.offsets;
  j["sha256"] = m.sha256;
  return j.dump(2) + "\n";
}

CorpusManifest manifest_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (j.at("format").get<std::string>() != "carand-corpus-manifest") {
      throw FormatError("not a corpus manifest");
    }
    CorpusManifest m;
    m.spec.rule = j.at("rule").get<int>();
    m.spec.seed_width = j.at("seed_width").get<std::size_t>();
    m.spec.extraction = parse_extraction(j.at("extraction").get<std::string>());
    m.spec.warmup_rows = j.at("warmup_rows").get<std::size_t>();
    m.spec.bits_per_sequence = j.at("bits_per_sequence").get<std::size_t>();
    m.spec.sequences = j.at("sequences").get<std::size_t>();
    m.spec.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.spec.boundary = parse_boundary(j.at("boundary").get<std::string>());
    m.corpus_file = j.at("corpus_file").get<std::string>();
    const auto format = j.at("file_format").get<std::string>();
    if (format != "ascii" && format != "packed") throw FormatError("unknown file_format " + format);
    m.file_format = format == "ascii" ? BitFormat::ascii : BitFormat::packed;
    m.total_bits = j.at("total_bits").get<std::uint64_t>();
    m.offsets = j.at("offsets").get<std::vector<std::uint64_t>>();
    m.sha256 = j.at("sha256").get<std::string>();
    m.spec.validate();
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed manifest: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid manifest: ") + e.what());
  }
}

std::filesystem::path manifest_path_for(const std::filesystem::path& corpus) {
  auto p = corpus;
  p += ".manifest.json";
  return p;
}

CorpusManifest generate_corpus(const GenSpec& spec, const std::filesystem::path& out,
                               BitFormat format, std::size_t jobs) {
  return write_corpus(spec, generate_corpus_bits(spec, jobs), out, format);
}

CorpusManifest write_corpus(const GenSpec& spec, const BitSequence& corpus,
                            const std::filesystem::path& out, BitFormat format) {
  if (corpus.size() != spec.total_bits()) {
    throw std::invalid_argument("corpus length does not match its GenSpec");
  }
  CorpusManifest m;
  m.spec = spec;
  m.corpus_file = out.filename().string();
  m.file_format = format;
  m.total_bits = corpus.size();
  m.offsets.reserve(spec.sequences);
  for (std::size_t i = 0; i < spec.sequences; ++i) {
    m.offsets.push_back(static_cast<std::uint64_t>(i) * spec.bits_per_sequence);
  }
  m.sha256 = bits_sha256(corpus);
  save_bits(out, corpus, format);
  write_text_file(manifest_path_for(out), manifest_to_json(m));
  return m;
}

CorpusManifest load_manifest(const std::filesystem::path& path) {
  return manifest_from_json(read_text_file(path));
}

}  // namespace carand
