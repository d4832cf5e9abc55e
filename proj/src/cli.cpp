#include "carand/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "carand/battery.hpp"
#include "carand/bitio.hpp"
#include "carand/ca.hpp"
#include "carand/cipher.hpp"
#include "carand/keystream.hpp"
#include "carand/parallel.hpp"
#include "carand/report.hpp"

namespace carand::cli {

namespace fs = std::filesystem;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  int rule = 30;
  std::vector<int> rules;
  std::size_t width = 0;  // 0 → subcommand default
  std::size_t bits = 10000;
  std::size_t sequences = 1000;
  std::uint64_t seed = 0;
  std::string extraction = "rows";
  std::size_t warmup = 0;
  std::size_t stream_length = 1'000'000;
  std::size_t streams = 10;
  double alpha = 0.01;
  std::string format = "text";
  std::size_t jobs = 0;
  std::string out;
  std::vector<std::string> inputs;
  std::size_t repeats = 3;
  std::string key;
  std::string key_out;
  std::size_t steps = 40;
};

std::uint64_t effective_seed(const Options& o) {
  const char* env = std::getenv("CARAND_SEED");
  if (env == nullptr || *env == '\0') return o.seed;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used, 0);
    if (used != std::string_view(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string("CARAND_SEED is not an unsigned integer: ") + env);
  }
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_text_file(o.out, text);
  }
}

std::size_t width_or(const Options& o, std::size_t fallback) { return o.width ? o.width : fallback; }

BatteryConfig battery_config(const Options& o) {
  BatteryConfig c;
  c.stream_length = o.stream_length;
  c.streams = o.streams;
  c.alpha = o.alpha;
  if (!o.rules.empty()) c.rules = o.rules;
  c.validate();
  return c;
}

int do_generate(const Options& o, std::ostream& out) {
  GenSpec spec;
  spec.rule = o.rule;
  spec.seed_width = width_or(o, 100);
  spec.extraction = parse_extraction(o.extraction);
  spec.warmup_rows = o.warmup;
  spec.bits_per_sequence = o.bits;
  spec.sequences = o.sequences;
  spec.master_seed = effective_seed(o);
  spec.validate();
  const auto m = generate_corpus(spec, o.out, format_for_path(o.out), resolve_jobs(o.jobs));
  out << "wrote " << m.total_bits << " bits to " << o.out << " (manifest "
      << manifest_path_for(o.out).string() << ", sha256 " << m.sha256 << ")\n";
  return kOk;
}

int do_test(const Options& o, std::ostream& out) {
  if (!o.rules.empty() && o.rules.size() != o.inputs.size()) {
    throw UsageError("--rules needs one rule per corpus file");
  }
  std::vector<RuleCorpus> corpora;
  for (std::size_t i = 0; i < o.inputs.size(); ++i) {
    const fs::path path = o.inputs[i];
    RuleCorpus c;
    c.bits = load_bits(path);
    const auto manifest = manifest_path_for(path);
    if (!o.rules.empty()) {
      c.rule = o.rules[i];
    } else if (fs::exists(manifest)) {
      const auto m = load_manifest(manifest);
      if (m.sha256 != bits_sha256(c.bits)) throw FormatError(path.string() + " does not match its manifest");
      c.rule = m.spec.rule;
    } else {
      c.rule = o.rule;
    }
    corpora.push_back(std::move(c));
  }
  auto config = battery_config(o);
  const auto report = run_battery(corpora, config, resolve_jobs(o.jobs));
  emit(o, render_report(report, parse_report_format(o.format)), out);
  return report.complete() ? kOk : kBatteryIncomplete;
}

int do_report(const Options& o, std::ostream& out) {
  const auto text = read_text_file(o.inputs.at(0));
  const auto format = parse_report_format(o.format);
  if (text.find("carand-reproduce-bundle") != std::string::npos) {
    const auto bundle = parse_bundle_json(text);
    emit(o, render_bundle(bundle, format), out);
    return bundle.modal.complete() ? kOk : kBatteryIncomplete;
  }
  const auto report = parse_report_json(text);
  emit(o, render_report(report, format), out);
  return report.complete() ? kOk : kBatteryIncomplete;
}

int do_reproduce(const Options& o, std::ostream& out) {
  ReproduceConfig config;
  config.spec.seed_width = width_or(o, 100);
  config.spec.extraction = parse_extraction(o.extraction);
  config.spec.warmup_rows = o.warmup;
  config.spec.bits_per_sequence = o.bits;
  config.spec.sequences = o.sequences;
  config.battery = battery_config(o);
  config.repeats = o.repeats;
  if (!o.out.empty()) {
    config.corpus_dir = fs::path(o.out).parent_path();
    if (config.corpus_dir.empty()) config.corpus_dir = ".";
  }
  const auto bundle = reproduce_paper(config, resolve_jobs(o.jobs));
  emit(o, render_bundle(bundle, parse_report_format(o.format)), out);
  return bundle.modal.complete() ? kOk : kBatteryIncomplete;
}

CipherKey cipher_key(const Options& o, bool generated_allowed) {
  if (!o.key.empty()) return key_from_json(read_text_file(o.key));
  if (!generated_allowed) throw UsageError("decrypt needs --key");
  auto key = random_key(o.rule, width_or(o, 256), effective_seed(o), parse_extraction(o.extraction),
                        o.warmup ? o.warmup : 64);
  return key;
}

int do_cipher(const Options& o, bool encrypting, std::ostream& out) {
  const auto key = cipher_key(o, encrypting);
  if (!o.key_out.empty()) write_text_file(o.key_out, key_to_json(key));
  const auto input = read_binary_file(o.inputs.at(0));
  const auto output = encrypting ? encrypt(input, key) : decrypt(input, key);
  if (o.out.empty()) {
    out.write(reinterpret_cast<const char*>(output.data()), static_cast<std::streamsize>(output.size()));
  } else {
    write_binary_file(o.out, output);
  }
  return kOk;
}

int do_evolve(const Options& o, bool seeded, std::ostream& out) {
  const std::size_t width = width_or(o, 79);
  Lattice initial(width);
  if (seeded || std::getenv("CARAND_SEED") != nullptr) {
    SplitMix64 rng(effective_seed(o));
    initial = random_initial(width, rng);
  } else {
    initial.set(width / 2, 1);
  }
  const auto rows = evolve(initial, RuleTable::from_number(o.rule), o.steps);
  std::string text;
  const bool pbm = !o.out.empty() && fs::path(o.out).extension() == ".pbm";
  if (pbm) {
    text = "P1\n" + std::to_string(width) + " " + std::to_string(rows.size()) + "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < width; ++i) {
        text += row.get(i) ? '1' : '0';
        text += i + 1 == width ? '\n' : ' ';
      }
    }
  } else {
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < width; ++i) text += row.get(i) ? '#' : '.';
      text += '\n';
    }
  }
  emit(o, text, out);
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cellular-automaton bit generator and NIST SP 800-22 battery", "carand"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> extractions = {"rows", "center"};
  const std::vector<std::string> formats = {"text", "csv", "json"};

  auto add_jobs = [&](CLI::App* c) {
    c->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  };
  auto add_out = [&](CLI::App* c, const char* what) { return c->add_option("-o,--out", o.out, what); };
  auto add_battery = [&](CLI::App* c) {
    c->add_option("--stream-length", o.stream_length, "Bits per tested stream")->capture_default_str();
    c->add_option("--streams", o.streams, "Streams carved from each corpus")->capture_default_str();
    c->add_option("--alpha", o.alpha, "Significance level")->capture_default_str();
    c->add_option("--format", o.format, "Report format")->check(CLI::IsMember(formats))->capture_default_str();
  };
  auto add_gen = [&](CLI::App* c) {
    c->add_option("--width", o.width, "Lattice width (default 100)");
    c->add_option("--bits", o.bits, "Bits per sequence")->capture_default_str();
    c->add_option("--sequences", o.sequences, "Sequences per corpus")->capture_default_str();
    c->add_option("--extraction", o.extraction, "rows or center")
        ->check(CLI::IsMember(extractions))
        ->capture_default_str();
    c->add_option("--warmup", o.warmup, "Rows discarded before extraction")->capture_default_str();
  };

  auto* gen = app.add_subcommand("generate", "Write a CA corpus and its manifest");
  gen->add_option("--rule", o.rule, "Wolfram rule number")->capture_default_str();
  add_gen(gen);
  gen->add_option("--seed", o.seed, "Master seed (CARAND_SEED overrides)")->capture_default_str();
  add_jobs(gen);
  add_out(gen, "Corpus file (.txt/.ascii for ASCII, otherwise packed)")->required();

  auto* test = app.add_subcommand("test", "Run the battery over corpus files");
  test->add_option("corpus", o.inputs, "Corpus files")->required();
  auto* test_rule = test->add_option("--rule", o.rule, "Rule label for corpora without a manifest");
  auto* test_rules = test->add_option("--rules", o.rules, "One rule label per corpus")->delimiter(',');
  test_rule->excludes(test_rules);
  add_battery(test);
  add_jobs(test);
  add_out(test, "Report file (default stdout)");

  auto* report = app.add_subcommand("report", "Re-render a JSON report");
  report->add_option("report", o.inputs, "JSON report or reproduce bundle")
      ->required()
      ->expected(1)
      ;
  report->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
  add_out(report, "Output file (default stdout)");

  auto* repro = app.add_subcommand("reproduce", "Generate, test and tabulate rules 30/54/73/110");
  repro->add_option("--rules", o.rules, "Rules (first is the expected leader)")->delimiter(',');
  add_gen(repro);
  add_battery(repro);
  repro->add_option("--repeats", o.repeats, "Independent repeats")->capture_default_str()->check(CLI::PositiveNumber);
  add_jobs(repro);
  add_out(repro, "Report file; corpora are written next to it");

  std::optional<bool> encrypting;
  auto add_cipher = [&](CLI::App* c, bool enc) {
    c->add_option("input", o.inputs, "Input file")->required()->expected(1);
    auto* key = c->add_option("--key", o.key, "Key file (JSON)");
    add_out(c, "Output file (default stdout)");
    if (enc) {
      auto* rule = c->add_option("--rule", o.rule, "Rule for a generated key");
      auto* width = c->add_option("--width", o.width, "Width of a generated key (default 256)");
      auto* seed = c->add_option("--seed", o.seed, "Seed of a generated key");
      auto* ext = c->add_option("--extraction", o.extraction, "Extraction of a generated key")
                      ->check(CLI::IsMember(extractions));
      auto* warm = c->add_option("--warmup", o.warmup, "Warmup of a generated key (default 64)");
      c->add_option("--key-out", o.key_out, "Save the key used");
      for (auto* opt : {rule, width, seed, ext, warm}) key->excludes(opt);
    }
    c->callback([&encrypting, enc] { encrypting = enc; });
  };
  auto* enc = app.add_subcommand("encrypt", "XOR a file with a CA keystream (demo, not secure)");
  add_cipher(enc, true);
  auto* dec = app.add_subcommand("decrypt", "Inverse of encrypt");
  add_cipher(dec, false);

  auto* evo = app.add_subcommand("evolve", "Print an evolution as text or PBM");
  evo->add_option("--rule", o.rule, "Wolfram rule number")->capture_default_str();
  evo->add_option("--width", o.width, "Lattice width (default 79)");
  evo->add_option("--steps", o.steps, "Rows after the initial one")->capture_default_str();
  auto* evo_seed = evo->add_option("--seed", o.seed, "Random initial row (default: single centre cell)");
  add_out(evo, "Output (.pbm for a bitmap, otherwise text)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return do_generate(o, out);
    if (test->parsed()) return do_test(o, out);
    if (report->parsed()) return do_report(o, out);
    if (repro->parsed()) return do_reproduce(o, out);
    if (encrypting) return do_cipher(o, *encrypting, out);
    if (evo->parsed()) return do_evolve(o, evo_seed->count() > 0, out);
  } catch (const IoError& e) {
    err << "carand: " << e.what() << "\n";
    return kIo;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "carand: " << e.what() << "\n";
    return kIo;
  } catch (const UsageError& e) {
    err << "carand: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error, length_error, out_of_range
    err << "carand: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv = {"carand"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace carand::cli
