#include "carand/ca.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace carand {

namespace {

constexpr std::size_t words_for(std::size_t width) { return (width + 63) / 64; }

constexpr std::uint64_t tail_mask(std::size_t width) {
  const std::size_t used = width & 63;
  return used == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << used) - 1;
}

// Lists as published for the elementary rule space.
constexpr std::array<int, 38> kClass3 = {18,  22,  30,  45,  54,  60,  73,  75,  86,  89,
                                         90,  101, 102, 105, 106, 109, 110, 120, 122, 124,
                                         126, 129, 135, 137, 146, 147, 149, 150, 151, 153,
                                         161, 165, 169, 182, 183, 193, 195, 225};
constexpr std::array<int, 13> kSimpleSeed = {30,  45,  75,  79,  86,  89, 101,
                                             110, 124, 135, 137, 149, 193};

}  // namespace

RuleTable RuleTable::from_number(int number) {
  if (number < 0 || number > 255) {
    throw std::domain_error("rule number must be in [0, 255], got " + std::to_string(number));
  }
  std::array<std::uint8_t, 8> outputs{};
  for (unsigned i = 0; i < 8; ++i) outputs[i] = static_cast<std::uint8_t>((number >> i) & 1);
  return RuleTable(outputs);
}

int RuleTable::number() const {
  int n = 0;
  for (unsigned i = 0; i < 8; ++i) n |= outputs_[i] << i;
  return n;
}

RuleTable RuleTable::mirrored() const {
  std::array<std::uint8_t, 8> out{};
  for (unsigned i = 0; i < 8; ++i) {
    const unsigned l = (i >> 2) & 1, c = (i >> 1) & 1, r = i & 1;
    out[(r << 2) | (c << 1) | l] = outputs_[i];
  }
  return RuleTable(out);
}

Lattice::Lattice(std::size_t width, Boundary boundary)
    : width_(width), boundary_(boundary), words_(words_for(width), 0) {
  if (width < kMinWidth) {
    throw std::invalid_argument("lattice width must be at least 3, got " + std::to_string(width));
  }
}

Lattice Lattice::from_cells(std::span<const std::uint8_t> cells, Boundary boundary) {
  Lattice lattice(cells.size(), boundary);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] > 1) throw std::invalid_argument("lattice cells must be 0 or 1");
    lattice.set(i, cells[i] != 0);
  }
  return lattice;
}

Lattice Lattice::from_string(std::string_view text, Boundary boundary) {
  Lattice lattice(text.size(), boundary);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') {
      throw std::invalid_argument("lattice string may only contain '0' and '1'");
    }
    lattice.set(i, text[i] == '1');
  }
  return lattice;
}

void Lattice::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

std::size_t Lattice::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::uint8_t> Lattice::cells() const {
  std::vector<std::uint8_t> out(width_);
  for (std::size_t i = 0; i < width_; ++i) out[i] = get(i) ? 1 : 0;
  return out;
}

std::string Lattice::to_string() const {
  std::string out(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (get(i)) out[i] = '1';
  }
  return out;
}

Lattice Lattice::rotated(std::size_t shift) const {
  Lattice out(width_, boundary_);
  shift %= width_;
  for (std::size_t i = 0; i < width_; ++i) {
    if (get(i)) out.set((i + shift) % width_, true);
  }
  return out;
}

Lattice Lattice::reversed() const {
  Lattice out(width_, boundary_);
  for (std::size_t i = 0; i < width_; ++i) {
    if (get(i)) out.set(width_ - 1 - i, true);
  }
  return out;
}

Lattice step(const Lattice& state, const RuleTable& rule) {
  const std::size_t width = state.width();
  const auto in = state.words();
  const std::size_t nw = in.size();
  const bool cyclic = state.boundary() == Boundary::cyclic;
  const std::uint64_t mask = tail_mask(width);

  Lattice next(width, state.boundary());
  auto out = next.mutable_words();

  const std::uint64_t first_cell = in[0] & 1U;
  const std::uint64_t last_cell = (in[nw - 1] >> ((width - 1) & 63)) & 1U;

  // Rule bits as all-ones / all-zeros word masks.
  std::array<std::uint64_t, 8> select{};
  for (unsigned k = 0; k < 8; ++k) select[k] = rule.output(k) ? ~std::uint64_t{0} : 0;

  for (std::size_t k = 0; k < nw; ++k) {
    const std::uint64_t c = in[k];
    std::uint64_t l = c << 1;
    if (k > 0) {
      l |= in[k - 1] >> 63;
    } else if (cyclic) {
      l |= last_cell;
    }
    std::uint64_t r = c >> 1;
    if (k + 1 < nw) r |= in[k + 1] << 63;
    if (k + 1 == nw) {
      l &= mask;
      if (cyclic) r |= first_cell << ((width - 1) & 63);
    }
    const std::uint64_t nl = ~l, nc = ~c, nr = ~r;
    std::uint64_t o = (select[0] & nl & nc & nr) | (select[1] & nl & nc & r) |
                      (select[2] & nl & c & nr) | (select[3] & nl & c & r) |
                      (select[4] & l & nc & nr) | (select[5] & l & nc & r) |
                      (select[6] & l & c & nr) | (select[7] & l & c & r);
    if (k + 1 == nw) o &= mask;
    out[k] = o;
  }
  return next;
}

std::vector<Lattice> evolve(const Lattice& initial, const RuleTable& rule, std::size_t steps) {
  std::vector<Lattice> rows;
  rows.reserve(steps + 1);
  rows.push_back(initial);
  for (std::size_t t = 0; t < steps; ++t) rows.push_back(step(rows.back(), rule));
  return rows;
}

std::span<const int> class3_rules() { return kClass3; }
std::span<const int> simple_seed_complex_rules() { return kSimpleSeed; }

RuleMetadata rule_metadata(int number) {
  RuleMetadata meta;
  meta.number = number;
  meta.chaotic_from_random_seed =
      std::find(kClass3.begin(), kClass3.end(), number) != kClass3.end();
  meta.complex_from_simple_seed =
      std::find(kSimpleSeed.begin(), kSimpleSeed.end(), number) != kSimpleSeed.end();
  // Rule 79 appears only in the 13-rule list, which mixes classes 3 and 4,
  // so its class stays unresolved.
  if (meta.chaotic_from_random_seed) meta.wolfram_class = WolframClass::class3;

  switch (number) {
    case 30: meta.subclasses = {Subclass::RD}; break;
    case 54: meta.subclasses = {Subclass::DKCA_asymmetric}; break;
    case 73: meta.subclasses = {Subclass::CDP}; break;
    case 110: meta.subclasses = {Subclass::DP, Subclass::DKCA_symmetric}; break;
    default: break;
  }
  return meta;
}

std::string_view to_string(WolframClass c) {
  switch (c) {
    case WolframClass::class1: return "1";
    case WolframClass::class2: return "2";
    case WolframClass::class3: return "3";
    case WolframClass::class4: return "4";
    case WolframClass::unclassified: break;
  }
  return "unclassified";
}

std::string_view to_string(Subclass s) {
  switch (s) {
    case Subclass::RD: return "RD";
    case Subclass::DP: return "DP";
    case Subclass::CDP: return "CDP";
    case Subclass::DKCA_symmetric: return "DKCA-sym";
    case Subclass::DKCA_asymmetric: return "DKCA-asym";
  }
  return "?";
}

}  // namespace carand
