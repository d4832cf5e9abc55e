#include <gtest/gtest.h>

#include <random>

#include "carand/ca.hpp"
#include "support/naive.hpp"

namespace carand {
namespace {

Lattice from_mask(std::uint32_t mask, std::size_t w) {
  std::vector<std::uint8_t> cells(w);
  for (std::size_t i = 0; i < w; ++i) cells[i] = (mask >> i) & 1U;
  return Lattice::from_cells(cells);
}

TEST(RuleTable, Rule30MatchesDescendingNeighborhoodReading) {
  const auto r = rule_from_number(30);
  // neighborhoods 111, 110, ..., 000
  const std::array<int, 8> expected = {0, 0, 0, 1, 1, 1, 1, 0};
  for (int k = 0; k < 8; ++k) EXPECT_EQ(r.output(7 - k), expected[k]) << "neighborhood " << 7 - k;
}

TEST(RuleTable, ZeroAndFull) {
  for (unsigned i = 0; i < 8; ++i) {
    EXPECT_EQ(rule_from_number(0).output(i), 0);
    EXPECT_EQ(rule_from_number(255).output(i), 1);
  }
}

TEST(RuleTable, NumberRoundTrip) {
  for (int n = 0; n < 256; ++n) EXPECT_EQ(rule_from_number(n).number(), n);
}

TEST(RuleTable, OutOfRangeThrows) {
  EXPECT_THROW(rule_from_number(-1), std::domain_error);
  EXPECT_THROW(rule_from_number(256), std::domain_error);
}

TEST(RuleTable, MirrorOf30Is86) {
  EXPECT_EQ(rule_from_number(30).mirrored().number(), 86);
  EXPECT_EQ(rule_from_number(110).mirrored().number(), 124);
  for (int n = 0; n < 256; ++n) EXPECT_EQ(rule_from_number(n).mirrored().mirrored().number(), n);
}

TEST(Lattice, RejectsNarrowWidth) {
  EXPECT_THROW(Lattice(2), std::invalid_argument);
  EXPECT_NO_THROW(Lattice(3));
}

TEST(Lattice, StringRoundTrip) {
  const auto l = Lattice::from_string("0010110");
  EXPECT_EQ(l.width(), 7u);
  EXPECT_EQ(l.to_string(), "0010110");
  EXPECT_EQ(l.popcount(), 3u);
  EXPECT_THROW(Lattice::from_string("01x"), std::invalid_argument);
}

TEST(Step, Rule110Example) {
  EXPECT_EQ(step(Lattice::from_string("00100"), rule_from_number(110)).to_string(), "01100");
}

TEST(Step, Rule0Annihilates) {
  std::mt19937_64 gen(1);
  for (int k = 0; k < 20; ++k) {
    const auto s = from_mask(static_cast<std::uint32_t>(gen()), 29);
    EXPECT_EQ(step(s, rule_from_number(0)).popcount(), 0u);
    EXPECT_EQ(step(s, rule_from_number(255)).popcount(), 29u);
  }
}

TEST(Step, Rule204IsIdentity) {
  for (std::size_t w = 3; w <= 12; ++w) {
    for (std::uint32_t m = 0; m < (1U << w); ++m) {
      const auto s = from_mask(m, w);
      ASSERT_EQ(step(s, rule_from_number(204)), s);
    }
  }
}

TEST(Step, InputUnmodified) {
  const auto s = Lattice::from_string("0110100");
  const auto copy = s;
  (void)step(s, rule_from_number(30));
  EXPECT_EQ(s, copy);
}

TEST(Step, MatchesNaiveForAllRulesAndBoundaries) {
  std::mt19937_64 gen(42);
  for (std::size_t w : {3u, 5u, 63u, 64u, 65u, 127u, 128u, 129u, 200u}) {
    for (int rule = 0; rule < 256; ++rule) {
      for (auto b : {Boundary::cyclic, Boundary::fixed_zero}) {
        std::vector<std::uint8_t> cells(w);
        for (auto& c : cells) c = gen() & 1;
        const auto got = step(Lattice::from_cells(cells, b), rule_from_number(rule));
        ASSERT_EQ(got.cells(), naive::step(cells, rule, b)) << "w=" << w << " rule=" << rule;
        ASSERT_EQ(got.boundary(), b);
        ASSERT_EQ(got.width(), w);
      }
    }
  }
}

TEST(Evolve, Rule30Width7) {
  Lattice init(7);
  init.set(3, true);
  const auto rows = evolve(init, rule_from_number(30), 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].to_string(), "0001000");
  EXPECT_EQ(rows[1].to_string(), "0011100");
  // Brute force gives 0110010: cell 6 sees (1,0,0) → 1 only on the left.
  EXPECT_EQ(rows[2].to_string(), "0110010");
  EXPECT_EQ(rows[2].cells(), naive::step(rows[1].cells(), 30, Boundary::cyclic));
}

TEST(Evolve, ZeroStepsIsInitial) {
  const auto init = Lattice::from_string("101");
  const auto rows = evolve(init, rule_from_number(30), 0);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0], init);
}

TEST(Evolve, Rule255FillsInOneStep) {
  const auto rows = evolve(Lattice::from_string("0000100"), rule_from_number(255), 1);
  EXPECT_EQ(rows[1].to_string(), "1111111");
}

TEST(Evolve, CenterColumnOfRule30) {
  Lattice init(41);
  init.set(20, true);
  const auto rows = evolve(init, rule_from_number(30), 9);
  std::string column;
  for (const auto& r : rows) column += r.get(20) ? '1' : '0';
  EXPECT_EQ(column, "1101110011");
}

TEST(Properties, TranslationEquivarianceExhaustive) {
  for (int rule : {30, 54, 73, 110, 90, 150}) {
    const auto table = rule_from_number(rule);
    for (std::size_t w = 3; w <= 12; ++w) {
      for (std::uint32_t m = 0; m < (1U << w); ++m) {
        const auto s = from_mask(m, w);
        const auto next = step(s, table);
        for (std::size_t j = 0; j < w; ++j) {
          ASSERT_EQ(step(s.rotated(j), table), next.rotated(j)) << rule << " w=" << w << " m=" << m;
        }
      }
    }
  }
}

TEST(Properties, Rule30Rule86ReflectionDualityExhaustive) {
  const auto r30 = rule_from_number(30);
  const auto r86 = rule_from_number(86);
  for (std::size_t w = 3; w <= 12; ++w) {
    for (std::uint32_t m = 0; m < (1U << w); ++m) {
      const auto s = from_mask(m, w);
      ASSERT_EQ(step(s, r30).reversed(), step(s.reversed(), r86)) << "w=" << w << " m=" << m;
    }
  }
}

TEST(Metadata, Lists) {
  EXPECT_EQ(class3_rules().size(), 38u);
  EXPECT_EQ(simple_seed_complex_rules().size(), 13u);
  EXPECT_EQ(class3_rules().front(), 18);
  EXPECT_EQ(class3_rules().back(), 225);
}

TEST(Metadata, Subclasses) {
  const auto m30 = rule_metadata(30);
  EXPECT_EQ(m30.wolfram_class, WolframClass::class3);
  EXPECT_EQ(m30.subclasses, std::vector<Subclass>{Subclass::RD});
  EXPECT_TRUE(m30.chaotic_from_random_seed);
  EXPECT_TRUE(m30.complex_from_simple_seed);

  EXPECT_EQ(rule_metadata(73).subclasses, std::vector<Subclass>{Subclass::CDP});
  EXPECT_EQ(rule_metadata(54).subclasses, std::vector<Subclass>{Subclass::DKCA_asymmetric});
  EXPECT_EQ(rule_metadata(110).subclasses,
            (std::vector<Subclass>{Subclass::DP, Subclass::DKCA_symmetric}));

  const auto m4 = rule_metadata(4);
  EXPECT_EQ(m4.wolfram_class, WolframClass::unclassified);
  EXPECT_TRUE(m4.subclasses.empty());
  EXPECT_FALSE(rule_metadata(79).chaotic_from_random_seed);
  EXPECT_TRUE(rule_metadata(79).complex_from_simple_seed);
}

}  // namespace
}  // namespace carand
