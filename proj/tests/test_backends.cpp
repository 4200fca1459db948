#include <gtest/gtest.h>

#include <vector>

#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/oracle/checks.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::el;
using test::simple;

TEST(ArtinBackend, SimpleCountIsFactorial) {
  EXPECT_EQ(artin::Presentation(3).enumerate_simples().size(), 6u);
  EXPECT_EQ(artin::Presentation(4).enumerate_simples().size(), 24u);
  EXPECT_EQ(artin::Presentation(5).enumerate_simples().size(), 120u);
}

TEST(ArtinBackend, DeltaIsReversal) {
  artin::Presentation p(4);
  EXPECT_EQ(p.delta(), Permutation::reversal(4));
  EXPECT_EQ(p.atom_length(p.delta()), 6);
}

TEST(ArtinBackend, AtomDivisibility) {
  artin::Presentation p(3);
  for (int i = 0; i < 2; ++i) {
    EXPECT_TRUE(p.atom_left_divides(i, p.delta()));
    EXPECT_FALSE(p.atom_left_divides(i, p.identity()));
  }
  EXPECT_TRUE(p.atom_left_divides(0, p.atom(0)));
  EXPECT_FALSE(p.atom_left_divides(1, p.atom(0)));
}

TEST(ArtinBackend, SimpleFromWord) {
  artin::Presentation p(3);
  const std::vector<int> delta{0, 1, 0};
  EXPECT_EQ(simple_from_word(p, std::span<const int>(delta)), p.delta());
  EXPECT_EQ(simple_from_word(p, std::span<const int>()), p.identity());
  const std::vector<int> square{0, 0};
  EXPECT_THROW(simple_from_word(p, std::span<const int>(square)), ParseError);
}

TEST(ArtinBackend, SpellingRoundTrips) {
  for (int n : {3, 4}) {
    artin::Presentation p(n);
    for (const auto& s : p.enumerate_simples()) {
      const auto w = p.spell(s);
      EXPECT_EQ(simple_from_word(p, std::span<const int>(w)), s);
    }
  }
}

TEST(ArtinBackend, TauSwapsAtomsInB3) {
  artin::Presentation p(3);
  EXPECT_EQ(p.tau(p.atom(0), 1), p.atom(1));
  EXPECT_EQ(p.tau(p.delta(), 1), p.delta());
  EXPECT_EQ(p.tau(p.identity(), 1), p.identity());
  for (const auto& s : p.enumerate_simples()) {
    EXPECT_EQ(p.tau(s, 2), s);
  }
}

TEST(ArtinBackend, ConventionsAgreeWithWordMonoid) {
  for (int n : {3, 4}) {
    for (const auto& r : oracle::check_conventions(artin::Presentation(n))) {
      EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
    }
  }
}

TEST(BklBackend, SimpleCountIsCatalan) {
  EXPECT_EQ(bkl::Presentation(3).enumerate_simples().size(), 5u);
  EXPECT_EQ(bkl::Presentation(4).enumerate_simples().size(), 14u);
  EXPECT_EQ(bkl::Presentation(5).enumerate_simples().size(), 42u);
}

// Blocks are written 0-based: point i is string i + 1.
TEST(BklBackend, DeltaIsOneBlock) {
  bkl::Presentation p(4);
  EXPECT_EQ(bkl::blocks_of(p.delta()), (bkl::Blocks{{0, 1, 2, 3}}));
  EXPECT_EQ(bkl::blocks_of(p.identity()), (bkl::Blocks{{0}, {1}, {2}, {3}}));
  // delta = a_{4,3} a_{3,2} a_{2,1}
  EXPECT_EQ(el(p, "4.3 3.2 2.1"), delta_power(p, 1));
}

TEST(BklBackend, AtomDivisibilityIsSameBlock) {
  bkl::Presentation p(3);
  const auto s = p.from_blocks({{0, 1}, {2}});
  EXPECT_TRUE(p.atom_left_divides(p.atom_index(2, 1), s));
  EXPECT_FALSE(p.atom_left_divides(p.atom_index(3, 1), s));
  EXPECT_FALSE(p.atom_left_divides(p.atom_index(3, 2), s));
  for (int a = 0; a < p.atom_count(); ++a) {
    EXPECT_TRUE(p.atom_left_divides(a, p.delta()));
    EXPECT_FALSE(p.atom_left_divides(a, p.identity()));
  }
}

TEST(BklBackend, MeetIsCommonRefinement) {
  bkl::Presentation p(4);
  const auto a = p.from_blocks({{0, 2}, {1}, {3}});
  const auto b = p.from_blocks({{0, 1, 2}, {3}});
  EXPECT_EQ(p.meet(a, b), a);
  EXPECT_EQ(p.meet(a, p.delta()), a);
  EXPECT_EQ(p.meet(a, p.identity()), p.identity());
}

TEST(BklBackend, JoinMergesCrossingBlocks) {
  bkl::Presentation p(4);
  const auto a = p.from_blocks({{0, 2}, {1}, {3}});
  const auto b = p.from_blocks({{1, 3}, {0}, {2}});
  EXPECT_EQ(p.join(a, b), p.delta());
  EXPECT_EQ(p.join(a, p.identity()), a);
  EXPECT_EQ(p.join(a, p.delta()), p.delta());
}

TEST(BklBackend, TauMatchesConjugationByDelta) {
  bkl::Presentation p(3);
  const auto s = p.from_blocks({{0, 1}, {2}});
  const auto x = from_simple(p, s);
  const auto d = delta_power(p, 1);
  const auto expected = multiply(p, multiply(p, invert(p, d), x), d);
  EXPECT_EQ(from_simple(p, p.tau(s, 1)), expected);
  EXPECT_TRUE(test::same_element(p, from_simple(p, p.tau(s, 1)), expected));
  EXPECT_EQ(bkl::blocks_of(p.tau(s, 1)), (bkl::Blocks{{0}, {1, 2}}));
  EXPECT_EQ(p.tau(s, 3), s);
  EXPECT_EQ(p.tau(p.delta(), 1), p.delta());
}

TEST(BklBackend, NonCrossingPredicate) {
  EXPECT_TRUE(bkl::is_non_crossing({{0, 1}, {2, 3}}));
  EXPECT_TRUE(bkl::is_non_crossing({{0, 3}, {1, 2}}));
  EXPECT_FALSE(bkl::is_non_crossing({{0, 2}, {1, 3}}));
}

TEST(BklBackend, ConventionsAgreeWithWordMonoid) {
  for (int n : {3, 4, 5}) {
    for (const auto& r : oracle::check_conventions(bkl::Presentation(n))) {
      EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
    }
  }
}

TEST(BklBackend, SpellingRoundTrips) {
  bkl::Presentation p(5);
  for (const auto& s : p.enumerate_simples()) {
    const auto w = p.spell(s);
    EXPECT_EQ(simple_from_word(p, std::span<const int>(w)), s);
  }
}

}  // namespace
}  // namespace garside
