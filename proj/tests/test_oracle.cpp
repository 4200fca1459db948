#include <gtest/gtest.h>

#include "garside/oracle/braid_words.hpp"
#include "garside/oracle/brute.hpp"
#include "garside/oracle/word_monoid.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::el;

TEST(Oracle, FreeGroupActionSeparatesBraids) {
  const oracle::ArtinWord a{1, 2};
  const oracle::ArtinWord b{2, 1};
  EXPECT_FALSE(oracle::same_braid(3, a, b).equal);
  EXPECT_TRUE(oracle::same_braid(3, {1, 2, 1}, {2, 1, 2}).equal);
  EXPECT_TRUE(oracle::same_braid(4, {1, 3, -1}, {3}).equal);
}

TEST(Oracle, BurauFallbackAgreesWithFreeGroup) {
  const oracle::ArtinWord a{1, 2, 1, -2, -1, 3};
  const oracle::ArtinWord b{-2, 1, 2, 3};
  const oracle::ArtinWord c{2, 1, 3};
  const auto exact_ab = oracle::same_braid(4, a, b);
  const auto exact_ac = oracle::same_braid(4, a, c);
  const auto burau_ab = oracle::same_braid(4, a, b, 1);
  const auto burau_ac = oracle::same_braid(4, a, c, 1);
  EXPECT_EQ(exact_ab.equal, burau_ab.equal);
  EXPECT_EQ(exact_ac.equal, burau_ac.equal);
  EXPECT_NE(exact_ab.method, burau_ab.method);
}

TEST(Oracle, BandEmbedding) {
  // a_{3,1} = sigma_2 sigma_1 sigma_2^{-1}
  const Word w{Letter::generator(bkl::Presentation(3).atom_index(3, 1))};
  EXPECT_TRUE(oracle::same_braid(3, oracle::to_artin(PresentationKind::bkl, 3, w), {2, 1, -2}).equal);
}

TEST(Oracle, WordMonoidClasses) {
  oracle::WordMonoid m(PresentationKind::artin, 3);
  EXPECT_EQ(m.word_class({0, 1, 0}).size(), 2u);
  EXPECT_EQ(m.simples().size(), 6u);
  EXPECT_TRUE(m.equal({0, 1, 0}, {1, 0, 1}));
  EXPECT_FALSE(m.equal({0, 1}, {1, 0}));
  oracle::WordMonoid b(PresentationKind::bkl, 4);
  EXPECT_EQ(b.simples().size(), 14u);
}

TEST(Oracle, BruteSummitSets) {
  artin::Presentation p(3);
  const auto sss = oracle::brute_sss(p, el(p, "1 1"));
  EXPECT_EQ(sss.size(), 2u);
  EXPECT_TRUE(sss.contains(el(p, "2 2")));
  EXPECT_EQ(oracle::brute_uss(p, el(p, "1 2")).size(), 2u);
  EXPECT_EQ(oracle::brute_sss(p, delta_power(p, 2)).size(), 1u);
}

TEST(Oracle, BudgetIsEnforced) {
  artin::Presentation p(6);
  EXPECT_THROW(oracle::brute_sss(p, el(p, "1 2")), BudgetExceeded);
  artin::Presentation q(3);
  oracle::OracleBudget tight;
  tight.max_length = 1;
  EXPECT_THROW(oracle::brute_sss(q, el(q, "1 1"), tight), BudgetExceeded);
}

TEST(Oracle, SmallIndexSuitePasses) {
  for (const auto& r : oracle::run_oracle_checks(4, 4, 5, 40)) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
  }
}

}  // namespace
}  // namespace garside
