#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "garside/conjugacy.hpp"
#include "garside/oracle/brute.hpp"
#include "garside/random.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::el;

class ConjugacyB3 : public ::testing::Test {
 protected:
  artin::Presentation p{3};
};

TEST_F(ConjugacyB3, DecideExamples) {
  const auto x = el(p, "1 1");
  const auto y = el(p, "2 2");
  const auto d = is_conjugate(p, x, y);
  ASSERT_TRUE(d.conjugate);
  ASSERT_TRUE(d.witness);
  EXPECT_EQ(conjugate(p, x, d.witness->conjugator), y);
  EXPECT_TRUE(test::same_element(p, conjugate(p, x, d.witness->conjugator), y));

  const auto no = is_conjugate(p, x, el(p, "1 1 1"));
  EXPECT_FALSE(no.conjugate);
  EXPECT_FALSE(no.witness);

  const auto self = is_conjugate(p, x, x);
  ASSERT_TRUE(self.conjugate);
  EXPECT_EQ(conjugate(p, x, self.witness->conjugator), x);
}

TEST_F(ConjugacyB3, DecideRejectsEqualBoundsNonConjugates) {
  // Same inf and sup on the summit, different exponent sums.
  const auto x = el(p, "1 1");
  const auto y = el(p, "1 -2");
  EXPECT_FALSE(is_conjugate(p, x, y).conjugate);
}

TEST_F(ConjugacyB3, SearchExamples) {
  const auto x = el(p, "1 1");
  const auto same = conjugacy_search(p, x, x, 1);
  EXPECT_EQ(same.steps, 0u);
  EXPECT_EQ(conjugate(p, x, same.witness.conjugator), x);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto r = conjugacy_search(p, x, el(p, "2 2"), seed);
    EXPECT_EQ(conjugate(p, x, r.witness.conjugator), el(p, "2 2"));
  }
  const auto r = conjugacy_search(p, el(p, "1 2"), el(p, "2 1"), 4);
  EXPECT_EQ(conjugate(p, el(p, "1 2"), r.witness.conjugator), el(p, "2 1"));
}

TEST_F(ConjugacyB3, SearchOnNonConjugatesIsAContractViolation) {
  EXPECT_THROW(conjugacy_search(p, el(p, "1 1"), el(p, "1 1 1"), 1), ContractViolation);
  EXPECT_THROW(conjugacy_search(p, el(p, "1 1"), el(p, "1 -2"), 1), ContractViolation);
}

TEST_F(ConjugacyB3, TamperedWitnessIsRejected) {
  const auto x = el(p, "1 1");
  const auto y = el(p, "2 2");
  std::function<void(CanonicalForm<artin::Presentation>&)> tamper =
      [&](CanonicalForm<artin::Presentation>& c) { c = multiply(p, c, el(p, "1")); };
  EXPECT_THROW(is_conjugate(p, x, y, tamper), VerificationFailure);
  SearchOptions<artin::Presentation> options;
  options.tamper = tamper;
  EXPECT_THROW(conjugacy_search(p, x, y, 3, options), VerificationFailure);
}

template <GarsidePresentation P>
void search_instances(const P& p, int count, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const auto x = random_product(p, 1 + rng.uniform_int(6), rng);
    const auto w = random_product(p, 1 + rng.uniform_int(4), rng);
    const auto y = conjugate(p, x, multiply(p, w, delta_power(p, -rng.uniform_int(3))));
    const auto a = conjugacy_search(p, x, y, 100 + static_cast<std::uint64_t>(i));
    EXPECT_EQ(conjugate(p, x, a.witness.conjugator), y);
    const auto b = conjugacy_search(p, x, y, 100 + static_cast<std::uint64_t>(i));
    EXPECT_EQ(a.witness.conjugator, b.witness.conjugator);
    EXPECT_EQ(a.steps, b.steps);
    const auto d = is_conjugate(p, x, y);
    ASSERT_TRUE(d.conjugate);
    EXPECT_EQ(conjugate(p, x, d.witness->conjugator), y);
  }
}

TEST(Conjugacy, SearchVerifiesAndIsDeterministic) {
  search_instances(artin::Presentation(4), 30, 1);
  search_instances(artin::Presentation(6), 20, 2);
  search_instances(bkl::Presentation(4), 30, 3);
  search_instances(bkl::Presentation(6), 20, 4);
}

// Conjugate iff the brute-force super summit sets meet.
template <GarsidePresentation P>
void decide_against_oracle(const P& p, int pairs, std::uint64_t seed) {
  Rng rng(seed);
  int positives = 0;
  int negatives = 0;
  for (int i = 0; i < pairs; ++i) {
    const auto x = random_product(p, 1 + rng.uniform_int(4), rng);
    const auto y = rng.coin() ? conjugate(p, x, random_product(p, 1 + rng.uniform_int(3), rng))
                              : random_product(p, x.len() == 0 ? 1 : x.len(), rng);
    const auto sx = oracle::brute_sss(p, x);
    const auto sy = oracle::brute_sss(p, y);
    const bool expected = std::any_of(sy.begin(), sy.end(), [&](const auto& z) { return sx.contains(z); });
    const auto d = is_conjugate(p, x, y);
    EXPECT_EQ(d.conjugate, expected) << format_element(p, x) << " vs " << format_element(p, y);
    if (d.witness) {
      EXPECT_EQ(conjugate(p, x, d.witness->conjugator), y);
    }
    (expected ? positives : negatives) += 1;
  }
  EXPECT_GT(positives, pairs / 5);
  EXPECT_GT(negatives, pairs / 5);
}

TEST(Conjugacy, DecisionMatchesOracle) {
  decide_against_oracle(artin::Presentation(3), 200, 41);
  decide_against_oracle(artin::Presentation(4), 200, 42);
  decide_against_oracle(bkl::Presentation(3), 200, 43);
  decide_against_oracle(bkl::Presentation(4), 200, 44);
}

TEST(Conjugacy, EverySeedGivesAValidWitness) {
  bkl::Presentation p(5);
  Rng rng(17);
  const auto x = random_product(p, 6, rng);
  const auto y = conjugate(p, x, random_product(p, 4, rng));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(conjugate(p, x, conjugacy_search(p, x, y, seed).witness.conjugator), y);
  }
}

TEST(Conjugacy, TinyCapUsesFallback) {
  artin::Presentation p(5);
  Rng rng(9);
  SearchOptions<artin::Presentation> options;
  options.step_cap = 0;
  int fallbacks = 0;
  for (int i = 0; i < 30; ++i) {
    const auto x = random_product(p, 5, rng);
    const auto y = conjugate(p, x, random_product(p, 3, rng));
    const auto r = conjugacy_search(p, x, y, static_cast<std::uint64_t>(i), options);
    EXPECT_EQ(conjugate(p, x, r.witness.conjugator), y);
    EXPECT_EQ(r.steps, 0u);
    fallbacks += r.used_fallback ? 1 : 0;
  }
  EXPECT_GT(fallbacks, 0);
}

}  // namespace
}  // namespace garside
