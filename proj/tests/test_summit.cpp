#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "garside/oracle/brute.hpp"
#include "garside/oracle/properties.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"
#include "test_util.hpp"

namespace garside {
namespace {

using test::el;
using test::simple;

class SummitB3 : public ::testing::Test {
 protected:
  artin::Presentation p{3};
  Permutation s1 = p.atom(0);
  Permutation s2 = p.atom(1);
  Permutation s2s1 = p.product(p.atom(1), p.atom(0));
  CanonicalForm<artin::Presentation> sq = el(p, "1 1");
};

TEST_F(SummitB3, CyclingExamples) {
  const auto c = cycling(p, sq);
  EXPECT_EQ(c.element, sq);
  EXPECT_EQ(c.conjugator, el(p, "1"));

  const auto d = delta_power(p, 3);
  EXPECT_EQ(cycling(p, d).element, d);
  EXPECT_TRUE(cycling(p, d).conjugator.is_identity());
  EXPECT_EQ(decycling(p, d).element, d);

  const auto x = el(p, "1 2");
  EXPECT_EQ(cycling(p, x).element, x);
  EXPECT_EQ(cycling(p, x).conjugator, x);
}

TEST_F(SummitB3, CyclingMatchesDefinition) {
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_product(p, 4, rng);
    EXPECT_EQ(cycle(p, x), oracle::cycle_by_definition(p, x));
    const auto c = cycling(p, x);
    EXPECT_EQ(conjugate(p, x, c.conjugator), c.element);
    const auto d = decycling(p, x);
    EXPECT_EQ(conjugate(p, x, d.conjugator), d.element);
  }
}

TEST_F(SummitB3, SuperSummitRepresentativeExamples) {
  EXPECT_EQ(sss_representative(p, delta_power(p, -2)).element, delta_power(p, -2));
  EXPECT_EQ(sss_representative(p, sq).element, sq);
  const auto x = el(p, "2 1 1 -2");
  const auto rep = sss_representative(p, x);
  EXPECT_EQ(rep.element.inf(), 0);
  EXPECT_EQ(rep.element.sup(), 2);
  EXPECT_EQ(conjugate(p, x, rep.conjugator), rep.element);
  const auto summit = oracle::brute_sss(p, sq);
  EXPECT_EQ(summit.size(), 2u);
  EXPECT_TRUE(summit.contains(rep.element));
}

TEST_F(SummitB3, TransportExamples) {
  TransportContext<artin::Presentation> ctx(p, sq);
  EXPECT_EQ(transport(p, ctx, el(p, "1")), el(p, "1"));
  EXPECT_EQ(transport_simple(p, ctx, s1), s1);
  // c(x^u) = c(x)^{phi(u)}
  const auto u = el(p, "1");
  EXPECT_EQ(cycle(p, conjugate(p, sq, u)), conjugate(p, cycle(p, sq), transport(p, ctx, u)));
}

TEST_F(SummitB3, TransportOrbitExamples) {
  const auto traj = Trajectory<artin::Presentation>::compute(p, sq);
  EXPECT_EQ(traj.period(), 1u);
  const auto f = transport_orbit_simple(p, traj, s1);
  EXPECT_EQ(f.members, std::vector<Permutation>{s1});
  EXPECT_EQ(f.length(), 1u);
  EXPECT_EQ(transport_orbit_simple(p, traj, p.identity()).members,
            std::vector<Permutation>{p.identity()});
  EXPECT_EQ(transport_orbit_simple(p, traj, p.delta()).members, std::vector<Permutation>{p.delta()});
}

TEST_F(SummitB3, MinimalSuperSummitConjugatorExamples) {
  EXPECT_EQ(min_ss_conjugator(p, sq, s1), s1);
  EXPECT_EQ(min_ss_conjugator(p, sq, s2), s2s1);
  EXPECT_EQ(min_ss_conjugator(p, sq, p.delta()), p.delta());
  EXPECT_EQ(conjugate_by_simple(p, sq, s2s1), el(p, "2 2"));
  // sigma_2 alone leaves S_x: the infimum drops.
  const auto moved = conjugate_by_simple(p, sq, s2);
  EXPECT_EQ(moved.inf(), -1);
  EXPECT_EQ(moved.sup(), 2);
  EXPECT_TRUE(test::same_element(p, moved, el(p, "-2 1 1 2")));
  const auto summit = oracle::brute_sss(p, sq);
  EXPECT_FALSE(summit.contains(moved));
  EXPECT_EQ(*oracle::brute_min_conjugator(p, sq, s2, summit), s2s1);
}

TEST_F(SummitB3, PullbackExamples) {
  const auto traj = Trajectory<artin::Presentation>::compute(p, sq);
  EXPECT_EQ(pullback(p, sq, p.identity()), p.identity());
  EXPECT_EQ(pullback(p, sq, p.delta()), p.delta());
  EXPECT_EQ(pullback(p, sq, s1), s1);
  EXPECT_EQ(stable_pullback(p, traj, p.identity()), p.identity());
  EXPECT_EQ(stable_pullback(p, traj, p.delta()), p.delta());
  EXPECT_EQ(stable_pullback(p, traj, s1), s1);
}

TEST_F(SummitB3, MinimalUltraSummitConjugatorExamples) {
  const auto traj = Trajectory<artin::Presentation>::compute(p, sq);
  EXPECT_EQ(min_uss_conjugator(p, traj, s1, false), s1);
  EXPECT_EQ(min_uss_conjugator(p, traj, s2, false), s2s1);
  EXPECT_EQ(min_uss_conjugator(p, traj, p.delta(), false), p.delta());
  EXPECT_THROW(min_uss_conjugator(p, traj, p.identity(), false), ContractViolation);
}

TEST_F(SummitB3, MinimalConjugatorSetExamples) {
  const auto traj = Trajectory<artin::Presentation>::compute(p, sq);
  auto set = minimal_conjugator_set(p, traj).elements;
  std::sort(set.begin(), set.end());
  std::vector<Permutation> expected{s1, s2s1};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(set, expected);

  const auto x = el(p, "1 2");
  const auto tx = Trajectory<artin::Presentation>::compute(p, x);
  auto cx = minimal_conjugator_set(p, tx).elements;
  auto bx = oracle::brute_minimal_conjugators(p, x, oracle::brute_uss(p, x));
  std::sort(cx.begin(), cx.end());
  std::sort(bx.begin(), bx.end());
  EXPECT_EQ(cx, bx);
}

TEST_F(SummitB3, UltraSummitSetExamples) {
  const auto d = ultra_summit_set(p, delta_power(p, 1));
  EXPECT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.contains(delta_power(p, 1)));

  const auto u = ultra_summit_set(p, sq);
  EXPECT_EQ(u.size(), 2u);
  EXPECT_EQ(u.trajectory_count(), 2u);
  EXPECT_TRUE(u.contains(sq));
  EXPECT_TRUE(u.contains(el(p, "2 2")));
  for (const auto& t : u.trajectories()) {
    EXPECT_EQ(t.period(), 1u);
  }

  const auto v = ultra_summit_set(p, el(p, "1 2"));
  EXPECT_EQ(v.size(), 2u);
  EXPECT_TRUE(v.contains(el(p, "1 2")));
  EXPECT_TRUE(v.contains(el(p, "2 1")));
}

template <GarsidePresentation P>
void expect_matches_oracle(const P& p, int samples, std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < samples; ++i) {
    const auto x = random_product(p, 1 + rng.uniform_int(4), rng);
    const auto uss = ultra_summit_set(p, x);
    const auto brute = oracle::brute_uss(p, x);
    ASSERT_EQ(uss.size(), brute.size()) << format_element(p, x);
    for (const auto& z : uss.elements()) {
      EXPECT_TRUE(brute.contains(z)) << format_element(p, z);
      EXPECT_EQ(conjugate(p, x, uss.conjugator_to(p, z)), z);
    }
  }
}

TEST(Summit, UltraSummitSetMatchesOracle) {
  expect_matches_oracle(artin::Presentation(3), 30, 21);
  expect_matches_oracle(artin::Presentation(4), 30, 22);
  expect_matches_oracle(bkl::Presentation(3), 30, 23);
  expect_matches_oracle(bkl::Presentation(4), 30, 24);
}

template <GarsidePresentation P>
void expect_properties(const P& p, std::uint64_t seed, int samples) {
  for (const auto& r : oracle::summit_properties(p, seed, samples)) {
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.failures << " of " << r.cases
                        << " failed, first: " << r.first_failure;
  }
}

TEST(Summit, PropertySuitesArtin) {
  expect_properties(artin::Presentation(3), 31, 30);
  expect_properties(artin::Presentation(4), 32, 20);
}

TEST(Summit, PropertySuitesBkl) {
  expect_properties(bkl::Presentation(3), 33, 30);
  expect_properties(bkl::Presentation(4), 34, 20);
}

TEST(Summit, DegenerateInputsRejected) {
  artin::Presentation p(3);
  EXPECT_THROW(TransportContext<artin::Presentation>(p, delta_power(p, 1)), ContractViolation);
  EXPECT_THROW(min_ss_conjugator(p, delta_power(p, 1), p.atom(0)), ContractViolation);
  EXPECT_THROW(pullback(p, delta_power(p, 1), p.atom(0)), ContractViolation);
  EXPECT_THROW(as_simple(p, el(p, "1 1")), ContractViolation);
}

}  // namespace
}  // namespace garside
