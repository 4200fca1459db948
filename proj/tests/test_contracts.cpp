// Built with GARSIDE_CONTRACT_CHECKS=1 regardless of the build type.
#include <gtest/gtest.h>

#include "garside/conjugacy.hpp"
#include "garside/summit.hpp"
#include "test_util.hpp"

static_assert(GARSIDE_CONTRACT_CHECKS == 1);

namespace garside {
namespace {

using test::el;

TEST(Contracts, TransportOutsideSuperSummitSetIsRejected) {
  artin::Presentation p(3);
  const auto x = el(p, "1 1");
  TransportContext<artin::Presentation> ctx(p, x);
  // x^{sigma_2} has sup 3, so sigma_2 leaves S_x.
  EXPECT_THROW(transport(p, ctx, el(p, "2")), ContractViolation);
  EXPECT_THROW(transport_simple(p, ctx, p.atom(1)), ContractViolation);
  EXPECT_NO_THROW(transport(p, ctx, el(p, "1")));
  EXPECT_THROW(transport(p, ctx, el(p, "-1")), ContractViolation);
}

TEST(Contracts, NegativeArgumentsToPositiveMeet) {
  artin::Presentation p(3);
  EXPECT_THROW(meet_positive(p, el(p, "-1"), el(p, "1")), ContractViolation);
}

TEST(Contracts, MismatchedIndices) {
  artin::Presentation p(3);
  artin::Presentation q(4);
  EXPECT_THROW(conjugate(p, el(p, "1"), el(q, "1")), PresentationMismatch);
  EXPECT_THROW(is_conjugate(p, el(p, "1"), el(q, "1")), PresentationMismatch);
}

TEST(Contracts, SearchOnNonConjugates) {
  bkl::Presentation p(4);
  EXPECT_THROW(conjugacy_search(p, el(p, "2.1"), el(p, "2.1 3.1"), 1), ContractViolation);
}

}  // namespace
}  // namespace garside
