#ifndef GARSIDE_CONJUGACY_HPP_
#define GARSIDE_CONJUGACY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "garside/arithmetic.hpp"
#include "garside/canonical_form.hpp"
#include "garside/error.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"

namespace garside {

template <GarsidePresentation P>
struct ConjugacyWitness {
  CanonicalForm<P> source;
  CanonicalForm<P> target;
  CanonicalForm<P> conjugator;  // source^conjugator = target
};

template <GarsidePresentation P>
struct ConjugacyDecision {
  bool conjugate = false;
  std::optional<ConjugacyWitness<P>> witness;
};

// Throws VerificationFailure unless x^c = y.
template <GarsidePresentation P>
void verify_witness(const P& p, const ConjugacyWitness<P>& w) {
  if (!(conjugate(p, w.source, w.conjugator) == w.target)) {
    throw VerificationFailure("conjugacy witness does not conjugate source to target");
  }
}

namespace detail {

template <GarsidePresentation P>
ConjugacyWitness<P> checked_witness(const P& p, const CanonicalForm<P>& x,
                                    const CanonicalForm<P>& y, CanonicalForm<P> c,
                                    const std::function<void(CanonicalForm<P>&)>& tamper) {
  if (tamper) {
    tamper(c);
  }
  ConjugacyWitness<P> w{x, y, std::move(c)};
  verify_witness(p, w);
  return w;
}

}  // namespace detail

// Decides conjugacy by growing U_x until it meets an ultra summit element
// of y. The hook, when set, may alter the conjugator before verification.
template <GarsidePresentation P>
ConjugacyDecision<P> is_conjugate(const P& p, const CanonicalForm<P>& x, const CanonicalForm<P>& y,
                                  const std::function<void(CanonicalForm<P>&)>& tamper = {}) {
  detail::check_same(p, x);
  detail::check_same(p, y);
  const auto ry = uss_representative(p, y);
  const auto rx = uss_representative(p, x);
  if (rx.element.inf() != ry.element.inf() || rx.element.sup() != ry.element.sup()) {
    return {};
  }
  const auto back = invert(p, ry.conjugator);
  if (rx.element.is_delta_power()) {
    return {true, detail::checked_witness(p, x, y, multiply(p, rx.conjugator, back), tamper)};
  }
  const auto uss = UltraSummitSet<P>::build(p, x, &ry.element);
  if (!uss.contains(ry.element)) {
    return {};
  }
  return {true, detail::checked_witness(
                    p, x, y, multiply(p, uss.conjugator_to(p, ry.element), back), tamper)};
}

template <GarsidePresentation P>
struct SearchOptions {
  // Random steps before falling back to the deterministic decision; unset
  // means 16 * (number of atoms) * len_s(x).
  std::optional<std::size_t> step_cap;
  // Test hook applied to the conjugator before verification.
  std::function<void(CanonicalForm<P>&)> tamper;
};

template <GarsidePresentation P>
struct SearchResult {
  ConjugacyWitness<P> witness;
  std::size_t steps = 0;
  bool used_fallback = false;
};

// Las Vegas search for c with x^c = y, for x and y known to be conjugate:
// random walk z -> z^{c_a(z)} over U_y, starting at an ultra summit element
// of y, until it lands on the trajectory of an ultra summit element of x.
// Reproducible for a given seed. Throws ContractViolation if x and y turn
// out not to be conjugate.
template <GarsidePresentation P>
SearchResult<P> conjugacy_search(const P& p, const CanonicalForm<P>& x, const CanonicalForm<P>& y,
                                 std::uint64_t seed, const SearchOptions<P>& options = {}) {
  detail::check_same(p, x);
  detail::check_same(p, y);
  const auto rx = uss_representative(p, x);
  const auto ry = uss_representative(p, y);
  if (rx.element.inf() != ry.element.inf() || rx.element.sup() != ry.element.sup()) {
    throw ContractViolation("conjugacy search on elements that are not conjugate");
  }
  const auto base = Trajectory<P>::compute(p, rx.element);
  const std::size_t cap =
      options.step_cap.value_or(16 * static_cast<std::size_t>(p.atom_count()) *
                                static_cast<std::size_t>(std::max(1, rx.element.len())));
  Rng rng(seed);
  CanonicalForm<P> z = ry.element;
  CanonicalForm<P> s = ry.conjugator;  // y^s = z
  std::size_t steps = 0;
  while (true) {
    if (auto offset = base.find(z)) {
      auto c = multiply(p, multiply(p, rx.conjugator, base.conjugator_to(p, *offset)),
                        invert(p, s));
      return {detail::checked_witness(p, x, y, std::move(c), options.tamper), steps, false};
    }
    if (steps >= cap || z.is_delta_power()) {
      auto decision = is_conjugate(p, x, y, options.tamper);
      if (!decision.conjugate) {
        throw ContractViolation("conjugacy search on elements that are not conjugate");
      }
      return {std::move(*decision.witness), steps, true};
    }
    const int a = rng.uniform_int(p.atom_count());
    const auto walk = Trajectory<P>::compute(p, z);
    const auto c = *min_uss_conjugator(p, walk, p.atom(a), false);
    z = conjugate_by_simple(p, z, c);
    s = multiply(p, s, from_simple(p, c));
    ++steps;
  }
}

}  // namespace garside

#endif  // GARSIDE_CONJUGACY_HPP_
