#ifndef GARSIDE_ORACLE_BRUTE_HPP_
#define GARSIDE_ORACLE_BRUTE_HPP_

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "garside/arithmetic.hpp"
#include "garside/canonical_form.hpp"
#include "garside/error.hpp"

// Brute-force summit sets: plain searches over conjugation by every simple
// element, with none of the cycling, transport or pullback machinery.
namespace garside::oracle {

struct OracleBudget {
  int max_index = 5;
  int max_length = 12;               // canonical length of inputs
  std::size_t max_set_size = 400000;  // elements visited by a closure
};

template <GarsidePresentation P>
using ElementSet = std::unordered_set<CanonicalForm<P>>;

namespace detail {

template <GarsidePresentation P>
void check_budget(const P& p, const CanonicalForm<P>& x, const OracleBudget& budget) {
  if (p.index() > budget.max_index) {
    throw BudgetExceeded("braid index " + std::to_string(p.index()) + " exceeds oracle budget");
  }
  if (x.len() > budget.max_length) {
    throw BudgetExceeded("canonical length " + std::to_string(x.len()) +
                         " exceeds oracle budget");
  }
}

}  // namespace detail

template <GarsidePresentation P>
std::vector<typename P::Simple> enumerate_simples(const P& p, const OracleBudget& budget = {}) {
  if (p.index() > budget.max_index) {
    throw BudgetExceeded("braid index exceeds oracle budget");
  }
  return p.enumerate_simples();
}

// The super summit set of x. Every conjugate of x with inf >= inf(x) and
// sup <= sup(x) that is reachable by conjugating with simple elements and
// their inverses is visited; cycling and decycling are such moves and reach
// S_x, which is connected under simple conjugation, so S_x is the set of
// visited elements of maximal inf and minimal sup.
template <GarsidePresentation P>
ElementSet<P> brute_sss(const P& p, const CanonicalForm<P>& x, const OracleBudget& budget = {}) {
  detail::check_budget(p, x, budget);
  if (x.is_delta_power()) {
    return {x};
  }
  std::vector<CanonicalForm<P>> movers;
  for (const auto& s : enumerate_simples(p, budget)) {
    if (s == p.identity()) {
      continue;
    }
    auto c = from_simple(p, s);
    movers.push_back(c);
    movers.push_back(invert(p, c));
  }
  ElementSet<P> box{x};
  std::deque<CanonicalForm<P>> queue{x};
  int best_inf = x.inf();
  int best_sup = x.sup();
  while (!queue.empty()) {
    const auto y = std::move(queue.front());
    queue.pop_front();
    for (const auto& c : movers) {
      auto z = conjugate(p, y, c);
      if (z.inf() < x.inf() || z.sup() > x.sup()) {
        continue;
      }
      if (box.insert(z).second) {
        if (box.size() > budget.max_set_size) {
          throw BudgetExceeded("super summit search exceeds the oracle budget");
        }
        best_inf = std::max(best_inf, z.inf());
        best_sup = std::min(best_sup, z.sup());
        queue.push_back(std::move(z));
      }
    }
  }
  ElementSet<P> summit;
  for (const auto& y : box) {
    if (y.inf() == best_inf && y.sup() == best_sup) {
      summit.insert(y);
    }
  }
  return summit;
}

// Cycling straight from its definition: conjugation by tau^{-inf}(A_1).
template <GarsidePresentation P>
CanonicalForm<P> cycle_by_definition(const P& p, const CanonicalForm<P>& y) {
  if (y.is_delta_power()) {
    return y;
  }
  return conjugate(p, y, from_simple(p, p.tau(y.factors().front(), -y.inf())));
}

// Elements of a super summit set that return to themselves under cycling.
template <GarsidePresentation P>
ElementSet<P> ultra_part(const P& p, const ElementSet<P>& summit) {
  ElementSet<P> ultra;
  for (const auto& y : summit) {
    if (ultra.contains(y)) {
      continue;
    }
    // Cycling maps S_x into itself, so the orbit is finite.
    std::vector<CanonicalForm<P>> orbit{y};
    ElementSet<P> seen{y};
    while (true) {
      auto z = cycle_by_definition(p, orbit.back());
      if (z == y) {
        ultra.insert(orbit.begin(), orbit.end());
        break;
      }
      if (!seen.insert(z).second) {
        break;
      }
      orbit.push_back(std::move(z));
    }
  }
  return ultra;
}

template <GarsidePresentation P>
ElementSet<P> brute_uss(const P& p, const CanonicalForm<P>& x, const OracleBudget& budget = {}) {
  return ultra_part(p, brute_sss(p, x, budget));
}

// The least simple t with s <= t and y^t in target; throws
// VerificationFailure if the admissible simples have no least element.
template <GarsidePresentation P>
std::optional<typename P::Simple> brute_min_conjugator(const P& p, const CanonicalForm<P>& y,
                                                       const typename P::Simple& s,
                                                       const ElementSet<P>& target,
                                                       const OracleBudget& budget = {}) {
  std::vector<typename P::Simple> admissible;
  for (const auto& t : enumerate_simples(p, budget)) {
    if (p.left_divides(s, t) && target.contains(conjugate_by_simple(p, y, t))) {
      admissible.push_back(t);
    }
  }
  for (const auto& t : admissible) {
    bool least = true;
    for (const auto& u : admissible) {
      least = least && p.left_divides(t, u);
    }
    if (least) {
      return t;
    }
  }
  if (admissible.empty()) {
    return std::nullopt;
  }
  throw VerificationFailure("admissible conjugators have no least element");
}

// The minimal non-trivial simple elements t with y^t in target.
template <GarsidePresentation P>
std::vector<typename P::Simple> brute_minimal_conjugators(const P& p, const CanonicalForm<P>& y,
                                                          const ElementSet<P>& target,
                                                          const OracleBudget& budget = {}) {
  std::vector<typename P::Simple> admissible;
  for (const auto& t : enumerate_simples(p, budget)) {
    if (!(t == p.identity()) && target.contains(conjugate_by_simple(p, y, t))) {
      admissible.push_back(t);
    }
  }
  std::vector<typename P::Simple> minimal;
  for (const auto& t : admissible) {
    bool is_min = true;
    for (const auto& u : admissible) {
      if (!(u == t) && p.left_divides(u, t)) {
        is_min = false;
        break;
      }
    }
    if (is_min) {
      minimal.push_back(t);
    }
  }
  return minimal;
}

// Left divisors of a positive element, grown atom by atom.
template <GarsidePresentation P>
ElementSet<P> positive_divisors(const P& p, const CanonicalForm<P>& u,
                                const OracleBudget& budget = {}) {
  ElementSet<P> out{identity_element(p)};
  std::deque<CanonicalForm<P>> queue{identity_element(p)};
  while (!queue.empty()) {
    const auto d = std::move(queue.front());
    queue.pop_front();
    for (int a = 0; a < p.atom_count(); ++a) {
      auto e = multiply(p, d, from_simple(p, p.atom(a)));
      if (left_divides(p, e, u) && out.insert(e).second) {
        if (out.size() > budget.max_set_size) {
          throw BudgetExceeded("divisor enumeration exceeds the oracle budget");
        }
        queue.push_back(std::move(e));
      }
    }
  }
  return out;
}

// Left gcd by scanning common divisors.
template <GarsidePresentation P>
CanonicalForm<P> brute_gcd(const P& p, const CanonicalForm<P>& u, const CanonicalForm<P>& v,
                           const OracleBudget& budget = {}) {
  std::vector<CanonicalForm<P>> common;
  for (const auto& d : positive_divisors(p, u, budget)) {
    if (left_divides(p, d, v)) {
      common.push_back(d);
    }
  }
  for (const auto& d : common) {
    bool greatest = true;
    for (const auto& e : common) {
      greatest = greatest && left_divides(p, e, d);
    }
    if (greatest) {
      return d;
    }
  }
  throw VerificationFailure("common divisors have no greatest element");
}

}  // namespace garside::oracle

#endif  // GARSIDE_ORACLE_BRUTE_HPP_
