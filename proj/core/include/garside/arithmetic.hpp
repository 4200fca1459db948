#ifndef GARSIDE_ARITHMETIC_HPP_
#define GARSIDE_ARITHMETIC_HPP_

#include <span>
#include <string>
#include <vector>

#include "garside/canonical_form.hpp"
#include "garside/error.hpp"
#include "garside/presentation.hpp"

namespace garside {

namespace detail {

template <GarsidePresentation P>
void check_same(const P& p, const CanonicalForm<P>& x) {
  if (x.index() != p.index()) {
    throw PresentationMismatch("element over B_" + std::to_string(x.index()) +
                               " used with presentation of index " +
                               std::to_string(p.index()));
  }
}

template <GarsidePresentation P>
void twist_all(const P& p, std::vector<typename P::Simple>& factors, int m) {
  if (m == 0) {
    return;
  }
  for (auto& f : factors) {
    f = p.tau(f, m);
  }
}

// Right-multiplies a left-weighted positive sequence by one simple element,
// sliding it leftwards until the pair in front of it is left-weighted.
template <GarsidePresentation P>
void append_simple(const P& p, std::vector<typename P::Simple>& factors,
                   const typename P::Simple& s) {
  if (s == p.identity()) {
    return;
  }
  factors.push_back(s);
  for (std::size_t i = factors.size() - 1; i > 0; --i) {
    auto moved = p.meet(p.right_complement(factors[i - 1]), factors[i]);
    if (moved == p.identity()) {
      break;
    }
    factors[i - 1] = p.product(factors[i - 1], moved);
    factors[i] = p.left_quotient(moved, factors[i]);
  }
}

// One left-to-right sweep of local sliding; returns whether anything moved.
template <GarsidePresentation P>
bool greedy_pass(const P& p, std::vector<typename P::Simple>& factors) {
  bool changed = false;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    auto moved = p.meet(p.right_complement(factors[i]), factors[i + 1]);
    if (moved != p.identity()) {
      factors[i] = p.product(factors[i], moved);
      factors[i + 1] = p.left_quotient(moved, factors[i + 1]);
      changed = true;
    }
  }
  return changed;
}

// Runs local sliding to its fixpoint, then moves leading deltas into the
// infimum and drops trailing identities.
template <GarsidePresentation P>
CanonicalForm<P> finish(const P& p, int inf, std::vector<typename P::Simple> factors) {
  while (greedy_pass(p, factors)) {
  }
  std::size_t leading = 0;
  while (leading < factors.size() && factors[leading] == p.delta()) {
    ++leading;
  }
  std::size_t end = factors.size();
  while (end > leading && factors[end - 1] == p.identity()) {
    --end;
  }
  std::vector<typename P::Simple> body(factors.begin() + static_cast<std::ptrdiff_t>(leading),
                                       factors.begin() + static_cast<std::ptrdiff_t>(end));
  return CanonicalForm<P>(p.index(), inf + static_cast<int>(leading), std::move(body),
                          typename CanonicalForm<P>::Trusted{});
}

}  // namespace detail

template <GarsidePresentation P>
CanonicalForm<P> delta_power(const P& p, int k) {
  return CanonicalForm<P>(p.index(), k, {}, typename CanonicalForm<P>::Trusted{});
}

template <GarsidePresentation P>
CanonicalForm<P> identity_element(const P& p) {
  return delta_power(p, 0);
}

// Normal form of delta^k s_1 s_2 ... for arbitrary simple elements s_i.
template <GarsidePresentation P>
CanonicalForm<P> normal_form(const P& p, int k, std::span<const typename P::Simple> simples) {
  std::vector<typename P::Simple> factors;
  factors.reserve(simples.size());
  for (const auto& s : simples) {
    detail::append_simple(p, factors, s);
  }
  return detail::finish(p, k, std::move(factors));
}

template <GarsidePresentation P>
CanonicalForm<P> from_simple(const P& p, const typename P::Simple& s) {
  return normal_form(p, 0, std::span<const typename P::Simple>(&s, 1));
}

// The simple element spelled by a positive atom word. Throws ParseError if
// an atom is out of range or the word does not divide delta.
template <GarsidePresentation P>
typename P::Simple simple_from_word(const P& p, std::span<const int> atoms) {
  auto s = p.identity();
  for (int a : atoms) {
    if (a < 0 || a >= p.atom_count()) {
      throw ParseError("atom index " + std::to_string(a + 1) + " out of range");
    }
    // s a divides delta iff a divides s^{-1} delta
    if (!p.atom_left_divides(a, p.right_complement(s))) {
      throw ParseError("word is not a simple element");
    }
    s = p.product(s, p.atom(a));
  }
  return s;
}

// True iff the data satisfies every normal-form condition.
template <GarsidePresentation P>
bool is_normal(const P& p, const std::vector<typename P::Simple>& factors) {
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i] == p.identity() || factors[i] == p.delta()) {
      return false;
    }
    if (i + 1 < factors.size() &&
        p.meet(p.right_complement(factors[i]), factors[i + 1]) != p.identity()) {
      return false;
    }
  }
  return true;
}

// Normal form of a word in atoms, their inverses and delta^{+-1}. Throws
// ParseError on an atom index outside the presentation.
template <GarsidePresentation P>
CanonicalForm<P> normalize(const P& p, const Word& word) {
  int k = 0;
  std::vector<typename P::Simple> factors;
  for (const Letter& letter : word) {
    if (letter.delta) {
      // x delta = delta tau(x)
      const int step = letter.inverse ? -1 : 1;
      k += step;
      detail::twist_all(p, factors, step);
      continue;
    }
    if (letter.atom < 0 || letter.atom >= p.atom_count()) {
      throw ParseError("atom index " + std::to_string(letter.atom + 1) + " out of range for " +
                       std::string(p.name()) + " " + std::to_string(p.index()));
    }
    const auto& a = p.atom(letter.atom);
    if (!letter.inverse) {
      detail::append_simple(p, factors, a);
    } else {
      // a^{-1} = (a^{-1} delta) delta^{-1}
      detail::append_simple(p, factors, p.right_complement(a));
      k -= 1;
      detail::twist_all(p, factors, -1);
    }
  }
  return detail::finish(p, k, std::move(factors));
}

// A word spelling x: |inf| delta letters followed by positive spellings of
// the factors.
template <GarsidePresentation P>
Word to_word(const P& p, const CanonicalForm<P>& x) {
  Word word;
  for (int i = 0; i < (x.inf() < 0 ? -x.inf() : x.inf()); ++i) {
    word.push_back(Letter::delta_letter(x.inf() < 0));
  }
  for (const auto& f : x.factors()) {
    for (int a : p.spell(f)) {
      word.push_back(Letter::generator(a));
    }
  }
  return word;
}

template <GarsidePresentation P>
CanonicalForm<P> multiply(const P& p, const CanonicalForm<P>& a, const CanonicalForm<P>& b) {
  detail::check_same(p, a);
  detail::check_same(p, b);
  // delta^i A delta^j B = delta^{i+j} tau^j(A) B
  std::vector<typename P::Simple> factors = a.factors();
  detail::twist_all(p, factors, b.inf());
  for (const auto& f : b.factors()) {
    detail::append_simple(p, factors, f);
  }
  return detail::finish(p, a.inf() + b.inf(), std::move(factors));
}

template <GarsidePresentation P>
CanonicalForm<P> invert(const P& p, const CanonicalForm<P>& a) {
  detail::check_same(p, a);
  // A^{-1} = (A^{-1} delta) delta^{-1}; collecting the deltas on the left
  // twists the i-th complement by tau^{-(inf + i)}.
  const int k = a.inf();
  const int r = a.len();
  std::vector<typename P::Simple> factors;
  factors.reserve(static_cast<std::size_t>(r));
  for (int i = r; i >= 1; --i) {
    factors.push_back(
        p.tau(p.right_complement(a.factors()[static_cast<std::size_t>(i - 1)]), -(k + i)));
  }
  return normal_form(p, -(k + r), std::span<const typename P::Simple>(factors));
}

// c^{-1} x c
template <GarsidePresentation P>
CanonicalForm<P> conjugate(const P& p, const CanonicalForm<P>& x, const CanonicalForm<P>& c) {
  return multiply(p, multiply(p, invert(p, c), x), c);
}

template <GarsidePresentation P>
CanonicalForm<P> conjugate_by_simple(const P& p, const CanonicalForm<P>& x,
                                     const typename P::Simple& s) {
  return conjugate(p, x, from_simple(p, s));
}

// tau^m(x) = delta^{-m} x delta^m
template <GarsidePresentation P>
CanonicalForm<P> tau_pow(const P& p, const CanonicalForm<P>& x, int m) {
  detail::check_same(p, x);
  std::vector<typename P::Simple> factors = x.factors();
  detail::twist_all(p, factors, m);
  return CanonicalForm<P>(p.index(), x.inf(), std::move(factors),
                          typename CanonicalForm<P>::Trusted{});
}

template <GarsidePresentation P>
bool left_divides(const P& p, const CanonicalForm<P>& a, const CanonicalForm<P>& b) {
  return multiply(p, invert(p, a), b).inf() >= 0;
}

// s^{-1} x for a simple s.
template <GarsidePresentation P>
CanonicalForm<P> left_divide_by_simple(const P& p, const typename P::Simple& s,
                                       const CanonicalForm<P>& x) {
  return multiply(p, invert(p, from_simple(p, s)), x);
}

// delta meet x for positive x.
template <GarsidePresentation P>
typename P::Simple head(const P& p, const CanonicalForm<P>& x) {
  if (x.inf() > 0) {
    return p.delta();
  }
  return x.is_delta_power() ? p.identity() : x.factors().front();
}

template <GarsidePresentation P>
typename P::Simple join_simple(const P& p, const typename P::Simple& s,
                               const typename P::Simple& t) {
  return p.join(s, t);
}

// s^{-1} delta
template <GarsidePresentation P>
typename P::Simple complement(const P& p, const typename P::Simple& s) {
  return p.right_complement(s);
}

// Left gcd of two positive elements, peeling common heads: with
// d = head(u) meet head(v), u meet v = d (d^{-1}u meet d^{-1}v).
template <GarsidePresentation P>
CanonicalForm<P> meet_positive(const P& p, CanonicalForm<P> u, CanonicalForm<P> v) {
  detail::check_same(p, u);
  detail::check_same(p, v);
  if (!u.is_positive() || !v.is_positive()) {
    throw ContractViolation("meet_positive requires positive arguments");
  }
  std::vector<typename P::Simple> common;
  while (true) {
    auto d = p.meet(head(p, u), head(p, v));
    if (d == p.identity()) {
      break;
    }
    common.push_back(d);
    u = left_divide_by_simple(p, d, u);
    v = left_divide_by_simple(p, d, v);
  }
  return normal_form(p, 0, std::span<const typename P::Simple>(common));
}

namespace detail {

// For simple s and simples v_1..v_m: returns the factors of s\(v_1...v_m)
// and replaces s by (v_1...v_m)\s.
template <GarsidePresentation P>
std::vector<typename P::Simple> complement_row(const P& p, typename P::Simple& s,
                                               std::span<const typename P::Simple> v) {
  std::vector<typename P::Simple> out;
  out.reserve(v.size());
  for (const auto& f : v) {
    auto j = p.join(f, s);
    out.push_back(p.left_quotient(s, j));
    s = p.left_quotient(f, j);
  }
  return out;
}

template <GarsidePresentation P>
std::vector<typename P::Simple> expand_positive(const P& p, const CanonicalForm<P>& x) {
  std::vector<typename P::Simple> out(static_cast<std::size_t>(x.inf()), p.delta());
  out.insert(out.end(), x.factors().begin(), x.factors().end());
  return out;
}

}  // namespace detail

// u\v = u^{-1}(u join v) for positive u, v.
template <GarsidePresentation P>
CanonicalForm<P> positive_complement(const P& p, const CanonicalForm<P>& u,
                                     const CanonicalForm<P>& v) {
  detail::check_same(p, u);
  detail::check_same(p, v);
  if (!u.is_positive() || !v.is_positive()) {
    throw ContractViolation("positive_complement requires positive arguments");
  }
  auto row = detail::expand_positive(p, v);
  for (const auto& f : detail::expand_positive(p, u)) {
    auto s = f;
    row = detail::complement_row(p, s, std::span<const typename P::Simple>(row));
  }
  return normal_form(p, 0, std::span<const typename P::Simple>(row));
}

template <GarsidePresentation P>
CanonicalForm<P> join_positive(const P& p, const CanonicalForm<P>& u, const CanonicalForm<P>& v) {
  return multiply(p, u, positive_complement(p, u, v));
}

// u\s for positive u and simple s: the least c with s <= u c. Folds
// (AB)\s = B\(A\s) over the factors of u; the result is simple.
template <GarsidePresentation P>
typename P::Simple complement_of_positive_in_simple(const P& p, const CanonicalForm<P>& u,
                                                    const typename P::Simple& s) {
  detail::check_same(p, u);
  if (!u.is_positive()) {
    throw ContractViolation("complement_of_positive_in_simple requires a positive element");
  }
  if (u.inf() > 0) {
    return p.identity();
  }
  auto cur = s;
  for (const auto& f : u.factors()) {
    cur = p.left_quotient(f, p.join(f, cur));
  }
  return cur;
}

// 1 join z: the least positive element that z left-divides.
template <GarsidePresentation P>
CanonicalForm<P> positive_closure(const P& p, const CanonicalForm<P>& z) {
  detail::check_same(p, z);
  if (z.is_positive()) {
    return z;
  }
  // 1 join delta^{-m} w = delta^m \ w for positive w.
  const CanonicalForm<P> body(p.index(), 0, z.factors(), typename CanonicalForm<P>::Trusted{});
  return positive_complement(p, delta_power(p, -z.inf()), body);
}

}  // namespace garside

#endif  // GARSIDE_ARITHMETIC_HPP_
