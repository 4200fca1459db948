#ifndef GARSIDE_SUMMIT_HPP_
#define GARSIDE_SUMMIT_HPP_

#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "garside/arithmetic.hpp"
#include "garside/canonical_form.hpp"
#include "garside/error.hpp"

// Contract checks that cost a full summit test (e.g. x^u in S_x before a
// transport). Off unless requested, or in debug builds.
#ifndef GARSIDE_CONTRACT_CHECKS
#ifdef NDEBUG
#define GARSIDE_CONTRACT_CHECKS 0
#else
#define GARSIDE_CONTRACT_CHECKS 1
#endif
#endif

namespace garside {

template <GarsidePresentation P>
struct Conjugation {
  CanonicalForm<P> element;     // source^conjugator
  CanonicalForm<P> conjugator;
};

// Views an element with 0 <= inf and sup <= 1 as a simple element.
template <GarsidePresentation P>
typename P::Simple as_simple(const P& p, const CanonicalForm<P>& x) {
  if (x.inf() == 1 && x.len() == 0) {
    return p.delta();
  }
  if (x.inf() == 0 && x.len() <= 1) {
    return x.len() == 0 ? p.identity() : x.factors().front();
  }
  throw ContractViolation("element is not simple");
}

// tau^{-inf}(A_1): the simple element that conjugates x to its cycling.
template <GarsidePresentation P>
typename P::Simple cycling_conjugator(const P& p, const CanonicalForm<P>& x) {
  return x.is_delta_power() ? p.identity() : p.tau(x.factors().front(), -x.inf());
}

template <GarsidePresentation P>
CanonicalForm<P> cycle(const P& p, const CanonicalForm<P>& x) {
  if (x.is_delta_power()) {
    return x;
  }
  // x^{tau^{-k}(A_1)} = delta^k A_2 ... A_r tau^{-k}(A_1)
  std::vector<typename P::Simple> factors(x.factors().begin() + 1, x.factors().end());
  detail::append_simple(p, factors, p.tau(x.factors().front(), -x.inf()));
  return detail::finish(p, x.inf(), std::move(factors));
}

template <GarsidePresentation P>
Conjugation<P> cycling(const P& p, const CanonicalForm<P>& x) {
  detail::check_same(p, x);
  return {cycle(p, x), from_simple(p, cycling_conjugator(p, x))};
}

template <GarsidePresentation P>
CanonicalForm<P> decycle(const P& p, const CanonicalForm<P>& x) {
  if (x.is_delta_power()) {
    return x;
  }
  // x^{A_r^{-1}} = A_r delta^k A_1 ... A_{r-1} = delta^k tau^k(A_r) A_1 ... A_{r-1}
  std::vector<typename P::Simple> simples;
  simples.reserve(x.factors().size());
  simples.push_back(p.tau(x.factors().back(), x.inf()));
  simples.insert(simples.end(), x.factors().begin(), x.factors().end() - 1);
  return normal_form(p, x.inf(), std::span<const typename P::Simple>(simples));
}

template <GarsidePresentation P>
Conjugation<P> decycling(const P& p, const CanonicalForm<P>& x) {
  detail::check_same(p, x);
  if (x.is_delta_power()) {
    return {x, identity_element(p)};
  }
  return {decycle(p, x), invert(p, from_simple(p, x.factors().back()))};
}

// Conjugates x into its super summit set. Cycling runs until its orbit
// closes without raising the infimum, then decycling until its orbit closes
// without lowering the supremum; the two phases alternate until neither
// improves.
template <GarsidePresentation P>
Conjugation<P> sss_representative(const P& p, const CanonicalForm<P>& x) {
  detail::check_same(p, x);
  CanonicalForm<P> cur = x;
  std::vector<typename P::Simple> conjugators;  // product of these and inverses
  std::vector<bool> inverted;
  bool improved = true;
  while (improved && !cur.is_delta_power()) {
    improved = false;
    std::unordered_set<CanonicalForm<P>> seen{cur};
    while (!cur.is_delta_power()) {
      const auto c = cycling_conjugator(p, cur);
      CanonicalForm<P> next = cycle(p, cur);
      conjugators.push_back(c);
      inverted.push_back(false);
      if (next.inf() > cur.inf()) {
        improved = true;
        seen.clear();
      }
      cur = std::move(next);
      if (!seen.insert(cur).second) {
        break;
      }
    }
    seen = {cur};
    while (!cur.is_delta_power()) {
      const auto c = cur.factors().back();
      CanonicalForm<P> next = decycle(p, cur);
      conjugators.push_back(c);
      inverted.push_back(true);
      if (next.sup() < cur.sup()) {
        improved = true;
        seen.clear();
      }
      cur = std::move(next);
      if (!seen.insert(cur).second) {
        break;
      }
    }
  }
  CanonicalForm<P> conj = identity_element(p);
  for (std::size_t i = 0; i < conjugators.size(); ++i) {
    auto step = from_simple(p, conjugators[i]);
    conj = multiply(p, conj, inverted[i] ? invert(p, step) : step);
  }
  return {std::move(cur), std::move(conj)};
}

// Conjugates x into its ultra summit set: a super summit representative,
// then iterated cycling until the first repeated element.
template <GarsidePresentation P>
Conjugation<P> uss_representative(const P& p, const CanonicalForm<P>& x) {
  Conjugation<P> rep = sss_representative(p, x);
  if (rep.element.is_delta_power()) {
    return rep;
  }
  std::unordered_map<CanonicalForm<P>, std::size_t> seen;
  std::vector<typename P::Simple> steps;
  CanonicalForm<P> cur = rep.element;
  while (seen.emplace(cur, steps.size()).second) {
    steps.push_back(cycling_conjugator(p, cur));
    cur = cycle(p, cur);
  }
  const std::size_t first = seen.at(cur);
  std::vector<typename P::Simple> prefix(steps.begin(),
                                         steps.begin() + static_cast<std::ptrdiff_t>(first));
  CanonicalForm<P> conj = multiply(p, rep.conjugator,
                                   normal_form(p, 0, std::span<const typename P::Simple>(prefix)));
  return {std::move(cur), std::move(conj)};
}

// The data of x in S_x (len > 0) needed to transport conjugators along the
// cycling edge x -> c(x).
template <GarsidePresentation P>
class TransportContext {
 public:
  using Simple = typename P::Simple;

  TransportContext(const P& p, CanonicalForm<P> x) : x_(std::move(x)) {
    if (x_.is_delta_power()) {
      throw ContractViolation("transport requires canonical length > 0");
    }
    const auto& f = x_.factors();
    tail_ = CanonicalForm<P>(p.index(), 0, std::vector<Simple>(f.begin() + 1, f.end()),
                             typename CanonicalForm<P>::Trusted{});
    first_complement_ = p.right_complement(f.front());
    twisted_first_ = p.tau(f.front(), 1);
  }

  const CanonicalForm<P>& element() const noexcept { return x_; }
  int inf() const noexcept { return x_.inf(); }
  const Simple& first() const { return x_.factors().front(); }
  // A_2 ... A_r as a positive element.
  const CanonicalForm<P>& tail() const noexcept { return tail_; }
  // A_1^{-1} delta
  const Simple& first_complement() const noexcept { return first_complement_; }
  // tau(A_1), which is the complement of A_1^{-1} delta.
  const Simple& twisted_first() const noexcept { return twisted_first_; }

 private:
  CanonicalForm<P> x_;
  CanonicalForm<P> tail_;
  Simple first_complement_;
  Simple twisted_first_;
};

namespace detail {

template <GarsidePresentation P>
bool same_summit_bounds(const P& p, const CanonicalForm<P>& x, const CanonicalForm<P>& u) {
  const auto conj = conjugate(p, x, u);
  return conj.inf() == x.inf() && conj.sup() == x.sup();
}

}  // namespace detail

// phi_x(u) = tau^{-k}(u_1) with u_1 = A_2...A_r u meet A_1^{-1} tau^k(u) delta.
// The caller guarantees x^u in S_x.
template <GarsidePresentation P>
CanonicalForm<P> transport(const P& p, const TransportContext<P>& ctx, const CanonicalForm<P>& u) {
  detail::check_same(p, u);
  if (!u.is_positive()) {
    throw ContractViolation("transport requires a positive conjugator");
  }
#if GARSIDE_CONTRACT_CHECKS
  if (!detail::same_summit_bounds(p, ctx.element(), u)) {
    throw ContractViolation("transport requires x^u in the super summit set of x");
  }
#endif
  const int k = ctx.inf();
  auto along = multiply(p, ctx.tail(), u);
  // A_1^{-1} tau^k(u) delta = (A_1^{-1} delta) tau^{k+1}(u)
  auto across = multiply(p, from_simple(p, ctx.first_complement()), tau_pow(p, u, k + 1));
  return tau_pow(p, meet_positive(p, along, across), -k);
}

// Transport of a simple conjugator; the result is simple, so only the heads
// of the two positive elements in the meet matter.
template <GarsidePresentation P>
typename P::Simple transport_simple(const P& p, const TransportContext<P>& ctx,
                                    const typename P::Simple& u) {
#if GARSIDE_CONTRACT_CHECKS
  if (!detail::same_summit_bounds(p, ctx.element(), from_simple(p, u))) {
    throw ContractViolation("transport requires x^u in the super summit set of x");
  }
#endif
  const int k = ctx.inf();
  std::vector<typename P::Simple> along = ctx.tail().factors();
  detail::append_simple(p, along, u);
  while (detail::greedy_pass(p, along)) {
  }
  const auto head_along = along.empty() ? p.identity() : along.front();
  // delta meet (X Y) = X (X^{-1} delta meet Y) with X = A_1^{-1} delta.
  const auto head_across = p.product(ctx.first_complement(),
                                     p.meet(ctx.twisted_first(), p.tau(u, k + 1)));
  return p.tau(p.meet(head_along, head_across), -k);
}

// The cycling orbit of an element on a circuit, with the per-step cycling
// conjugators and the transport data of every member.
template <GarsidePresentation P>
class Trajectory {
 public:
  using Simple = typename P::Simple;

  // Throws ContractViolation if y does not lie on a cycling circuit.
  static Trajectory compute(const P& p, const CanonicalForm<P>& y) {
    detail::check_same(p, y);
    Trajectory t;
    CanonicalForm<P> cur = y;
    while (true) {
      if (!t.index_.emplace(cur, t.elements_.size()).second) {
        if (!(cur == y)) {
          throw ContractViolation("element is not on a cycling circuit");
        }
        break;
      }
      t.elements_.push_back(cur);
      t.steps_.push_back(cycling_conjugator(p, cur));
      cur = cycle(p, cur);
    }
    if (!y.is_delta_power()) {
      t.contexts_.reserve(t.elements_.size());
      for (const auto& e : t.elements_) {
        t.contexts_.emplace_back(p, e);
      }
    }
    return t;
  }

  const CanonicalForm<P>& base() const { return elements_.front(); }
  std::size_t period() const noexcept { return elements_.size(); }
  const std::vector<CanonicalForm<P>>& elements() const noexcept { return elements_; }
  const CanonicalForm<P>& element(std::size_t i) const { return elements_.at(i % period()); }
  // Simple conjugator of the cycling edge element(i) -> element(i+1).
  const Simple& step(std::size_t i) const { return steps_.at(i % period()); }
  const TransportContext<P>& context(std::size_t i) const { return contexts_.at(i % period()); }

  std::optional<std::size_t> find(const CanonicalForm<P>& z) const {
    auto it = index_.find(z);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  // s with base()^s = element(i).
  CanonicalForm<P> conjugator_to(const P& p, std::size_t i) const {
    std::vector<Simple> prefix(steps_.begin(), steps_.begin() + static_cast<std::ptrdiff_t>(i));
    return normal_form(p, 0, std::span<const Simple>(prefix));
  }

 private:
  std::vector<CanonicalForm<P>> elements_;
  std::vector<Simple> steps_;
  std::vector<TransportContext<P>> contexts_;
  std::unordered_map<CanonicalForm<P>, std::size_t> index_;
};

// The set F_x(u) of a transport orbit, with the indices of its first
// repetition: u^{(i1 N)} = u^{(i2 N)}.
template <typename T>
struct TransportOrbit {
  std::size_t first_repeat = 0;  // i1
  std::size_t second_repeat = 0;  // i2
  std::vector<T> members;         // u^{(iN)} for i1 <= i < i2

  std::size_t length() const noexcept { return second_repeat - first_repeat; }
};

namespace detail {

template <typename T, typename Step>
TransportOrbit<T> iterate_to_cycle(T start, Step&& advance) {
  std::unordered_map<T, std::size_t> seen;
  std::vector<T> sequence;
  T cur = std::move(start);
  while (true) {
    auto [it, inserted] = seen.emplace(cur, sequence.size());
    if (!inserted) {
      TransportOrbit<T> orbit;
      orbit.first_repeat = it->second;
      orbit.second_repeat = sequence.size();
      orbit.members.assign(sequence.begin() + static_cast<std::ptrdiff_t>(orbit.first_repeat),
                           sequence.end());
      return orbit;
    }
    sequence.push_back(cur);
    cur = advance(cur);
  }
}

}  // namespace detail

// F_x(u) for the base x of a trajectory, transporting a full period N at a
// time. Requires x^u in S_x.
template <GarsidePresentation P>
TransportOrbit<CanonicalForm<P>> transport_orbit(const P& p, const Trajectory<P>& traj,
                                                 const CanonicalForm<P>& u) {
  return detail::iterate_to_cycle(u, [&](const CanonicalForm<P>& v) {
    CanonicalForm<P> cur = v;
    for (std::size_t j = 0; j < traj.period(); ++j) {
      cur = transport(p, traj.context(j), cur);
    }
    return cur;
  });
}

template <GarsidePresentation P>
TransportOrbit<typename P::Simple> transport_orbit_simple(const P& p, const Trajectory<P>& traj,
                                                          const typename P::Simple& u) {
  return detail::iterate_to_cycle(u, [&](const typename P::Simple& v) {
    auto cur = v;
    for (std::size_t j = 0; j < traj.period(); ++j) {
      cur = transport_simple(p, traj.context(j), cur);
    }
    return cur;
  });
}

// rho_s: the least simple c with s <= c and y^c in S_x, for y in S_x with
// len(y) > 0. Writing y = delta^k w, the conditions are
//   inf:  tau^k(c) <= w c
//   sup:  w c <= tau^k(c) delta^r
// and each failed condition yields a lower bound that every solution above
// c must also satisfy, so c climbs monotonically to rho_s.
template <GarsidePresentation P>
typename P::Simple min_ss_conjugator(const P& p, const CanonicalForm<P>& y,
                                     const typename P::Simple& s) {
  detail::check_same(p, y);
  if (y.is_delta_power()) {
    throw ContractViolation("min_ss_conjugator requires canonical length > 0");
  }
  const int k = y.inf();
  const int r = y.len();
  const CanonicalForm<P> w(p.index(), 0, y.factors(), typename CanonicalForm<P>::Trusted{});
  auto c = s;
  while (true) {
    const auto z = conjugate_by_simple(p, y, c);
    if (z.inf() < k) {
      c = p.join(c, complement_of_positive_in_simple(p, w, p.tau(c, k)));
    } else if (z.sup() > k + r) {
      // c >= 1 join tau^{-(k+r)}(delta^{-r} w c)
      auto wc = multiply(p, w, from_simple(p, c));
      auto bound = multiply(p, delta_power(p, -r), tau_pow(p, wc, -(k + r)));
      c = p.join(c, as_simple(p, positive_closure(p, bound)));
    } else {
      return c;
    }
  }
}

// pi_y(s): the least simple element whose transport along y -> c(y) lies
// above s, for y in U_x with len(y) > 0.
template <GarsidePresentation P>
typename P::Simple pullback(const P& p, const CanonicalForm<P>& y, const typename P::Simple& s) {
  detail::check_same(p, y);
  if (y.is_delta_power()) {
    throw ContractViolation("pullback requires canonical length > 0");
  }
  const int k = y.inf();
  const auto& f = y.factors();
  // b_0 = 1 join tau^{-k}(B_1) s delta^{-1} = tau^{-1}(tau^{-k}(B_1^{-1} delta) \ s)
  const auto twisted = p.tau(p.right_complement(f.front()), -k);
  const auto b0 = p.tau(p.left_quotient(twisted, p.join(twisted, s)), -1);
  // b_1 = tau^k(s), b_i = B_i \ b_{i-1}
  auto b = p.tau(s, k);
  for (std::size_t i = 1; i < f.size(); ++i) {
    b = p.left_quotient(f[i], p.join(f[i], b));
  }
  return min_ss_conjugator(p, y, p.join(b0, b));
}

// p_x(s) for the base x of a trajectory: iterate pullbacks backwards around
// the trajectory, a full period at a time, until the sequence repeats, and
// return the member at the first multiple of its period past the pre-period.
template <GarsidePresentation P>
typename P::Simple stable_pullback(const P& p, const Trajectory<P>& traj,
                                   const typename P::Simple& s) {
  const std::size_t period = traj.period();
  auto orbit = detail::iterate_to_cycle(s, [&](const typename P::Simple& v) {
    auto cur = v;
    for (std::size_t j = 0; j < period; ++j) {
      cur = pullback(p, traj.element(period - 1 - j), cur);
    }
    return cur;
  });
  const std::size_t l = orbit.length();
  const std::size_t j = (orbit.first_repeat + l - 1) / l;
  return orbit.members[j * l - orbit.first_repeat];
}

// c_s for the base y of a trajectory in U_x. With discard set, returns
// nullopt when c_s is found not to be minimal in D_y.
template <GarsidePresentation P>
std::optional<typename P::Simple> min_uss_conjugator(const P& p, const Trajectory<P>& traj,
                                                     const typename P::Simple& s, bool discard) {
  const auto& y = traj.base();
  if (y.is_delta_power()) {
    throw ContractViolation("min_uss_conjugator requires canonical length > 0");
  }
  if (s == p.identity()) {
    throw ContractViolation("min_uss_conjugator requires s != 1");
  }
  const auto rho = min_ss_conjugator(p, y, s);
  const auto orbit = transport_orbit_simple(p, traj, rho);
  for (const auto& v : orbit.members) {
    if (p.left_divides(s, v)) {
      return v;
    }
  }
  const bool trivial = orbit.members.size() == 1 && orbit.members.front() == p.identity();
  if (discard) {
    if (!trivial) {
      return std::nullopt;
    }
    // A transport of rho_s reached 1, so c_s is not minimal unless it
    // divides the cycling conjugator; s <= c_s decides that in advance.
    if (!p.left_divides(s, cycling_conjugator(p, y))) {
      return std::nullopt;
    }
  }
  const auto stable = stable_pullback(p, traj, s);
  for (const auto& v : transport_orbit_simple(p, traj, stable).members) {
    if (p.left_divides(s, v)) {
      return v;
    }
  }
  throw VerificationFailure("stable pullback orbit has no element above s");
}

template <GarsidePresentation P>
struct MinimalConjugators {
  std::vector<typename P::Simple> elements;
  // True when the set was filtered down to its minimal elements, which makes
  // it exactly C_y rather than a superset.
  bool exact = false;
};

template <GarsidePresentation P>
MinimalConjugators<P> minimal_conjugator_set(const P& p, const Trajectory<P>& traj) {
  std::vector<typename P::Simple> found;
  for (int a = 0; a < p.atom_count(); ++a) {
    auto c = min_uss_conjugator(p, traj, p.atom(a), true);
    if (c && std::find(found.begin(), found.end(), *c) == found.end()) {
      found.push_back(*c);
    }
  }
  MinimalConjugators<P> result;
  result.exact = true;
  for (const auto& c : found) {
    bool minimal = true;
    for (const auto& d : found) {
      if (!(d == c) && p.left_divides(d, c)) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      result.elements.push_back(c);
    }
  }
  return result;
}

// U_x as a union of trajectories, with a conjugator from the input element
// to each trajectory base.
template <GarsidePresentation P>
class UltraSummitSet {
 public:
  struct Location {
    std::size_t trajectory = 0;
    std::size_t offset = 0;
  };

  const CanonicalForm<P>& source() const noexcept { return source_; }
  const std::vector<Trajectory<P>>& trajectories() const noexcept { return trajectories_; }
  std::size_t trajectory_count() const noexcept { return trajectories_.size(); }
  std::size_t size() const noexcept { return index_.size(); }
  int inf() const { return trajectories_.front().base().inf(); }
  int sup() const { return trajectories_.front().base().sup(); }

  bool contains(const CanonicalForm<P>& z) const { return index_.contains(z); }
  std::optional<Location> locate(const CanonicalForm<P>& z) const {
    auto it = index_.find(z);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<CanonicalForm<P>> elements() const {
    std::vector<CanonicalForm<P>> all;
    all.reserve(size());
    for (const auto& t : trajectories_) {
      all.insert(all.end(), t.elements().begin(), t.elements().end());
    }
    return all;
  }

  // c with source()^c = z; throws if z is not in the set.
  CanonicalForm<P> conjugator_to(const P& p, const CanonicalForm<P>& z) const {
    auto loc = locate(z);
    if (!loc) {
      throw ContractViolation("element is not in the ultra summit set");
    }
    return multiply(p, base_conjugators_[loc->trajectory],
                    trajectories_[loc->trajectory].conjugator_to(p, loc->offset));
  }

  const CanonicalForm<P>& base_conjugator(std::size_t t) const { return base_conjugators_.at(t); }

  // Builds U_x. When target is given, stops as soon as it is found (the
  // returned set is then partial).
  static UltraSummitSet build(const P& p, const CanonicalForm<P>& x,
                              const CanonicalForm<P>* target = nullptr) {
    UltraSummitSet u;
    u.source_ = x;
    const auto rep = uss_representative(p, x);
    u.add(p, rep.element, rep.conjugator);
    if (rep.element.is_delta_power()) {
      return u;
    }
    std::deque<std::size_t> pending{0};
    while (!pending.empty()) {
      if (target && u.contains(*target)) {
        break;
      }
      const std::size_t t = pending.front();
      pending.pop_front();
      const auto minimal = minimal_conjugator_set(p, u.trajectories_[t]);
      for (const auto& c : minimal.elements) {
        auto z = conjugate_by_simple(p, u.trajectories_[t].base(), c);
        if (u.contains(z)) {
          continue;
        }
        u.add(p, std::move(z), multiply(p, u.base_conjugators_[t], from_simple(p, c)));
        pending.push_back(u.trajectories_.size() - 1);
      }
    }
    return u;
  }

 private:
  void add(const P& p, const CanonicalForm<P>& base, CanonicalForm<P> conjugator) {
    trajectories_.push_back(Trajectory<P>::compute(p, base));
    base_conjugators_.push_back(std::move(conjugator));
    const std::size_t t = trajectories_.size() - 1;
    const auto& elements = trajectories_.back().elements();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      index_.emplace(elements[i], Location{t, i});
    }
  }

  CanonicalForm<P> source_;
  std::vector<Trajectory<P>> trajectories_;
  std::vector<CanonicalForm<P>> base_conjugators_;
  std::unordered_map<CanonicalForm<P>, Location> index_;
};

template <GarsidePresentation P>
UltraSummitSet<P> ultra_summit_set(const P& p, const CanonicalForm<P>& x) {
  return UltraSummitSet<P>::build(p, x);
}

}  // namespace garside

#endif  // GARSIDE_SUMMIT_HPP_
