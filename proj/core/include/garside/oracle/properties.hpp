#ifndef GARSIDE_ORACLE_PROPERTIES_HPP_
#define GARSIDE_ORACLE_PROPERTIES_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "garside/arithmetic.hpp"
#include "garside/oracle/brute.hpp"
#include "garside/oracle/checks.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"

namespace garside::oracle {

namespace detail {

template <GarsidePresentation P>
std::string tag(const P& p) {
  return std::string(p.name()) + " " + std::to_string(p.index()) + ": ";
}

// a right-divides b: b = q a with q a prefix of b.
template <GarsidePresentation P>
bool right_divides(const P& p, const typename P::Simple& a, const typename P::Simple& b) {
  const auto q = p.product(b, a.inverse());
  return p.left_divides(q, b);
}

}  // namespace detail

// Lattice laws on all simple elements (all triples for associativity).
template <GarsidePresentation P>
std::vector<CheckResult> lattice_properties(const P& p) {
  const auto simples = p.enumerate_simples();
  const std::string t = detail::tag(p);
  CheckResult laws{t + "meet/join commutative, absorptive, bounded"};
  CheckResult assoc{t + "meet/join associative"};
  CheckResult dual{t + "complement is an order-reversing bijection"};
  for (const auto& a : simples) {
    for (const auto& b : simples) {
      const auto m = p.meet(a, b);
      const auto j = p.join(a, b);
      laws.record(m == p.meet(b, a) && j == p.join(b, a), "commutativity");
      laws.record(p.meet(a, p.join(a, b)) == a && p.join(a, p.meet(a, b)) == a, "absorption");
      laws.record(p.left_divides(m, a) && p.left_divides(m, b), "meet divides");
      laws.record(p.left_divides(a, j) && p.left_divides(b, j), "join divisible");
      laws.record(p.left_divides(a, b) == (m == a), "order from meet");
      const bool reversed = detail::right_divides(p, p.right_complement(b), p.right_complement(a));
      dual.record(p.left_divides(a, b) == reversed, a.to_string() + " " + b.to_string());
      dual.record((a == b) == (p.right_complement(a) == p.right_complement(b)), "injective");
      for (const auto& c : simples) {
        assoc.record(p.meet(p.meet(a, b), c) == p.meet(a, p.meet(b, c)), "meet");
        assoc.record(p.join(p.join(a, b), c) == p.join(a, p.join(b, c)), "join");
      }
    }
    dual.record(p.product(a, p.right_complement(a)) == p.delta(), "s complement(s) = delta");
  }
  return {laws, assoc, dual};
}

// Positive gcd against a divisor scan, the partial order, and normal-form
// uniqueness under insertion of trivial and relator subwords.
template <GarsidePresentation P>
std::vector<CheckResult> arithmetic_properties(const P& p, std::uint64_t seed, int samples) {
  const std::string t = detail::tag(p);
  Rng rng(seed);
  auto random_positive = [&](int max_sup) {
    std::vector<typename P::Simple> simples;
    const int count = 1 + rng.uniform_int(max_sup);
    for (int i = 0; i < count; ++i) {
      simples.push_back(random_simple(p, rng));
    }
    return normal_form(p, 0, std::span<const typename P::Simple>(simples));
  };

  CheckResult gcd{t + "positive meet equals the gcd from a divisor scan"};
  for (int i = 0; i < samples; ++i) {
    const auto u = random_positive(3);
    // Bias towards a shared prefix so the gcd is usually non-trivial.
    const auto v = rng.coin() ? multiply(p, from_simple(p, head(p, u)), random_positive(2))
                              : random_positive(3);
    gcd.record(meet_positive(p, u, v) == brute_gcd(p, u, v), format_element(p, u) + " ^ " +
                                                                 format_element(p, v));
  }

  CheckResult order{t + "left divisibility is a partial order"};
  for (int i = 0; i < samples; ++i) {
    const auto a = normalize(p, random_word(p, 1 + rng.uniform_int(6), rng));
    const auto b = rng.coin() ? multiply(p, a, random_positive(2)) : normalize(p, random_word(p, 5, rng));
    const auto c = rng.coin() ? multiply(p, b, random_positive(2)) : normalize(p, random_word(p, 5, rng));
    order.record(left_divides(p, a, a), "reflexive");
    order.record(!(left_divides(p, a, b) && left_divides(p, b, a)) || a == b, "antisymmetric");
    order.record(!(left_divides(p, a, b) && left_divides(p, b, c)) || left_divides(p, a, c),
                 "transitive");
  }

  CheckResult unique{t + "normal form is independent of the spelling"};
  WordMonoid monoid(kind_of(p), p.index());
  std::vector<std::vector<int>> pairs;
  for (int a = 0; a < p.atom_count(); ++a) {
    for (int b = 0; b < p.atom_count(); ++b) {
      pairs.push_back({a, b});
    }
  }
  for (int i = 0; i < samples; ++i) {
    const Word w = random_word(p, 2 + rng.uniform_int(10), rng);
    Word padded = w;
    for (int k = 0; k < 3; ++k) {
      const auto pos = padded.begin() + static_cast<std::ptrdiff_t>(rng.uniform(padded.size() + 1));
      Word insert;
      switch (rng.uniform_int(3)) {
        case 0: {
          const int a = rng.uniform_int(p.atom_count());
          const bool inv = rng.coin();
          insert = {Letter::generator(a, inv), Letter::generator(a, !inv)};
          break;
        }
        case 1:
          insert = {Letter::delta_letter(), Letter::delta_letter(true)};
          break;
        default: {
          // u v^{-1} for two spellings u, v of the same positive element.
          const auto& base = pairs[rng.uniform(pairs.size())];
          const auto cls = monoid.word_class(base);
          const auto& other = *std::next(cls.begin(), static_cast<std::ptrdiff_t>(rng.uniform(cls.size())));
          for (int a : base) {
            insert.push_back(Letter::generator(a));
          }
          for (auto it = other.rbegin(); it != other.rend(); ++it) {
            insert.push_back(Letter::generator(*it, true));
          }
        }
      }
      padded.insert(pos, insert.begin(), insert.end());
    }
    unique.record(normalize(p, w) == normalize(p, padded), format_word(kind_of(p), p.index(), w));
  }
  return {gcd, order, unique};
}

namespace detail {

// Summit theory against the brute-force oracle on the given elements. With
// every_member set, the per-element checks run on all of S_x and U_x;
// otherwise on a few members drawn from rng.
template <GarsidePresentation P>
std::vector<CheckResult> summit_checks(const P& p, const std::vector<CanonicalForm<P>>& elements,
                                       Rng& rng, bool every_member, const OracleBudget& budget) {
  using Simple = typename P::Simple;
  const std::string t = detail::tag(p);
  const auto simples = p.enumerate_simples();

  CheckResult closure{t + "cycling and decycling preserve S_x"};
  CheckResult equivariance{t + "cycling and decycling commute with tau"};
  CheckResult gcd_closure{t + "U_x is closed under gcds of conjugators"};
  CheckResult square{t + "transport makes the cycling square commute"};
  CheckResult meets{t + "transport preserves meets"};
  CheckResult injective{t + "transport is injective"};
  CheckResult periodic{t + "transport is periodic along a trajectory"};
  CheckResult pull{t + "pullback is minimal and the stable pullback dominates s"};
  CheckResult rho{t + "rho_s is the least conjugator into S_x above s"};
  CheckResult cs{t + "c_s is the least conjugator into U_x above s"};
  CheckResult minimal{t + "minimal conjugator set equals the brute-force C_y"};
  CheckResult uss{t + "ultra summit set equals the brute-force U_x"};

  for (const auto& x : elements) {
    for (int m : {1, 2, 3}) {
      equivariance.record(tau_pow(p, cycle(p, x), m) == cycle(p, tau_pow(p, x, m)), "cycling");
      equivariance.record(tau_pow(p, decycle(p, x), m) == decycle(p, tau_pow(p, x, m)), "decycling");
    }
    const auto sss = brute_sss(p, x, budget);
    const auto ultra = ultra_part(p, sss);
    {
      const auto u = ultra_summit_set(p, x);
      ElementSet<P> mine;
      bool conj_ok = true;
      for (const auto& e : u.elements()) {
        mine.insert(e);
        conj_ok = conj_ok && conjugate(p, x, u.conjugator_to(p, e)) == e;
      }
      uss.record(mine == ultra && conj_ok, format_element(p, x));
    }
    const auto& any = *sss.begin();
    if (any.is_delta_power()) {
      continue;
    }
    for (const auto& y : sss) {
      closure.record(sss.contains(cycle(p, y)) && sss.contains(decycle(p, y)), format_element(p, y));
    }

    // Super summit elements: transport and rho_s.
    std::vector<CanonicalForm<P>> ss_samples(sss.begin(), sss.end());
    std::sort(ss_samples.begin(), ss_samples.end());
    const std::size_t ss_count = every_member ? ss_samples.size() : std::min<std::size_t>(3, ss_samples.size());
    for (std::size_t k = 0; k < ss_count; ++k) {
      const auto& y = every_member ? ss_samples[k] : ss_samples[rng.uniform(ss_samples.size())];
      const TransportContext<P> ctx(p, y);
      const auto cy = cycle(p, y);
      std::vector<Simple> inside;
      for (const auto& s : simples) {
        if (sss.contains(conjugate_by_simple(p, y, s))) {
          inside.push_back(s);
        }
      }
      for (const auto& u : inside) {
        const auto phi = transport_simple(p, ctx, u);
        const auto general = transport(p, ctx, from_simple(p, u));
        square.record(general == from_simple(p, phi), "simple and general transport agree");
        square.record(cycle(p, conjugate_by_simple(p, y, u)) == conjugate_by_simple(p, cy, phi),
                      "square for " + u.to_string());
        for (const auto& v : inside) {
          meets.record(transport_simple(p, ctx, p.meet(u, v)) ==
                           p.meet(phi, transport_simple(p, ctx, v)),
                       u.to_string() + " " + v.to_string());
          if (!(u == v) && conjugate_by_simple(p, y, u) == conjugate_by_simple(p, y, v)) {
            injective.record(!(phi == transport_simple(p, ctx, v)), u.to_string());
          }
        }
        // A positive conjugator of length two.
        const auto& w = inside[rng.uniform(inside.size())];
        const auto uw = multiply(p, from_simple(p, u), from_simple(p, w));
        if (sss.contains(conjugate(p, y, uw))) {
          const auto phi2 = transport(p, ctx, uw);
          square.record(cycle(p, conjugate(p, y, uw)) == conjugate(p, cy, phi2) &&
                            phi2.sup() <= uw.sup(),
                        "square for a product");
        }
      }
      for (const auto& s : simples) {
        if (s == p.identity()) {
          continue;
        }
        const auto expected = brute_min_conjugator(p, y, s, sss, budget);
        rho.record(expected && min_ss_conjugator(p, y, s) == *expected, s.to_string());
      }
    }

    // Ultra summit elements: periodicity, gcd closure, pullbacks, c_s, C_y.
    std::vector<CanonicalForm<P>> us_samples(ultra.begin(), ultra.end());
    std::sort(us_samples.begin(), us_samples.end());
    const std::size_t us_count = every_member ? us_samples.size() : std::min<std::size_t>(2, us_samples.size());
    for (std::size_t k = 0; k < us_count; ++k) {
      const auto& y = every_member ? us_samples[k] : us_samples[rng.uniform(us_samples.size())];
      const auto traj = Trajectory<P>::compute(p, y);
      const TransportContext<P> ctx(p, y);
      std::vector<Simple> inside_u;
      for (const auto& s : simples) {
        if (ultra.contains(conjugate_by_simple(p, y, s))) {
          inside_u.push_back(s);
        }
      }
      for (const auto& u : inside_u) {
        periodic.record(transport_orbit_simple(p, traj, u).first_repeat == 0, u.to_string());
        for (const auto& v : inside_u) {
          gcd_closure.record(ultra.contains(conjugate_by_simple(p, y, p.meet(u, v))),
                             u.to_string() + " " + v.to_string());
        }
      }
      // gcd closure for positive conjugators of length two.
      for (int j = 0; j < 4 && !inside_u.empty(); ++j) {
        const auto& a = inside_u[rng.uniform(inside_u.size())];
        const auto& b = inside_u[rng.uniform(inside_u.size())];
        const auto u2 = multiply(p, from_simple(p, a), from_simple(p, random_simple(p, rng)));
        const auto v2 = multiply(p, from_simple(p, b), from_simple(p, random_simple(p, rng)));
        if (ultra.contains(conjugate(p, y, u2)) && ultra.contains(conjugate(p, y, v2))) {
          gcd_closure.record(ultra.contains(conjugate(p, y, meet_positive(p, u2, v2))), "length two");
        }
      }
      for (const auto& s : simples) {
        // pi_y(s): least simple c with y^c in S_x and s <= phi_y(c).
        std::vector<Simple> admissible;
        for (const auto& c : simples) {
          if (sss.contains(conjugate_by_simple(p, y, c)) &&
              p.left_divides(s, transport_simple(p, ctx, c))) {
            admissible.push_back(c);
          }
        }
        const auto pb = pullback(p, y, s);
        bool least = std::find(admissible.begin(), admissible.end(), pb) != admissible.end();
        for (const auto& c : admissible) {
          least = least && p.left_divides(pb, c);
        }
        pull.record(least, "pullback of " + s.to_string());
        if (s == p.identity()) {
          continue;
        }
        const auto brute_c = brute_min_conjugator(p, y, s, ultra, budget);
        const auto stable = stable_pullback(p, traj, s);
        bool dominated = false;
        for (const auto& v : transport_orbit_simple(p, traj, stable).members) {
          dominated = dominated || p.left_divides(s, v);
        }
        pull.record(brute_c && p.left_divides(stable, *brute_c) && dominated,
                    "stable pullback of " + s.to_string());
        const auto c = min_uss_conjugator(p, traj, s, false);
        cs.record(brute_c && c && *c == *brute_c, s.to_string());
      }
      auto mine = minimal_conjugator_set(p, traj).elements;
      auto expected = brute_minimal_conjugators(p, y, ultra, budget);
      std::sort(mine.begin(), mine.end());
      std::sort(expected.begin(), expected.end());
      minimal.record(mine == expected, format_element(p, y));
    }
  }
  return {uss, closure, equivariance, gcd_closure, square, meets, injective, periodic,
          pull, rho, cs, minimal};
}

}  // namespace detail

// Normal forms delta^k A_1 ... A_r with 0 <= k < m and 1 <= r <= max_len,
// where m is the order of tau, so that delta^m is central. Every element of
// length <= max_len is one of these times a central element.
template <GarsidePresentation P>
std::vector<CanonicalForm<P>> enumerate_normal_forms(const P& p, int max_len) {
  const auto simples = p.enumerate_simples();
  std::vector<typename P::Simple> proper;
  for (const auto& s : simples) {
    if (!(s == p.identity()) && !(s == p.delta())) {
      proper.push_back(s);
    }
  }
  int order = 1;
  while (std::any_of(simples.begin(), simples.end(),
                     [&](const auto& s) { return !(p.tau(s, order) == s); })) {
    ++order;
  }
  std::vector<std::vector<typename P::Simple>> level{{}};
  std::vector<CanonicalForm<P>> out;
  for (int r = 1; r <= max_len; ++r) {
    std::vector<std::vector<typename P::Simple>> next;
    for (const auto& f : level) {
      for (const auto& s : proper) {
        if (f.empty() || p.meet(p.right_complement(f.back()), s) == p.identity()) {
          next.push_back(f);
          next.back().push_back(s);
        }
      }
    }
    for (const auto& f : next) {
      for (int k = 0; k < order; ++k) {
        out.emplace_back(p.index(), k, f, typename CanonicalForm<P>::Trusted{});
      }
    }
    level = std::move(next);
  }
  return out;
}

// Summit properties on random elements delta^k A_1 ... A_r, r <= max_len.
template <GarsidePresentation P>
std::vector<CheckResult> summit_properties(const P& p, std::uint64_t seed, int samples,
                                           int max_len = 4, const OracleBudget& budget = {}) {
  Rng rng(seed);
  std::vector<CanonicalForm<P>> elements;
  for (int i = 0; i < samples; ++i) {
    elements.push_back(random_product(p, 1 + rng.uniform_int(max_len), rng));
  }
  return detail::summit_checks(p, elements, rng, false, budget);
}

// Summit properties on every normal form of length <= max_len, up to
// central factors, checked on every member of each S_x and U_x.
template <GarsidePresentation P>
std::vector<CheckResult> exhaustive_summit_properties(const P& p, int max_len,
                                                      const OracleBudget& budget = {}) {
  Rng rng(0);
  return detail::summit_checks(p, enumerate_normal_forms(p, max_len), rng, true, budget);
}

}  // namespace garside::oracle

#endif  // GARSIDE_ORACLE_PROPERTIES_HPP_
