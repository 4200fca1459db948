#ifndef GARSIDE_ORACLE_CHECKS_HPP_
#define GARSIDE_ORACLE_CHECKS_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "garside/arithmetic.hpp"
#include "garside/io.hpp"
#include "garside/oracle/braid_words.hpp"
#include "garside/oracle/word_monoid.hpp"
#include "garside/random.hpp"

namespace garside::oracle {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (!ok) {
      if (failures == 0) {
        first_failure = what;
      }
      ++failures;
    }
  }
  bool ok() const noexcept { return failures == 0; }
};

std::size_t factorial(int n);
std::size_t catalan(int n);

// n! for Artin, the Catalan number for band generators.
template <GarsidePresentation P>
std::size_t expected_simple_count(const P& p) {
  return kind_of(p) == PresentationKind::artin ? factorial(p.index()) : catalan(p.index());
}

template <GarsidePresentation P>
ArtinWord artin_word(const P& p, const CanonicalForm<P>& x) {
  return to_artin(kind_of(p), p.index(), to_word(p, x));
}

template <GarsidePresentation P>
ArtinWord artin_word(const P& p, const Word& w) {
  return to_artin(kind_of(p), p.index(), w);
}

// Validates the backend's simple elements, divisibility and lattice against
// the positive word monoid: every simple element is the image of exactly
// one class of prefixes of delta, and divisibility, meet, join, complement,
// twist and quotients agree with their word-level definitions.
template <GarsidePresentation P>
std::vector<CheckResult> check_conventions(const P& p) {
  using Simple = typename P::Simple;
  using AtomWord = WordMonoid::AtomWord;
  const std::string tag = std::string(p.name()) + " " + std::to_string(p.index()) + ": ";
  WordMonoid monoid(kind_of(p), p.index());
  std::vector<CheckResult> results;

  auto image = [&](const AtomWord& w) {
    Simple s = p.identity();
    for (int a : w) {
      s = p.product(s, p.atom(a));
    }
    return s;
  };
  auto word_of = [&](const Simple& s) { return AtomWord(p.spell(s)); };

  const auto classes = monoid.simples();
  const auto simples = p.enumerate_simples();
  std::map<Simple, AtomWord> class_of;
  for (const auto& c : classes) {
    class_of.emplace(image(c), c);
  }

  CheckResult count{tag + "simple count"};
  count.record(classes.size() == expected_simple_count(p),
               "word-level count " + std::to_string(classes.size()));
  count.record(simples.size() == expected_simple_count(p),
               "enumerated count " + std::to_string(simples.size()));
  results.push_back(count);

  CheckResult bijection{tag + "simple elements match prefix classes of delta"};
  bijection.record(class_of.size() == classes.size(), "two word classes share an image");
  for (const auto& s : simples) {
    bijection.record(class_of.contains(s), "simple " + s.to_string() + " has no word class");
  }
  bijection.record(image(monoid.delta_word()) == p.delta(), "delta word image");
  bijection.record(image({}) == p.identity(), "empty word image");
  for (const auto& s : simples) {
    bijection.record(class_of.contains(s) && monoid.canonical(word_of(s)) == class_of.at(s),
                     "spelling of " + s.to_string());
  }
  results.push_back(bijection);

  std::map<Simple, std::set<AtomWord>> divisors;
  for (const auto& s : simples) {
    divisors[s] = monoid.left_divisors(word_of(s));
  }
  auto word_divides = [&](const Simple& a, const Simple& b) {
    return divisors.at(b).contains(class_of.at(a));
  };

  CheckResult divides{tag + "left divisibility"};
  CheckResult atoms{tag + "atom divisibility"};
  CheckResult meet{tag + "meet is the greatest common divisor"};
  CheckResult join{tag + "join is the least common multiple"};
  for (const auto& s : simples) {
    for (int a = 0; a < p.atom_count(); ++a) {
      atoms.record(p.atom_left_divides(a, s) == divisors.at(s).contains(AtomWord{a}),
                   "atom " + std::to_string(a) + " vs " + s.to_string());
    }
    for (const auto& t : simples) {
      divides.record(p.left_divides(s, t) == word_divides(s, t), s.to_string() + " | " + t.to_string());
      const Simple m = p.meet(s, t);
      bool greatest = word_divides(m, s) && word_divides(m, t);
      for (const auto& d : simples) {
        if (word_divides(d, s) && word_divides(d, t)) {
          greatest = greatest && word_divides(d, m);
        }
      }
      meet.record(greatest, "meet " + s.to_string() + " " + t.to_string());
      const Simple j = p.join(s, t);
      bool least = word_divides(s, j) && word_divides(t, j);
      for (const auto& u : simples) {
        if (word_divides(s, u) && word_divides(t, u)) {
          least = least && word_divides(j, u);
        }
      }
      join.record(least, "join " + s.to_string() + " " + t.to_string());
    }
  }
  results.push_back(divides);
  results.push_back(atoms);
  results.push_back(meet);
  results.push_back(join);

  CheckResult algebra{tag + "complement, twist and quotient words"};
  const AtomWord delta = monoid.delta_word();
  for (const auto& s : simples) {
    AtomWord sd = word_of(s);
    const AtomWord comp = word_of(p.right_complement(s));
    sd.insert(sd.end(), comp.begin(), comp.end());
    algebra.record(monoid.equal(sd, delta), "s * complement(s) for " + s.to_string());
    // Words of length 2|delta| have large classes; compare as braids instead.
    const Word dw{Letter::delta_letter()};
    Word lhs;
    for (int a : word_of(s)) {
      lhs.push_back(Letter::generator(a));
    }
    Word rhs = dw;
    for (int a : word_of(p.tau(s, 1))) {
      rhs.push_back(Letter::generator(a));
    }
    lhs.push_back(Letter::delta_letter());
    algebra.record(same_braid(p.index(), artin_word(p, lhs), artin_word(p, rhs)).equal,
                   "s delta = delta tau(s) for " + s.to_string());
    algebra.record(p.tau(p.tau(s, 1), -1) == s, "tau inverse for " + s.to_string());
    for (const auto& t : simples) {
      if (!word_divides(s, t)) {
        continue;
      }
      AtomWord q = word_of(s);
      const AtomWord rest = word_of(p.left_quotient(s, t));
      q.insert(q.end(), rest.begin(), rest.end());
      algebra.record(monoid.equal(q, word_of(t)), "quotient " + s.to_string() + " \\ " + t.to_string());
    }
  }
  results.push_back(algebra);
  return results;
}

template <GarsidePresentation P>
Word random_word(const P& p, int length, Rng& rng, bool with_inverses = true) {
  Word w;
  for (int i = 0; i < length; ++i) {
    if (with_inverses && rng.uniform_int(10) == 0) {
      w.push_back(Letter::delta_letter(rng.coin()));
    } else {
      w.push_back(Letter::generator(rng.uniform_int(p.atom_count()), with_inverses && rng.coin()));
    }
  }
  return w;
}

// Normal forms against word-level equality: normalize, multiply, invert and
// conjugate on random words, and the defining relations.
template <GarsidePresentation P>
std::vector<CheckResult> check_normal_forms(const P& p, std::uint64_t seed, int samples) {
  const std::string tag = std::string(p.name()) + " " + std::to_string(p.index()) + ": ";
  Rng rng(seed);
  CheckResult spelling{tag + "normal form spells the input braid"};
  CheckResult greedy{tag + "normal form conditions"};
  CheckResult ops{tag + "multiply, invert and conjugate agree with words"};
  for (int i = 0; i < samples; ++i) {
    const Word a = random_word(p, 1 + rng.uniform_int(14), rng);
    const Word b = random_word(p, 1 + rng.uniform_int(14), rng);
    const auto x = normalize(p, a);
    const auto y = normalize(p, b);
    spelling.record(same_braid(p.index(), artin_word(p, a), artin_word(p, x)).equal,
                    format_word(kind_of(p), p.index(), a));
    greedy.record(is_normal(p, x.factors()), format_word(kind_of(p), p.index(), a));
    greedy.record(normalize(p, to_word(p, x)) == x, "round trip " + format_element(p, x));
    const auto xy = multiply(p, x, y);
    ops.record(same_braid(p.index(), concat(artin_word(p, a), artin_word(p, b)), artin_word(p, xy)).equal,
               "product");
    greedy.record(is_normal(p, xy.factors()), "product factors");
    const auto xi = invert(p, x);
    ops.record(same_braid(p.index(), inverse(artin_word(p, a)), artin_word(p, xi)).equal, "inverse");
    ops.record(xi.inf() == -x.sup() && xi.sup() == -x.inf(), "inverse bounds");
    ops.record(multiply(p, x, xi).is_identity(), "x * x^-1");
    const auto xc = conjugate(p, x, y);
    const auto expected = concat(concat(inverse(artin_word(p, b)), artin_word(p, a)), artin_word(p, b));
    ops.record(same_braid(p.index(), expected, artin_word(p, xc)).equal, "conjugate");
  }
  CheckResult relations{tag + "defining relations"};
  WordMonoid monoid(kind_of(p), p.index());
  const auto& delta = monoid.delta_word();
  for (int a = 0; a < p.atom_count(); ++a) {
    for (int b = 0; b < p.atom_count(); ++b) {
      for (int c = 0; c < p.atom_count(); ++c) {
        std::vector<std::vector<int>> words{{a, b}, {a, b, c}};
        for (const auto& w : words) {
          for (const auto& v : monoid.word_class(w)) {
            Word lw;
            Word lv;
            for (int t : w) {
              lw.push_back(Letter::generator(t));
            }
            for (int t : v) {
              lv.push_back(Letter::generator(t));
            }
            relations.record(normalize(p, lw) == normalize(p, lv), "relation");
          }
        }
      }
    }
  }
  Word dw;
  for (int t : delta) {
    dw.push_back(Letter::generator(t));
  }
  relations.record(normalize(p, dw) == delta_power(p, 1), "delta word");
  return {spelling, greedy, ops, relations};
}

// Runs both suites for Artin n = 3..max_artin and BKL n = 3..max_bkl.
std::vector<CheckResult> run_oracle_checks(int max_artin, int max_bkl, std::uint64_t seed,
                                           int samples);

}  // namespace garside::oracle

#endif  // GARSIDE_ORACLE_CHECKS_HPP_
