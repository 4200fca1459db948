#ifndef GARSIDE_ORACLE_WORD_MONOID_HPP_
#define GARSIDE_ORACLE_WORD_MONOID_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "garside/io.hpp"

namespace garside::oracle {

// The positive braid monoid as words in 0-based atom indices modulo the
// defining relations, explored by rewriting. Two positive words are equal
// in the monoid iff one rewrites into the other, so equivalence classes are
// computed by breadth-first search over single relation applications.
class WordMonoid {
 public:
  using AtomWord = std::vector<int>;

  WordMonoid(PresentationKind kind, int n);

  PresentationKind kind() const noexcept { return kind_; }
  int index() const noexcept { return n_; }
  int atom_count() const noexcept { return atoms_; }
  const AtomWord& delta_word() const noexcept { return delta_; }

  // All words equal to w. Throws BudgetExceeded beyond max_class words.
  std::set<AtomWord> word_class(const AtomWord& w) const;
  // Least word of the class; equal elements get equal representatives.
  AtomWord canonical(const AtomWord& w) const;
  bool equal(const AtomWord& a, const AtomWord& b) const { return canonical(a) == canonical(b); }

  // Simple elements as canonical words: all prefixes of spellings of delta.
  std::vector<AtomWord> simples() const;
  // Canonical words of the left divisors of w.
  std::set<AtomWord> left_divisors(const AtomWord& w) const;

  std::size_t max_class = 200000;

 private:
  PresentationKind kind_;
  int n_;
  int atoms_;
  AtomWord delta_;
  // Each relation is a set of mutually equal words of equal length.
  std::vector<std::vector<AtomWord>> relations_;
  mutable std::map<AtomWord, AtomWord> canonical_cache_;
};

}  // namespace garside::oracle

#endif  // GARSIDE_ORACLE_WORD_MONOID_HPP_
