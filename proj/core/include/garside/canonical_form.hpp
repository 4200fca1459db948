#ifndef GARSIDE_CANONICAL_FORM_HPP_
#define GARSIDE_CANONICAL_FORM_HPP_

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/container_hash/hash.hpp>

#include "garside/presentation.hpp"

namespace garside {

// One letter of a group word: an atom, its inverse, or delta^{+-1}.
struct Letter {
  int atom = 0;
  bool inverse = false;
  bool delta = false;

  static constexpr Letter generator(int a, bool inv = false) { return {a, inv, false}; }
  static constexpr Letter delta_letter(bool inv = false) { return {0, inv, true}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Left normal form delta^inf A_1 ... A_r of a group element. Instances are
// produced by the arithmetic in garside/arithmetic.hpp and always satisfy:
// no A_i equals 1 or delta, and every adjacent pair is left-weighted
// (A_i^{-1} delta meet A_{i+1} = 1).
template <GarsidePresentation P>
class CanonicalForm {
 public:
  using Simple = typename P::Simple;

  // Tag for constructing from factors already known to be in normal form.
  struct Trusted {};

  CanonicalForm() = default;
  CanonicalForm(int index, int inf, std::vector<Simple> factors, Trusted)
      : index_(index), inf_(inf), factors_(std::move(factors)) {}

  int index() const noexcept { return index_; }
  int inf() const noexcept { return inf_; }
  int sup() const noexcept { return inf_ + len(); }
  int len() const noexcept { return static_cast<int>(factors_.size()); }
  const std::vector<Simple>& factors() const noexcept { return factors_; }
  const Simple& factor(std::size_t i) const { return factors_.at(i); }
  bool is_delta_power() const noexcept { return factors_.empty(); }
  bool is_identity() const noexcept { return inf_ == 0 && factors_.empty(); }
  bool is_positive() const noexcept { return inf_ >= 0; }

  std::size_t hash() const noexcept {
    std::size_t seed = 0;
    boost::hash_combine(seed, inf_);
    for (const auto& f : factors_) {
      boost::hash_combine(seed, f.hash());
    }
    return seed;
  }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  // Ordered by infimum, then factor payloads.
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  int index_ = 0;
  int inf_ = 0;
  std::vector<Simple> factors_;
};

}  // namespace garside

template <garside::GarsidePresentation P>
struct std::hash<garside::CanonicalForm<P>> {
  std::size_t operator()(const garside::CanonicalForm<P>& x) const noexcept { return x.hash(); }
};

#endif  // GARSIDE_CANONICAL_FORM_HPP_
