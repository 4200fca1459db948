#ifndef GARSIDE_PRESENTATION_HPP_
#define GARSIDE_PRESENTATION_HPP_

#include <concepts>
#include <cstddef>
#include <string_view>
#include <vector>

#include "garside/permutation.hpp"

namespace garside {

// What the Garside arithmetic needs from a backend. All operations act on
// simple elements (divisors of delta); divisibility is always left
// divisibility unless the name says otherwise.
template <typename P>
concept GarsidePresentation = requires(const P& p, const typename P::Simple& s, int i) {
  typename P::Simple;
  { p.index() } -> std::convertible_to<int>;
  { p.name() } -> std::convertible_to<std::string_view>;
  { p.atom_count() } -> std::convertible_to<int>;
  { p.atom(i) } -> std::convertible_to<const typename P::Simple&>;
  { p.identity() } -> std::convertible_to<const typename P::Simple&>;
  { p.delta() } -> std::convertible_to<const typename P::Simple&>;
  { p.meet(s, s) } -> std::same_as<typename P::Simple>;
  { p.join(s, s) } -> std::same_as<typename P::Simple>;
  { p.left_divides(s, s) } -> std::same_as<bool>;
  { p.atom_left_divides(i, s) } -> std::same_as<bool>;
  { p.right_complement(s) } -> std::same_as<typename P::Simple>;
  { p.tau(s, i) } -> std::same_as<typename P::Simple>;
  { p.product(s, s) } -> std::same_as<typename P::Simple>;
  { p.left_quotient(s, s) } -> std::same_as<typename P::Simple>;
  { p.atom_length(s) } -> std::convertible_to<int>;
  { p.spell(s) } -> std::same_as<std::vector<int>>;
  { p.enumerate_simples() } -> std::same_as<std::vector<typename P::Simple>>;
};

// Shared machinery for braid presentations whose simple elements are
// determined by the permutation they induce on the strings. Products,
// quotients, complements and the delta-twist are plain permutation algebra;
// the lattice operations are left to the concrete backend.
class PermutationBackend {
 public:
  using Simple = Permutation;

  int index() const noexcept { return static_cast<int>(delta_.size()); }
  int atom_count() const noexcept { return static_cast<int>(atoms_.size()); }
  const Simple& atom(int i) const { return atoms_.at(static_cast<std::size_t>(i)); }
  const std::vector<Simple>& atoms() const noexcept { return atoms_; }
  const Simple& identity() const noexcept { return identity_; }
  const Simple& delta() const noexcept { return delta_; }
  int delta_length() const noexcept { return delta_length_; }

  // s * t; requires the product to be simple.
  Simple product(const Simple& s, const Simple& t) const { return compose(s, t); }
  // s^{-1} t; requires s to left-divide t.
  Simple left_quotient(const Simple& s, const Simple& t) const;
  // s^{-1} delta
  Simple right_complement(const Simple& s) const;
  // delta s^{-1}
  Simple left_complement(const Simple& s) const;
  // delta^{-m} s delta^m
  Simple tau(const Simple& s, int m) const;
  // Order of tau on simple elements (2 for Artin, n for band generators).
  int tau_order() const noexcept { return static_cast<int>(delta_powers_.size()); }

  bool operator==(const PermutationBackend& other) const noexcept { return delta_ == other.delta_; }

 protected:
  PermutationBackend(Permutation delta, std::vector<Permutation> atoms, int delta_length);

 private:
  Simple identity_;
  Simple delta_;
  std::vector<Simple> atoms_;
  std::vector<Simple> delta_powers_;  // delta^j for 0 <= j < tau_order
  int delta_length_ = 0;
};

}  // namespace garside

#endif  // GARSIDE_PRESENTATION_HPP_
