#ifndef GARSIDE_ARTIN_HPP_
#define GARSIDE_ARTIN_HPP_

#include <string_view>
#include <vector>

#include "garside/presentation.hpp"

namespace garside::artin {

// B_n under the Artin presentation. Simple elements are permutation braids:
// every permutation of the strings, realized with each pair of strings
// crossing at most once. Atom i (0-based) is sigma_{i+1}.
//
// Divisibility convention: t left-divides s iff every pair of strings that
// crosses in t also crosses in s (pairs named by starting positions). In
// particular sigma_i divides s iff s(i) > s(i+1).
class Presentation : public PermutationBackend {
 public:
  explicit Presentation(int n);

  static constexpr std::string_view name() noexcept { return "artin"; }

  Simple meet(const Simple& s, const Simple& t) const;
  Simple right_meet(const Simple& s, const Simple& t) const;
  Simple join(const Simple& s, const Simple& t) const;
  bool left_divides(const Simple& s, const Simple& t) const;
  bool atom_left_divides(int i, const Simple& s) const;
  bool atom_right_divides(int i, const Simple& s) const;
  int atom_length(const Simple& s) const;  // number of crossings
  std::vector<int> spell(const Simple& s) const;
  std::vector<Simple> enumerate_simples() const;
};

}  // namespace garside::artin

#endif  // GARSIDE_ARTIN_HPP_
