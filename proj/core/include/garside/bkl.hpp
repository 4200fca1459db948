#ifndef GARSIDE_BKL_HPP_
#define GARSIDE_BKL_HPP_

#include <string_view>
#include <utility>
#include <vector>

#include "garside/presentation.hpp"

namespace garside::bkl {

// Blocks of a non-crossing partition of {0, ..., n-1}; each block sorted,
// blocks ordered by their least element.
using Blocks = std::vector<std::vector<int>>;

// B_n under the band-generator (Birman-Ko-Lee) presentation. A simple element
// is a non-crossing partition; as a braid it induces the permutation that
// sends each block {b_1 < ... < b_k} around the cycle b_1 -> b_2 -> ... ->
// b_k -> b_1, and that permutation is the stored payload. Delta is the
// single block, i.e. the rotation i -> i+1.
//
// Atom a_{t,s} (n >= t > s >= 1) is the transposition of strings s and t.
// Atoms are indexed in the order (2,1), (3,1), (3,2), (4,1), ...
class Presentation : public PermutationBackend {
 public:
  explicit Presentation(int n);

  static constexpr std::string_view name() noexcept { return "bkl"; }

  // 0-based atom index of a_{t,s}, with 1-based t > s.
  int atom_index(int t, int s) const;
  // (t, s), 1-based, of atom i.
  std::pair<int, int> atom_bands(int i) const;

  Simple meet(const Simple& s, const Simple& t) const;  // common refinement
  Simple join(const Simple& s, const Simple& t) const;  // non-crossing closure
  bool left_divides(const Simple& s, const Simple& t) const;  // refinement
  bool atom_left_divides(int i, const Simple& s) const;
  int atom_length(const Simple& s) const;  // n - number of blocks
  std::vector<int> spell(const Simple& s) const;
  std::vector<Simple> enumerate_simples() const;

  Simple from_blocks(const Blocks& blocks) const;
};

Blocks blocks_of(const Permutation& s);
// Block label of every point: the least element of its block.
std::vector<int> block_labels(const Permutation& s);
bool is_non_crossing(const Blocks& blocks);

}  // namespace garside::bkl

#endif  // GARSIDE_BKL_HPP_
