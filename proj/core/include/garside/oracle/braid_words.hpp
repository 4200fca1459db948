#ifndef GARSIDE_ORACLE_BRAID_WORDS_HPP_
#define GARSIDE_ORACLE_BRAID_WORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "garside/canonical_form.hpp"
#include "garside/io.hpp"

// Word-level braid arithmetic that shares no code with the normal form:
// equality through the (faithful) Artin action on the free group, with a
// Burau evaluation over a prime field for words too long for that.
namespace garside::oracle {

// Artin word: +i is sigma_i, -i its inverse (1-based).
using ArtinWord = std::vector<int>;

// Spells a word of either presentation in Artin generators. Band generators
// use a_{t,s} = (sigma_{t-1} ... sigma_{s+1}) sigma_s (sigma_{s+1}^{-1} ...
// sigma_{t-1}^{-1}); delta is the presentation's own Garside element.
ArtinWord to_artin(PresentationKind kind, int n, const Word& word);
ArtinWord inverse(const ArtinWord& w);
ArtinWord concat(const ArtinWord& a, const ArtinWord& b);

// Freely reduced word in x_1..x_n (+j / -j).
using FreeWord = std::vector<int>;

// Images of the free generators under the automorphism of a braid word.
// Throws BudgetExceeded once the images exceed max_letters in total.
std::vector<FreeWord> free_group_images(int n, const ArtinWord& w, std::size_t max_letters);

// Unreduced Burau matrix at a fixed point t of GF(2^61 - 1), row-major.
std::vector<std::uint64_t> burau_matrix(int n, const ArtinWord& w, std::uint64_t t);

enum class EqualityMethod { free_group, burau };

struct EqualityResult {
  bool equal = false;
  EqualityMethod method = EqualityMethod::free_group;
};

// Decides whether two Artin words represent the same braid. Uses the free
// group action when the images stay below max_letters (exact); otherwise
// compares Burau matrices at two fixed field points, which can only err by
// reporting distinct braids as equal.
EqualityResult same_braid(int n, const ArtinWord& a, const ArtinWord& b,
                          std::size_t max_letters = 1 << 20);

}  // namespace garside::oracle

#endif  // GARSIDE_ORACLE_BRAID_WORDS_HPP_
