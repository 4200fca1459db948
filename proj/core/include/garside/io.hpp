#ifndef GARSIDE_IO_HPP_
#define GARSIDE_IO_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "garside/arithmetic.hpp"
#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/canonical_form.hpp"

namespace garside {

// Text format for braid words:
//
//   artin 4          header: presentation and braid index
//   d^-1 1 -3 2      Artin tokens: i is sigma_i, -i its inverse
//   bkl 4
//   3.1 -4.2 d^2     band tokens: t.s is a_{t,s} (t > s), -t.s its inverse
//
// d^k is delta^k and may appear anywhere. Tokens are separated by
// whitespace; '/' counts as a line break and '#' starts a comment.
enum class PresentationKind { artin, bkl };

std::string_view to_string(PresentationKind kind);

struct ParsedWord {
  PresentationKind kind = PresentationKind::artin;
  int index = 0;
  Word word;
};

// Throws ParseError on malformed input.
ParsedWord parse_word(std::string_view text);
// Tokens only, for a known presentation.
Word parse_tokens(std::string_view text, PresentationKind kind, int index);

std::string format_letter(PresentationKind kind, int index, const Letter& letter);
// Body tokens, with consecutive delta letters collapsed into d^k.
std::string format_tokens(PresentationKind kind, int index, const Word& word);
std::string format_word(PresentationKind kind, int index, const Word& word);

inline PresentationKind kind_of(const artin::Presentation&) { return PresentationKind::artin; }
inline PresentationKind kind_of(const bkl::Presentation&) { return PresentationKind::bkl; }

// Canonical spelling: d^inf followed by the spellings of the factors.
template <GarsidePresentation P>
std::string format_element(const P& p, const CanonicalForm<P>& x) {
  return format_word(kind_of(p), p.index(), to_word(p, x));
}

template <GarsidePresentation P>
std::string format_simple(const P& p, const typename P::Simple& s) {
  Word word;
  for (int a : p.spell(s)) {
    word.push_back(Letter::generator(a));
  }
  return format_tokens(kind_of(p), p.index(), word);
}

}  // namespace garside

#endif  // GARSIDE_IO_HPP_
