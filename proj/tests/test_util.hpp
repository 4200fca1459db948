#ifndef GARSIDE_TESTS_TEST_UTIL_HPP_
#define GARSIDE_TESTS_TEST_UTIL_HPP_

#include <string_view>

#include "garside/io.hpp"
#include "garside/oracle/braid_words.hpp"
#include "garside/oracle/checks.hpp"
#include "garside/summit.hpp"

namespace garside::test {

// Normal form of a token string such as "1 -2 d" or "3.1 2.1".
template <GarsidePresentation P>
CanonicalForm<P> el(const P& p, std::string_view tokens) {
  return normalize(p, parse_tokens(tokens, kind_of(p), p.index()));
}

template <GarsidePresentation P>
typename P::Simple simple(const P& p, std::string_view tokens) {
  return as_simple(p, el(p, tokens));
}

// Independent equality through the free-group action of the Artin words.
template <GarsidePresentation P>
bool same_element(const P& p, const CanonicalForm<P>& a, const CanonicalForm<P>& b) {
  return oracle::same_braid(p.index(), oracle::artin_word(p, a), oracle::artin_word(p, b)).equal;
}

}  // namespace garside::test

#endif  // GARSIDE_TESTS_TEST_UTIL_HPP_
