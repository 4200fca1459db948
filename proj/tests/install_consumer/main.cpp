#include "garside/io.hpp"
#include "garside/summit.hpp"

int main() {
  const garside::artin::Presentation p(3);
  const auto x = garside::normalize(p, garside::parse_word("artin 3 / 1 1").word);
  return garside::ultra_summit_set(p, x).size() == 2 ? 0 : 1;
}
