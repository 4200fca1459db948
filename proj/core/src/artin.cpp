#include "garside/artin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace garside::artin {

namespace {

std::vector<Permutation> make_atoms(int n) {
  std::vector<Permutation> atoms;
  for (int i = 0; i + 1 < n; ++i) {
    Permutation p(static_cast<std::size_t>(n));
    p.swap_entries(static_cast<std::size_t>(i), static_cast<std::size_t>(i) + 1);
    atoms.push_back(p);
  }
  return atoms;
}

int checked_index(int n) {
  if (n < 2 || n > static_cast<int>(Permutation::kMaxSize)) {
    throw std::invalid_argument("artin braid index must lie in [2, 255]");
  }
  return n;
}

// Greedy descent absorption shared by left and right meets: while both
// arrays have a descent at the same position i, swap it away in both. The
// arrays end up holding the quotients by the common divisor.
void absorb_common_descents(Permutation& a, Permutation& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> work(static_cast<std::size_t>(std::max(n - 1, 0)));
  std::iota(work.begin(), work.end(), 0);
  while (!work.empty()) {
    const int i = work.back();
    work.pop_back();
    const auto ui = static_cast<std::size_t>(i);
    if (a[ui] > a[ui + 1] && b[ui] > b[ui + 1]) {
      a.swap_entries(ui, ui + 1);
      b.swap_entries(ui, ui + 1);
      if (i > 0) {
        work.push_back(i - 1);
      }
      if (i + 2 < n) {
        work.push_back(i + 1);
      }
    }
  }
}

}  // namespace

Presentation::Presentation(int n)
    : PermutationBackend(Permutation::reversal(static_cast<std::size_t>(checked_index(n))),
                         make_atoms(n), n * (n - 1) / 2) {}

Presentation::Simple Presentation::meet(const Simple& s, const Simple& t) const {
  // s = d * q_s with q_s the array left after absorbing descents; d = s q_s^{-1}.
  Permutation qs = s;
  Permutation qt = t;
  absorb_common_descents(qs, qt);
  return compose(s, qs.inverse());
}

Presentation::Simple Presentation::right_meet(const Simple& s, const Simple& t) const {
  // Right divisors of s are left divisors of the reversed braid, whose
  // permutation is s^{-1}.
  Permutation qs = s.inverse();
  Permutation qt = t.inverse();
  absorb_common_descents(qs, qt);
  // s = q * d with q^{-1} = qs, so d = q^{-1} s.
  return compose(qs, s);
}

Presentation::Simple Presentation::join(const Simple& s, const Simple& t) const {
  // s <= m iff (m^{-1} delta) right-divides (s^{-1} delta): the join is the
  // left complement of the right meet of the complements.
  return left_complement(right_meet(right_complement(s), right_complement(t)));
}

bool Presentation::left_divides(const Simple& s, const Simple& t) const {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s[i] > s[j] && t[i] < t[j]) {
        return false;
      }
    }
  }
  return true;
}

bool Presentation::atom_left_divides(int i, const Simple& s) const {
  if (i < 0 || i + 1 >= index()) {
    throw std::out_of_range("artin atom index out of range");
  }
  const auto ui = static_cast<std::size_t>(i);
  return s[ui] > s[ui + 1];
}

bool Presentation::atom_right_divides(int i, const Simple& s) const {
  if (i < 0 || i + 1 >= index()) {
    throw std::out_of_range("artin atom index out of range");
  }
  Permutation inv = s.inverse();
  const auto ui = static_cast<std::size_t>(i);
  return inv[ui] > inv[ui + 1];
}

int Presentation::atom_length(const Simple& s) const {
  int inversions = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      inversions += s[i] > s[j] ? 1 : 0;
    }
  }
  return inversions;
}

std::vector<int> Presentation::spell(const Simple& s) const {
  std::vector<int> word;
  Permutation rest = s;
  bool found = true;
  while (found) {
    found = false;
    for (std::size_t i = 0; i + 1 < rest.size(); ++i) {
      if (rest[i] > rest[i + 1]) {
        word.push_back(static_cast<int>(i));
        rest.swap_entries(i, i + 1);
        found = true;
        break;
      }
    }
  }
  return word;
}

std::vector<Presentation::Simple> Presentation::enumerate_simples() const {
  std::vector<int> images(static_cast<std::size_t>(index()));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Simple> all;
  do {
    all.emplace_back(std::span<const int>(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return all;
}

}  // namespace garside::artin
