#include "garside/oracle/braid_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "garside/error.hpp"

namespace garside::oracle {

namespace {

constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(prod & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(prod >> 61);
  std::uint64_t sum = lo + hi;
  return sum >= kPrime ? sum - kPrime : sum;
}

std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= kPrime ? s - kPrime : s;
}

std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) {
      r = mul_mod(r, a);
    }
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

void append_reduced(FreeWord& out, const FreeWord& w, bool inverted) {
  auto push = [&](int letter) {
    if (!out.empty() && out.back() == -letter) {
      out.pop_back();
    } else {
      out.push_back(letter);
    }
  };
  if (!inverted) {
    for (int letter : w) {
      push(letter);
    }
  } else {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      push(-*it);
    }
  }
}

ArtinWord artin_delta(int n) {
  ArtinWord w;
  for (int top = n - 1; top >= 1; --top) {
    for (int i = 1; i <= top; ++i) {
      w.push_back(i);
    }
  }
  return w;
}

ArtinWord bkl_delta(int n) {
  ArtinWord w;
  for (int i = n - 1; i >= 1; --i) {
    w.push_back(i);
  }
  return w;
}

ArtinWord band(int t, int s, bool inv) {
  ArtinWord w;
  for (int i = t - 1; i > s; --i) {
    w.push_back(i);
  }
  w.push_back(inv ? -s : s);
  for (int i = s + 1; i < t; ++i) {
    w.push_back(-i);
  }
  return w;
}

}  // namespace

ArtinWord inverse(const ArtinWord& w) {
  ArtinWord out(w.rbegin(), w.rend());
  for (int& letter : out) {
    letter = -letter;
  }
  return out;
}

ArtinWord concat(const ArtinWord& a, const ArtinWord& b) {
  ArtinWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

ArtinWord to_artin(PresentationKind kind, int n, const Word& word) {
  const ArtinWord delta = kind == PresentationKind::artin ? artin_delta(n) : bkl_delta(n);
  const ArtinWord delta_inv = inverse(delta);
  ArtinWord out;
  for (const Letter& letter : word) {
    if (letter.delta) {
      const auto& d = letter.inverse ? delta_inv : delta;
      out.insert(out.end(), d.begin(), d.end());
    } else if (kind == PresentationKind::artin) {
      out.push_back(letter.inverse ? -(letter.atom + 1) : letter.atom + 1);
    } else {
      int t = 2;
      while ((t - 1) * t / 2 <= letter.atom) {
        ++t;
      }
      const int s = letter.atom - (t - 1) * (t - 2) / 2 + 1;
      const auto b = band(t, s, letter.inverse);
      out.insert(out.end(), b.begin(), b.end());
    }
  }
  return out;
}

std::vector<FreeWord> free_group_images(int n, const ArtinWord& w, std::size_t max_letters) {
  std::vector<FreeWord> images(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    images[static_cast<std::size_t>(j)] = {j + 1};
  }
  std::size_t total = static_cast<std::size_t>(n);
  for (int letter : w) {
    const int i = std::abs(letter);
    if (i < 1 || i >= n) {
      throw std::out_of_range("artin generator out of range");
    }
    auto& a = images[static_cast<std::size_t>(i - 1)];
    auto& b = images[static_cast<std::size_t>(i)];
    total -= a.size() + b.size();
    FreeWord na;
    FreeWord nb;
    if (letter > 0) {
      // x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i
      append_reduced(na, a, false);
      append_reduced(na, b, false);
      append_reduced(na, a, true);
      nb = a;
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
      na = b;
      append_reduced(nb, b, true);
      append_reduced(nb, a, false);
      append_reduced(nb, b, false);
    }
    a = std::move(na);
    b = std::move(nb);
    total += a.size() + b.size();
    if (total > max_letters) {
      throw BudgetExceeded("free group images exceed the letter budget");
    }
  }
  return images;
}

std::vector<std::uint64_t> burau_matrix(int n, const ArtinWord& w, std::uint64_t t) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::uint64_t> m(un * un, 0);
  for (std::size_t i = 0; i < un; ++i) {
    m[i * un + i] = 1;
  }
  const std::uint64_t t_inv = pow_mod(t, kPrime - 2);
  for (int letter : w) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    // Right-multiply by the 2x2 block at rows/cols i, i+1.
    std::uint64_t b00, b01, b10, b11;
    if (letter > 0) {
      b00 = sub_mod(1, t);
      b01 = t;
      b10 = 1;
      b11 = 0;
    } else {
      b00 = 0;
      b01 = 1;
      b10 = t_inv;
      b11 = sub_mod(1, t_inv);
    }
    for (std::size_t r = 0; r < un; ++r) {
      const std::uint64_t x = m[r * un + i];
      const std::uint64_t y = m[r * un + i + 1];
      m[r * un + i] = add_mod(mul_mod(x, b00), mul_mod(y, b10));
      m[r * un + i + 1] = add_mod(mul_mod(x, b01), mul_mod(y, b11));
    }
  }
  return m;
}

EqualityResult same_braid(int n, const ArtinWord& a, const ArtinWord& b, std::size_t max_letters) {
  try {
    // a = b iff a b^{-1} acts trivially.
    const auto images = free_group_images(n, concat(a, inverse(b)), max_letters);
    bool trivial = true;
    for (int j = 0; j < n; ++j) {
      const auto& img = images[static_cast<std::size_t>(j)];
      trivial = trivial && img.size() == 1 && img.front() == j + 1;
    }
    return {trivial, EqualityMethod::free_group};
  } catch (const BudgetExceeded&) {
    for (std::uint64_t t : {std::uint64_t{1234567890123457}, std::uint64_t{987654321987654323}}) {
      if (burau_matrix(n, a, t) != burau_matrix(n, b, t)) {
        return {false, EqualityMethod::burau};
      }
    }
    return {true, EqualityMethod::burau};
  }
}

}  // namespace garside::oracle
