#include "garside/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

namespace garside {

Permutation::Permutation(std::size_t n) : images_(n) {
  if (n > kMaxSize) {
    throw std::length_error("permutation size exceeds 255");
  }
  for (std::size_t i = 0; i < n; ++i) {
    images_[i] = static_cast<value_type>(i);
  }
}

Permutation::Permutation(std::span<const int> images) {
  if (!is_permutation(images)) {
    throw std::invalid_argument("not a permutation");
  }
  images_.reserve(images.size());
  for (int v : images) {
    images_.push_back(static_cast<value_type>(v));
  }
}

Permutation::Permutation(std::initializer_list<int> images)
    : Permutation(std::span<const int>(images.begin(), images.size())) {}

Permutation Permutation::reversal(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.images_[i] = static_cast<value_type>(n - 1 - i);
  }
  return p;
}

Permutation Permutation::rotation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.images_[i] = static_cast<value_type>((i + 1) % n);
  }
  return p;
}

void Permutation::swap_entries(std::size_t i, std::size_t j) noexcept {
  std::swap(images_[i], images_[j]);
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv(size());
  for (std::size_t i = 0; i < size(); ++i) {
    inv.images_[images_[i]] = static_cast<value_type>(i);
  }
  return inv;
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) {
      continue;
    }
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
    }
  }
  return cycles;
}

std::vector<int> Permutation::to_vector() const {
  return {images_.begin(), images_.end()};
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < size(); ++i) {
    out << (i ? " " : "") << images_[i] + 1;
  }
  out << ']';
  return out.str();
}

std::size_t Permutation::hash() const noexcept {
  return boost::hash_range(images_.begin(), images_.end());
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.end(),
                                                b.images_.begin(), b.images_.end());
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation result(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    result.set(i, b[a[i]]);
  }
  return result;
}

Permutation conjugate(const Permutation& p, const Permutation& c) {
  // c^{-1} p c: a string at position i moves to c^{-1}(i), then through p,
  // then through c.
  Permutation result(p.size());
  Permutation c_inv = c.inverse();
  for (std::size_t i = 0; i < p.size(); ++i) {
    result.set(i, c[p[c_inv[i]]]);
  }
  return result;
}

bool is_permutation(std::span<const int> images) {
  if (images.size() > Permutation::kMaxSize) {
    return false;
  }
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[v]) {
      return false;
    }
    seen[v] = true;
  }
  return true;
}

}  // namespace garside
