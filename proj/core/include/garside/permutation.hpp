#ifndef GARSIDE_PERMUTATION_HPP_
#define GARSIDE_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace garside {

// A permutation of {0, ..., n-1}, stored as its image array. Braid
// conventions: entry i is the final position of the string that starts at
// position i, and products read left to right, so the permutation of the
// braid a*b is compose(a, b) (apply a first, then b).
class Permutation {
 public:
  using value_type = std::uint8_t;
  static constexpr std::size_t kMaxSize = 255;

  Permutation() = default;
  explicit Permutation(std::size_t n);  // identity
  explicit Permutation(std::span<const int> images);
  Permutation(std::initializer_list<int> images);

  static Permutation reversal(std::size_t n);
  // The cycle i -> i+1 (mod n).
  static Permutation rotation(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  int operator[](std::size_t i) const noexcept { return images_[i]; }
  void set(std::size_t i, int value) noexcept { images_[i] = static_cast<value_type>(value); }
  void swap_entries(std::size_t i, std::size_t j) noexcept;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  int cycle_count() const;
  std::vector<int> to_vector() const;
  std::string to_string() const;  // 1-based, e.g. "[2 1 3]"

  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

 private:
  boost::container::small_vector<value_type, 24> images_;
};

// Permutation of the braid a*b: first a, then b.
Permutation compose(const Permutation& a, const Permutation& b);

// c^{-1} p c in braid order; returns the permutation of the braid
// c^{-1} * p * c.
Permutation conjugate(const Permutation& p, const Permutation& c);

bool is_permutation(std::span<const int> images);

}  // namespace garside

template <>
struct std::hash<garside::Permutation> {
  std::size_t operator()(const garside::Permutation& p) const noexcept { return p.hash(); }
};

#endif  // GARSIDE_PERMUTATION_HPP_
