#ifndef GARSIDE_RANDOM_HPP_
#define GARSIDE_RANDOM_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "garside/arithmetic.hpp"
#include "garside/artin.hpp"
#include "garside/bkl.hpp"
#include "garside/canonical_form.hpp"

namespace garside {

// Seeded generator: the 64-bit Mersenne Twister (std::mt19937_64, whose
// output sequence is fixed by the standard) with bounded draws done by
// rejection, so sequences agree across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  int uniform_int(int bound) { return static_cast<int>(uniform(static_cast<std::uint64_t>(bound))); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// splitmix64 step; used to derive independent per-sample seeds.
std::uint64_t splitmix64(std::uint64_t& state);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Uniform permutation of {0..n-1} (Fisher-Yates).
Permutation random_permutation(int n, Rng& rng);

// Uniform Dyck path of semilength n as +1/-1 steps (cycle lemma).
std::vector<int> random_dyck_path(int n, Rng& rng);
// Non-crossing partition of a Dyck path: the i-th down step is point i; a run
// of m up steps before it opens a block of size m containing i, an empty run
// puts i into the innermost open block.
bkl::Blocks blocks_from_dyck_path(const std::vector<int>& steps);
bkl::Blocks random_nc_partition(int n, Rng& rng);

inline Permutation random_simple(const artin::Presentation& p, Rng& rng) {
  return random_permutation(p.index(), rng);
}

inline Permutation random_simple(const bkl::Presentation& p, Rng& rng) {
  return p.from_blocks(random_nc_partition(p.index(), rng));
}

// delta^k A_1 ... A_r with k in {0, 1} and independent uniform simples.
template <GarsidePresentation P>
CanonicalForm<P> random_product(const P& p, int r, Rng& rng) {
  std::vector<typename P::Simple> simples;
  simples.reserve(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) {
    simples.push_back(random_simple(p, rng));
  }
  const int k = rng.uniform_int(2);
  return normal_form(p, k, std::span<const typename P::Simple>(simples));
}

// Random element of canonical length r: multiply uniform simples until the
// product has length r, then put a random delta^k (k in {0,1}) in front.
template <GarsidePresentation P>
CanonicalForm<P> random_of_length(const P& p, int r, Rng& rng) {
  std::vector<typename P::Simple> factors;
  // len grows by at most one per simple, so it reaches r exactly.
  int inf = 0;
  while (true) {
    detail::append_simple(p, factors, random_simple(p, rng));
    auto x = detail::finish(p, inf, factors);
    if (x.len() == r) {
      const int k = rng.uniform_int(2);
      return CanonicalForm<P>(p.index(), x.inf() + k, x.factors(),
                              typename CanonicalForm<P>::Trusted{});
    }
    inf = x.inf();
    factors = x.factors();
  }
}

}  // namespace garside

#endif  // GARSIDE_RANDOM_HPP_
