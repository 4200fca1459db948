#include "garside/random.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace garside {

std::uint64_t Rng::uniform(std::uint64_t bound) {
  if (bound == 0) {
    throw std::invalid_argument("uniform bound must be positive");
  }
  // Reject the top partial copy of [0, bound) so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t v = next();
    if (v < limit) {
      return v % bound;
    }
  }
}

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  splitmix64(state);
  state ^= index * 0xd1342543de82ef95ULL;
  return splitmix64(state);
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    images[static_cast<std::size_t>(i)] = i;
  }
  for (int i = n - 1; i > 0; --i) {
    std::swap(images[static_cast<std::size_t>(i)],
              images[static_cast<std::size_t>(rng.uniform_int(i + 1))]);
  }
  return Permutation(std::span<const int>(images));
}

std::vector<int> random_dyck_path(int n, Rng& rng) {
  // n up steps and n+1 down steps in uniform order; the rotation starting
  // after the first minimum of the prefix sums is a Dyck path followed by a
  // down step, and each Dyck path arises from exactly 2n+1 arrangements.
  std::vector<int> steps(static_cast<std::size_t>(2 * n + 1), -1);
  std::fill(steps.begin(), steps.begin() + n, 1);
  for (std::size_t i = steps.size() - 1; i > 0; --i) {
    std::swap(steps[i], steps[rng.uniform(i + 1)]);
  }
  int sum = 0;
  int best = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    sum += steps[i];
    if (sum < best) {
      best = sum;
      start = i + 1;
    }
  }
  std::rotate(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(start % steps.size()),
              steps.end());
  steps.pop_back();
  return steps;
}

bkl::Blocks blocks_from_dyck_path(const std::vector<int>& steps) {
  bkl::Blocks blocks;
  std::vector<std::pair<std::size_t, int>> open;  // block, points still to place
  int run = 0;
  int point = 0;
  for (int step : steps) {
    if (step > 0) {
      ++run;
      continue;
    }
    if (run > 0) {
      blocks.push_back({});
      open.emplace_back(blocks.size() - 1, run);
      run = 0;
    }
    if (open.empty()) {
      throw std::invalid_argument("not a Dyck path");
    }
    auto& [block, remaining] = open.back();
    blocks[block].push_back(point++);
    if (--remaining == 0) {
      open.pop_back();
    }
  }
  if (!open.empty() || run != 0) {
    throw std::invalid_argument("not a Dyck path");
  }
  return blocks;
}

bkl::Blocks random_nc_partition(int n, Rng& rng) {
  return blocks_from_dyck_path(random_dyck_path(n, rng));
}

}  // namespace garside
