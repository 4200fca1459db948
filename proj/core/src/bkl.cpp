#include "garside/bkl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace garside::bkl {

namespace {

int checked_index(int n) {
  if (n < 2 || n > static_cast<int>(Permutation::kMaxSize)) {
    throw std::invalid_argument("bkl braid index must lie in [2, 255]");
  }
  return n;
}

std::vector<Permutation> make_atoms(int n) {
  std::vector<Permutation> atoms;
  for (int t = 1; t < n; ++t) {
    for (int s = 0; s < t; ++s) {
      Permutation p(static_cast<std::size_t>(n));
      p.swap_entries(static_cast<std::size_t>(s), static_cast<std::size_t>(t));
      atoms.push_back(p);
    }
  }
  return atoms;
}

Permutation cycles_from_labels(const std::vector<int>& labels) {
  // Points sharing a label form a block; link each point to the next larger
  // point of its block, and the largest back to the smallest.
  const std::size_t n = labels.size();
  Permutation p(n);
  std::vector<int> last(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    const auto block = static_cast<std::size_t>(labels[i]);
    if (last[block] >= 0) {
      p.set(static_cast<std::size_t>(last[block]), static_cast<int>(i));
    }
    last[block] = static_cast<int>(i);
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (last[b] >= 0) {
      p.set(static_cast<std::size_t>(last[b]), static_cast<int>(b));
    }
  }
  return p;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& px = parent_[static_cast<std::size_t>(x)];
      px = parent_[static_cast<std::size_t>(px)];
      x = px;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    // Keep the smaller element as root so roots double as block labels.
    if (b < a) {
      std::swap(a, b);
    }
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

Presentation::Presentation(int n)
    : PermutationBackend(Permutation::rotation(static_cast<std::size_t>(checked_index(n))),
                         make_atoms(n), n - 1) {}

int Presentation::atom_index(int t, int s) const {
  if (!(index() >= t && t > s && s >= 1)) {
    throw std::out_of_range("band generator indices must satisfy n >= t > s >= 1");
  }
  // Atoms with larger index t' < t come first: sum_{t'=2}^{t-1} (t'-1).
  return (t - 1) * (t - 2) / 2 + (s - 1);
}

std::pair<int, int> Presentation::atom_bands(int i) const {
  if (i < 0 || i >= atom_count()) {
    throw std::out_of_range("bkl atom index out of range");
  }
  int t = 2;
  while ((t - 1) * t / 2 <= i) {
    ++t;
  }
  return {t, i - (t - 1) * (t - 2) / 2 + 1};
}

std::vector<int> block_labels(const Permutation& s) {
  std::vector<int> labels(s.size(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (labels[i] >= 0) {
      continue;
    }
    for (std::size_t j = i; labels[j] < 0; j = static_cast<std::size_t>(s[j])) {
      labels[j] = static_cast<int>(i);
    }
  }
  return labels;
}

Blocks blocks_of(const Permutation& s) {
  const std::vector<int> labels = block_labels(s);
  std::map<int, std::vector<int>> grouped;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    grouped[labels[i]].push_back(static_cast<int>(i));
  }
  Blocks blocks;
  for (auto& [label, block] : grouped) {
    blocks.push_back(std::move(block));
  }
  return blocks;
}

bool is_non_crossing(const Blocks& blocks) {
  for (std::size_t x = 0; x < blocks.size(); ++x) {
    for (std::size_t y = 0; y < blocks.size(); ++y) {
      if (x == y) {
        continue;
      }
      for (int a : blocks[x]) {
        for (int c : blocks[x]) {
          if (c <= a) {
            continue;
          }
          bool inside = false;
          bool outside = false;
          for (int b : blocks[y]) {
            (a < b && b < c ? inside : outside) = true;
          }
          if (inside && outside) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Presentation::Simple Presentation::from_blocks(const Blocks& blocks) const {
  std::vector<int> labels(static_cast<std::size_t>(index()), -1);
  for (const auto& block : blocks) {
    if (block.empty()) {
      throw std::invalid_argument("empty block");
    }
    const int label = *std::min_element(block.begin(), block.end());
    for (int v : block) {
      if (v < 0 || v >= index() || labels[static_cast<std::size_t>(v)] >= 0) {
        throw std::invalid_argument("blocks do not partition {1..n}");
      }
      labels[static_cast<std::size_t>(v)] = label;
    }
  }
  for (int& label : labels) {
    if (label < 0) {
      throw std::invalid_argument("blocks do not partition {1..n}");
    }
  }
  Permutation result = cycles_from_labels(labels);
  if (!is_non_crossing(blocks_of(result))) {
    throw std::invalid_argument("partition is crossing");
  }
  return result;
}

Presentation::Simple Presentation::meet(const Simple& s, const Simple& t) const {
  const std::vector<int> ls = block_labels(s);
  const std::vector<int> lt = block_labels(t);
  std::map<std::pair<int, int>, int> first_seen;
  std::vector<int> labels(ls.size());
  for (std::size_t i = 0; i < ls.size(); ++i) {
    auto [it, inserted] = first_seen.try_emplace({ls[i], lt[i]}, static_cast<int>(i));
    labels[i] = it->second;
  }
  return cycles_from_labels(labels);
}

Presentation::Simple Presentation::join(const Simple& s, const Simple& t) const {
  const auto n = static_cast<std::size_t>(index());
  UnionFind uf(n);
  for (std::size_t i = 0; i < n; ++i) {
    uf.unite(static_cast<int>(i), s[i]);
    uf.unite(static_cast<int>(i), t[i]);
  }
  // Merge crossing blocks until none remain. Two blocks cross iff some
  // point strictly between consecutive elements of one block belongs to a
  // block reaching outside that gap.
  bool merged = true;
  while (merged) {
    merged = false;
    std::vector<int> lo(n, static_cast<int>(n));
    std::vector<int> hi(n, -1);
    std::vector<int> last(n, -1);
    std::vector<int> label(n);
    for (std::size_t i = 0; i < n; ++i) {
      label[i] = uf.find(static_cast<int>(i));
      const auto b = static_cast<std::size_t>(label[i]);
      lo[b] = std::min(lo[b], static_cast<int>(i));
      hi[b] = std::max(hi[b], static_cast<int>(i));
    }
    for (std::size_t i = 0; i < n && !merged; ++i) {
      const auto b = static_cast<std::size_t>(label[i]);
      const int prev = last[b];
      last[b] = static_cast<int>(i);
      if (prev < 0) {
        continue;
      }
      for (int k = prev + 1; k < static_cast<int>(i); ++k) {
        const auto kb = static_cast<std::size_t>(label[static_cast<std::size_t>(k)]);
        if (kb != b && (lo[kb] < prev || hi[kb] > static_cast<int>(i))) {
          uf.unite(static_cast<int>(b), static_cast<int>(kb));
          merged = true;
          break;
        }
      }
    }
  }
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = uf.find(static_cast<int>(i));
  }
  return cycles_from_labels(labels);
}

bool Presentation::left_divides(const Simple& s, const Simple& t) const {
  const std::vector<int> lt = block_labels(t);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (lt[i] != lt[static_cast<std::size_t>(s[i])]) {
      return false;
    }
  }
  return true;
}

bool Presentation::atom_left_divides(int i, const Simple& s) const {
  const auto [t, r] = atom_bands(i);
  const std::vector<int> labels = block_labels(s);
  return labels[static_cast<std::size_t>(t - 1)] == labels[static_cast<std::size_t>(r - 1)];
}

int Presentation::atom_length(const Simple& s) const { return index() - s.cycle_count(); }

std::vector<int> Presentation::spell(const Simple& s) const {
  // Block {b_1 < ... < b_k} is a_{b_k,b_{k-1}} ... a_{b_2,b_1}; distinct
  // blocks of a non-crossing partition commute.
  std::vector<int> word;
  for (const auto& block : blocks_of(s)) {
    for (std::size_t j = block.size(); j-- > 1;) {
      word.push_back(atom_index(block[j] + 1, block[j - 1] + 1));
    }
  }
  return word;
}

std::vector<Presentation::Simple> Presentation::enumerate_simples() const {
  // Restricted growth strings enumerate set partitions; keep non-crossing ones.
  const auto n = static_cast<std::size_t>(index());
  std::vector<Simple> all;
  std::vector<int> rgs(n, 0);
  std::vector<int> maxima(n, 0);
  while (true) {
    Blocks blocks;
    for (std::size_t i = 0; i < n; ++i) {
      if (static_cast<std::size_t>(rgs[i]) >= blocks.size()) {
        blocks.resize(static_cast<std::size_t>(rgs[i]) + 1);
      }
      blocks[static_cast<std::size_t>(rgs[i])].push_back(static_cast<int>(i));
    }
    if (is_non_crossing(blocks)) {
      all.push_back(from_blocks(blocks));
    }
    // Next restricted growth string.
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= maxima[i - 1]) {
        ++rgs[i];
        maxima[i] = std::max(maxima[i - 1], rgs[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
          rgs[j] = 0;
          maxima[j] = maxima[i];
        }
        break;
      }
    }
    if (i == 0) {
      break;
    }
  }
  return all;
}

}  // namespace garside::bkl
