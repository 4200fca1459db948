#include "garside/oracle/word_monoid.hpp"

#include <deque>

#include "garside/error.hpp"

namespace garside::oracle {

namespace {

int band_index(int t, int s) { return (t - 1) * (t - 2) / 2 + (s - 1); }

}  // namespace

WordMonoid::WordMonoid(PresentationKind kind, int n) : kind_(kind), n_(n) {
  if (kind == PresentationKind::artin) {
    atoms_ = n - 1;
    for (int i = 0; i < atoms_; ++i) {
      for (int j = i + 2; j < atoms_; ++j) {
        relations_.push_back({{i, j}, {j, i}});
      }
      if (i + 1 < atoms_) {
        relations_.push_back({{i, i + 1, i}, {i + 1, i, i + 1}});
      }
    }
    for (int top = n - 2; top >= 0; --top) {
      for (int i = 0; i <= top; ++i) {
        delta_.push_back(i);
      }
    }
    return;
  }
  atoms_ = n * (n - 1) / 2;
  for (int t = 2; t <= n; ++t) {
    for (int s = 1; s < t; ++s) {
      for (int r = 2; r <= n; ++r) {
        for (int q = 1; q < r; ++q) {
          if ((t - r) * (t - q) * (s - r) * (s - q) > 0 && band_index(t, s) < band_index(r, q)) {
            relations_.push_back({{band_index(t, s), band_index(r, q)},
                                  {band_index(r, q), band_index(t, s)}});
          }
        }
      }
      for (int r = 1; r < s; ++r) {
        relations_.push_back({{band_index(t, s), band_index(s, r)},
                              {band_index(t, r), band_index(t, s)},
                              {band_index(s, r), band_index(t, r)}});
      }
    }
  }
  for (int t = n; t >= 2; --t) {
    delta_.push_back(band_index(t, t - 1));
  }
}

std::set<WordMonoid::AtomWord> WordMonoid::word_class(const AtomWord& w) const {
  std::set<AtomWord> seen{w};
  std::deque<AtomWord> queue{w};
  while (!queue.empty()) {
    const AtomWord cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& rel : relations_) {
      const std::size_t len = rel.front().size();
      if (cur.size() < len) {
        continue;
      }
      for (std::size_t pos = 0; pos + len <= cur.size(); ++pos) {
        for (const auto& lhs : rel) {
          if (!std::equal(lhs.begin(), lhs.end(), cur.begin() + static_cast<std::ptrdiff_t>(pos))) {
            continue;
          }
          for (const auto& rhs : rel) {
            if (&rhs == &lhs) {
              continue;
            }
            AtomWord next = cur;
            std::copy(rhs.begin(), rhs.end(), next.begin() + static_cast<std::ptrdiff_t>(pos));
            if (seen.insert(next).second) {
              if (seen.size() > max_class) {
                throw BudgetExceeded("word class exceeds the oracle budget");
              }
              queue.push_back(std::move(next));
            }
          }
        }
      }
    }
  }
  return seen;
}

WordMonoid::AtomWord WordMonoid::canonical(const AtomWord& w) const {
  auto it = canonical_cache_.find(w);
  if (it != canonical_cache_.end()) {
    return it->second;
  }
  const auto cls = word_class(w);
  const AtomWord rep = *cls.begin();
  for (const auto& member : cls) {
    canonical_cache_.emplace(member, rep);
  }
  return rep;
}

std::set<WordMonoid::AtomWord> WordMonoid::left_divisors(const AtomWord& w) const {
  std::set<AtomWord> out;
  for (const auto& spelling : word_class(w)) {
    for (std::size_t len = 0; len <= spelling.size(); ++len) {
      out.insert(canonical(AtomWord(spelling.begin(), spelling.begin() + static_cast<std::ptrdiff_t>(len))));
    }
  }
  return out;
}

std::vector<WordMonoid::AtomWord> WordMonoid::simples() const {
  const auto divisors = left_divisors(delta_);
  return {divisors.begin(), divisors.end()};
}

}  // namespace garside::oracle
