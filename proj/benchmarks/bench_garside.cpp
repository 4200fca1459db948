#include <benchmark/benchmark.h>

#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/random.hpp"
#include "garside/summit.hpp"

namespace {

using namespace garside;

template <GarsidePresentation P>
Word random_word(const P& p, int length, Rng& rng) {
  Word w;
  for (int i = 0; i < length; ++i) {
    w.push_back(Letter::generator(rng.uniform_int(p.atom_count()), rng.coin()));
  }
  return w;
}

template <typename P>
void BM_Normalize(benchmark::State& state) {
  const P p(static_cast<int>(state.range(0)));
  Rng rng(1);
  const auto w = random_word(p, static_cast<int>(state.range(1)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(p, w));
  }
}
BENCHMARK(BM_Normalize<artin::Presentation>)->Args({10, 100})->Args({20, 200});
BENCHMARK(BM_Normalize<bkl::Presentation>)->Args({10, 100})->Args({20, 200});

template <typename P>
void BM_Multiply(benchmark::State& state) {
  const P p(static_cast<int>(state.range(0)));
  Rng rng(2);
  const auto a = random_product(p, static_cast<int>(state.range(1)), rng);
  const auto b = random_product(p, static_cast<int>(state.range(1)), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(p, a, b));
  }
}
BENCHMARK(BM_Multiply<artin::Presentation>)->Args({10, 20})->Args({20, 50});
BENCHMARK(BM_Multiply<bkl::Presentation>)->Args({10, 20})->Args({20, 50});

template <typename P>
void BM_UltraSummitSet(benchmark::State& state) {
  const P p(static_cast<int>(state.range(0)));
  Rng rng(3);
  const auto x = random_of_length(p, static_cast<int>(state.range(1)), rng);
  std::size_t size = 0;
  for (auto _ : state) {
    size = ultra_summit_set(p, x).size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["uss_size"] = static_cast<double>(size);
}
BENCHMARK(BM_UltraSummitSet<artin::Presentation>)
    ->Args({10, 20})
    ->Args({20, 20})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_UltraSummitSet<bkl::Presentation>)
    ->Args({10, 10})
    ->Args({15, 20})
    ->Unit(benchmark::kMillisecond);

template <typename P>
void BM_ConjugacySearch(benchmark::State& state) {
  const P p(static_cast<int>(state.range(0)));
  Rng rng(4);
  const auto x = random_of_length(p, static_cast<int>(state.range(1)), rng);
  const auto y = conjugate(p, x, random_product(p, 10, rng));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(conjugacy_search(p, x, y, seed++));
  }
}
BENCHMARK(BM_ConjugacySearch<artin::Presentation>)->Args({10, 20})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjugacySearch<bkl::Presentation>)->Args({10, 20})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
