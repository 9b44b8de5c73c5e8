#include <benchmark/benchmark.h>

#include "stallings/algebraic.hpp"
#include "stallings/detail/splitmix.hpp"
#include "stallings/factor.hpp"
#include "stallings/fringe.hpp"
#include "stallings/sampler.hpp"
#include "stallings/series.hpp"

namespace {

using namespace stallings;

GeneratingSet random_set(std::uint64_t seed, int k, std::size_t words, std::size_t length) {
  detail::SplitMix64 rng(seed);
  GeneratingSet set;
  set.ambient_rank = k;
  for (std::size_t w = 0; w < words; ++w) {
    std::vector<Letter> letters;
    while (letters.size() < length) {
      Letter next{1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k))),
                  rng.below(2) == 0 ? 1 : -1};
      if (!letters.empty() && letters.back() == next.inverted()) continue;
      letters.push_back(next);
    }
    set.generators.push_back(Word::from_letters(k, std::move(letters)));
  }
  return set;
}

void BM_fold(benchmark::State& state) {
  GeneratingSet gens = random_set(7, 2, 4, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_core_graph(gens));
  }
}
BENCHMARK(BM_fold)->Arg(16)->Arg(64)->Arg(256);

void BM_fringe_commutator(benchmark::State& state) {
  CoreGraph root = build_core_graph(GeneratingSet::parse("a b A B", 2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_fringe(root));
  }
}
BENCHMARK(BM_fringe_commutator);

void BM_fringe_power_word(benchmark::State& state) {
  Word w = Word::parse("a b", 2).power(static_cast<int>(state.range(0)));
  CoreGraph root = build_core_graph(GeneratingSet{2, {w}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_fringe(root));
  }
}
BENCHMARK(BM_fringe_power_word)->Arg(2)->Arg(3)->Arg(4);

void BM_phi_series(benchmark::State& state) {
  FringeDag dag = enumerate_fringe(build_core_graph(GeneratingSet::parse("a^2 b^2 c^2", 3)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(phi_series(dag, 6));
  }
}
BENCHMARK(BM_phi_series);

void BM_is_primitive(benchmark::State& state) {
  Word w = Word::parse("a b a b B A", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_primitive(w));
  }
}
BENCHMARK(BM_is_primitive);

void BM_exhaustive_probability(benchmark::State& state) {
  GeneratingSet gens = GeneratingSet::parse("a b A B", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_probability(gens, 5));
  }
}
BENCHMARK(BM_exhaustive_probability);

void BM_monte_carlo(benchmark::State& state) {
  GeneratingSet gens = GeneratingSet::parse("a b A B", 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_probability(gens, 10, state.range(0), 1));
  }
}
BENCHMARK(BM_monte_carlo)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
