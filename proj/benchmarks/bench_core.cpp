#include "fixtures.hpp"

#include "tao/opacity.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace tao;
using namespace tao::testing;

namespace {

EnumerationBudget suffix_budget(std::size_t steps)
{
  return EnumerationBudget{steps, {q("1"), q("50"), q("99"), q("100")}, true};
}

void BM_EnumerateSuffixBlindness(benchmark::State& state)
{
  auto a = suffix_blindness_automaton();
  auto budget = suffix_budget(static_cast<std::size_t>(state.range(0)));
  std::size_t count = 0;
  for (auto _ : state) {
    auto evolutions = enumerate_evolutions(a, budget);
    count = evolutions.size();
    benchmark::DoNotOptimize(evolutions.data());
  }
  state.counters["evolutions"] = static_cast<double>(count);
}
BENCHMARK(BM_EnumerateSuffixBlindness)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state)
{
  std::mt19937_64 rng(1);
  std::vector<ObservationSequence> sequences;
  for (int i = 0; i < 256; ++i)
    sequences.push_back(random_observation_sequence(rng, static_cast<std::size_t>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    auto c = canonicalize(sequences[i++ % sequences.size()]);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_Canonicalize)->Arg(4)->Arg(12)->Arg(32);

void BM_CheckEbtoDiamond(benchmark::State& state)
{
  auto d = diamond_automaton();
  auto evolutions = enumerate_evolutions(d, EnumerationBudget{static_cast<std::size_t>(state.range(0)),
                                                              {q("1"), q("2")}, true});
  auto secret = convert_eto(EtoSpec{*d.find_location("l1"), *d.find_location("lf")});
  ObservationConfig cfg;
  cfg.locations = {*d.find_location("lf")};
  for (auto _ : state) {
    auto v = check_ebto(evolutions, secret, cfg);
    benchmark::DoNotOptimize(v.opaque);
  }
  state.counters["evolutions"] = static_cast<double>(evolutions.size());
}
BENCHMARK(BM_CheckEbtoDiamond)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_CheckLbtoSuffixBlindness(benchmark::State& state)
{
  auto a = suffix_blindness_automaton();
  auto evolutions = enumerate_evolutions(a, suffix_budget(6));
  EventId ev = *a.find_event("a");
  auto secret = TimedLanguageSpec::finite({TimedWord({{ev, q("1")}})});
  for (auto _ : state) {
    auto v = check_lbto(evolutions, secret, {ev});
    benchmark::DoNotOptimize(v.opaque);
  }
}
BENCHMARK(BM_CheckLbtoSuffixBlindness)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
