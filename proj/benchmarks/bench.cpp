#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "wordchir/classify.hpp"

using namespace wordchir;

namespace {

std::vector<Letter> random_raw(std::mt19937& rng, int rank, int length) {
  std::uniform_int_distribution<int> gen(1, rank);
  std::uniform_int_distribution<int> flip(0, 1);
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) out.push_back(Letter{flip(rng) ? gen(rng) : -gen(rng)});
  return out;
}

void BM_Reduce(benchmark::State& state) {
  std::mt19937 rng(1);
  auto raw = random_raw(rng, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Word w(2, raw);
    benchmark::DoNotOptimize(w);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Reduce)->Arg(64)->Arg(1024)->Arg(16384);

void BM_Concat(benchmark::State& state) {
  std::mt19937 rng(2);
  Word u(2, random_raw(rng, 2, 256));
  Word v = u.inverse();
  for (auto _ : state) benchmark::DoNotOptimize(concat(u, v));
}
BENCHMARK(BM_Concat);

void BM_EndoApply(benchmark::State& state) {
  std::mt19937 rng(3);
  Word w(2, random_raw(rng, 2, 512));
  auto f = named_family(NamedFamily::TwoBlock, {3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(f.apply(w));
}
BENCHMARK(BM_EndoApply);

void BM_Minimize(benchmark::State& state) {
  Word e = engel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minimize(e));
}
BENCHMARK(BM_Minimize)->Arg(2)->Arg(4);

void BM_AutInverts_Frontier(benchmark::State& state) {
  Word w = Word::parse("x1^2 x2^2 x1 x2^-1", 2);
  for (auto _ : state) benchmark::DoNotOptimize(aut_inverts(w));
}
BENCHMARK(BM_AutInverts_Frontier);

void BM_ImageS4(benchmark::State& state) {
  auto s4 = make_group("S4");
  Word comm(2, {1, 2, -1, -2});
  for (auto _ : state) benchmark::DoNotOptimize(image(s4, comm));
}
BENCHMARK(BM_ImageS4);

void BM_ClassifyLength8(benchmark::State& state) {
  auto opts = ClassifyOptions::with_default_catalog();
  std::mt19937 rng(4);
  std::vector<Word> words;
  for (int i = 0; i < 64; ++i) {
    auto raw = random_raw(rng, 2, 8);
    words.emplace_back(2, raw);
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(words[i++ % words.size()], opts));
  }
}
BENCHMARK(BM_ClassifyLength8);

void BM_CensusLength5(benchmark::State& state) {
  ClassifyOptions opts;
  for (auto _ : state) benchmark::DoNotOptimize(census(5, opts));
}
BENCHMARK(BM_CensusLength5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
