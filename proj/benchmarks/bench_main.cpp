#include <random>
#include <string>

#include <benchmark/benchmark.h>

#include "parikhseq/count.hpp"
#include "parikhseq/parikh_matrix.hpp"
#include "parikhseq/sequence_matrix.hpp"

namespace {

using namespace parikhseq;

std::string random_word(std::size_t n, std::string_view alphabet, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::string w(n, ' ');
  for (char& c : w) c = alphabet[gen() % alphabet.size()];
  return w;
}

void BM_SeqFold(benchmark::State& state) {
  const GenSeq q = parse_genseq("ab.b.ca");
  const std::string w = random_word(static_cast<std::size_t>(state.range(0)), "abc", 1);
  for (auto _ : state) {
    SeqMatrixFolder folder(q);
    folder.push(w);
    benchmark::DoNotOptimize(folder.current());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SeqFold)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_SeqDirect(benchmark::State& state) {
  const EntrySpec spec(parse_genseq("ab.b.ca"));
  const Word w(random_word(static_cast<std::size_t>(state.range(0)), "abc", 1));
  for (auto _ : state) benchmark::DoNotOptimize(seq_matrix_direct(spec, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SeqDirect)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_ClassicParikh(benchmark::State& state) {
  const ParikhContext ctx = ParikhContext::classic(Alphabet("abcd"));
  const Word w(random_word(static_cast<std::size_t>(state.range(0)), "abcd", 2));
  for (auto _ : state) benchmark::DoNotOptimize(parikh_matrix(ctx, w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ClassicParikh)->RangeMultiplier(10)->Range(1000, 100000)->Unit(benchmark::kMillisecond);

void BM_CountGenseq(benchmark::State& state) {
  const GenSeq q = parse_genseq("ab.ba.a");
  const std::string w = random_word(static_cast<std::size_t>(state.range(0)), "ab", 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_genseq(w, q));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CountGenseq)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
