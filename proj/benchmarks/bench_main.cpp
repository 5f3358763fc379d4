#include <benchmark/benchmark.h>

#include "charprod/catalog.hpp"
#include "charprod/charops.hpp"
#include "charprod/verify.hpp"

using namespace charprod;

namespace {

const char* const kGroups[] = {"dihedral8", "sl23", "heisenberg3", "wreath3", "heisenberg5", "wreath3_x_cyclic3"};

void BM_DixonTable(benchmark::State& state) {
  GroupPtr g = builtin(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(dixon_table(g));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_DixonTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_DecomposeProducts(benchmark::State& state) {
  GroupPtr g = builtin(kGroups[state.range(0)]);
  CharacterTable t = dixon_table(g);
  for (auto _ : state) {
    for (std::size_t i = 0; i < t.size(); ++i) benchmark::DoNotOptimize(decompose(product(t[i], t[i]), t));
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_DecomposeProducts)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyGroup(benchmark::State& state) {
  GroupPtr g = builtin(kGroups[state.range(0)]);
  auto statements = parse_statements("A,B,C,lemma,bound");
  for (auto _ : state) benchmark::DoNotOptimize(verify_group("g", g, statements));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_VerifyGroup)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_CyclotomicMultiply(benchmark::State& state) {
  const auto e = static_cast<std::uint32_t>(state.range(0));
  Cyclotomic a = Cyclotomic::root_of_unity(e, 1) + Cyclotomic::root_of_unity(e, 3) + Cyclotomic(2);
  Cyclotomic b = Cyclotomic::root_of_unity(e, e - 1) - Cyclotomic::root_of_unity(e, 2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(4)->Arg(9)->Arg(27)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
