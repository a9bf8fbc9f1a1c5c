#include <benchmark/benchmark.h>

#include "coinslide/grundy.hpp"
#include "coinslide/sumgame.hpp"

namespace {

using namespace coinslide;

void BM_OracleTable(benchmark::State& state) {
  const auto bound = static_cast<Square>(state.range(0));
  for (auto _ : state) {
    GrundyOracle oracle(RuleVariant::PushOnlyRemoval);
    Grundy acc = 0;
    for (Square y = 1; y <= bound; ++y) {
      for (Square x = 0; x < y; ++x) acc ^= oracle.value(StrapState::two(x, y));
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleTable)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_Classify(benchmark::State& state) {
  const auto bound = static_cast<Square>(state.range(0));
  for (auto _ : state) {
    Grundy acc = 0;
    for (Square y = 1; y <= bound; ++y) {
      for (Square x = 0; x < y; ++x) acc ^= classify(x, y).value;
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * (state.range(0) + 1) / 2);
}
BENCHMARK(BM_Classify)->Arg(300)->Arg(1000);

void BM_WinningMoves(benchmark::State& state) {
  const auto far = static_cast<Square>(state.range(0));
  const SumState s{StrapState::two(far / 3, far), StrapState::two(far / 2, far - 1)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(winning_moves(s, RuleVariant::PushOnlyRemoval));
  }
}
BENCHMARK(BM_WinningMoves)->RangeMultiplier(10)->Range(100, 10000);

void BM_MinimaxSmallBoards(benchmark::State& state) {
  for (auto _ : state) {
    MinimaxSolver solver(RuleVariant::PushOnlyRemoval);
    benchmark::DoNotOptimize(
        solver.outcome({StrapState::two(8, 10), StrapState::two(7, 10)}));
  }
}
BENCHMARK(BM_MinimaxSmallBoards);

}  // namespace

BENCHMARK_MAIN();
