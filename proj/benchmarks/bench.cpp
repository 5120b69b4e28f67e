#include <benchmark/benchmark.h>

#include "oereo/continuants.hpp"
#include "oereo/euclid.hpp"
#include "oereo/fib_array.hpp"
#include "oereo/sequences.hpp"

using namespace oereo;

static void BM_RunEaWorstCase(benchmark::State& state) {
  auto [a, b] = worst_case_pair(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    EATrace t = run_ea(a, b);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_RunEaWorstCase)->Arg(20)->Arg(54)->Arg(200);

static void BM_EvalRecurrence(benchmark::State& state) {
  std::vector<Int> values(state.range(0), 7);
  for (auto _ : state) {
    Int v = eval_recurrence(PolyKind::H, values);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_EvalRecurrence)->Arg(10)->Arg(100)->Arg(1000);

static void BM_Bezout(benchmark::State& state) {
  Int a = fib_number(static_cast<int>(state.range(0)) + 1);
  Int b = fib_number(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    BezoutResult r = bezout(a, b);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_Bezout)->Arg(20)->Arg(54)->Arg(200);

static void BM_Enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto seqs = enumerate_sequences(SeqKind::OE, n);
    benchmark::DoNotOptimize(seqs);
  }
}
BENCHMARK(BM_Enumerate)->Arg(10)->Arg(15)->Arg(20);

static void BM_FibRow(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto row = fib_row(n);
    benchmark::DoNotOptimize(row);
  }
}
BENCHMARK(BM_FibRow)->Arg(30)->Arg(100)->Arg(300);

BENCHMARK_MAIN();
