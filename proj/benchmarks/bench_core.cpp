#include <benchmark/benchmark.h>

#include <random>

#include "horo/decoration.hpp"
#include "horo/solenoid.hpp"
#include "horo/surface.hpp"

using namespace horo;

static void BM_EnumerateEdges(benchmark::State& state) {
  const int gen = static_cast<int>(state.range(0));
  for (auto _ : state) {
    FareyComplex fc = enumerate_edges(gen);
    benchmark::DoNotOptimize(fc.edges.size());
  }
}
BENCHMARK(BM_EnumerateEdges)->Arg(4)->Arg(8)->Arg(10);

static void BM_BuildDecoration(benchmark::State& state) {
  const int gen = static_cast<int>(state.range(0));
  LambdaAssignment l =
      LambdaAssignment().with_override(Edge(Rational(0, 1), Rational(1, 1)), 1.8);
  for (auto _ : state) {
    Decoration d = build_decoration(l, gen);
    benchmark::DoNotOptimize(d.points.size());
  }
}
BENCHMARK(BM_BuildDecoration)->Arg(4)->Arg(8)->Arg(10);

static void BM_DerivativeStrip(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  LambdaAssignment l = counterexample_assignment(2.0);
  for (auto _ : state) {
    auto est = derivative_at_infinity(l, depth);
    benchmark::DoNotOptimize(est.estimate);
  }
}
BENCHMARK(BM_DerivativeStrip)->Arg(32)->Arg(128);

static void BM_WordOfMat(benchmark::State& state) {
  std::mt19937 rng(1);
  PSL2Mat m;
  const PSL2Mat gens[4] = {PSL2Mat::T(), PSL2Mat::U(), PSL2Mat::T().inverse(),
                           PSL2Mat::U().inverse()};
  for (int i = 0; i < 24; ++i) m = m * gens[rng() % 2];  // positive word, length 24
  for (auto _ : state) {
    PSL2Word w = word_of_mat(m);
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK(BM_WordOfMat);

static void BM_PunctureTrace(benchmark::State& state) {
  auto gen2 = fixtures::genus2_one_puncture();
  SurfaceLambda l(9, 1.3);
  for (auto _ : state) {
    double t = puncture_trace(gen2, l, 0);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_PunctureTrace);

static void BM_Rho(benchmark::State& state) {
  auto lvl = FiniteLevel::congruence(3);
  auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 1);
  PSL2Word w = PSL2Word::parse("SUTUT");
  for (auto _ : state) {
    Mobius m = rho(d, w, 5);
    benchmark::DoNotOptimize(m.a());
  }
}
BENCHMARK(BM_Rho);

static void BM_EquivariantFlip(benchmark::State& state) {
  auto lvl = FiniteLevel::congruence(5);
  auto d = TransverseLambda::random_equivariant(lvl, 0.5, 2.0, 1);
  Edge doe(Rational(0, 1), Rational::infinity());
  for (auto _ : state) {
    TransverseLambda f = equivariant_flip(d, doe);
    benchmark::DoNotOptimize(f.slot_value(0));
  }
}
BENCHMARK(BM_EquivariantFlip);

BENCHMARK_MAIN();
