// Timings of the hot paths: field arithmetic, the Hecke operator, quotient
// construction, the principal-series action and generation rounds.

#include <benchmark/benchmark.h>

#include <random>

#include "modrep/pseries.hpp"
#include "modrep/quotient.hpp"

using namespace modrep;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const Field& f = Field::get(std::uint32_t(state.range(0)), 2);
  Field::code acc = 1, x = f.generator();
  for (auto _ : state) {
    acc = f.axpy(acc, acc, x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(5)->Arg(11);

void BM_HeckeT(benchmark::State& state) {
  const std::uint32_t p = std::uint32_t(state.range(0));
  WeightPtr w = make_weight(Field::get(p, 2), int(p) - 2);
  std::mt19937_64 rng(1);
  auto b = ball(p, 3);
  CIndElt f(w);
  for (const auto& v : b) {
    WeightVector x(w->dim());
    for (auto& c : x) c = Field::code(rng() % 9);
    f.add_at(v, x);
  }
  for (auto _ : state) benchmark::DoNotOptimize(hecke_T(f));
  state.counters["support"] = double(b.size());
}
BENCHMARK(BM_HeckeT)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Quotient(benchmark::State& state) {
  const std::uint32_t p = std::uint32_t(state.range(0));
  WeightPtr w = make_weight(Field::get(p, 2), 1);
  for (auto _ : state) {
    QuotientCtx ctx(w, 0, int(state.range(1)), 1);
    benchmark::DoNotOptimize(ctx.dim());
  }
}
BENCHMARK(BM_Quotient)->Args({3, 4})->Args({5, 3})->Args({5, 4})->Unit(benchmark::kMillisecond);

void BM_ActPs(benchmark::State& state) {
  const std::uint32_t p = std::uint32_t(state.range(0));
  const Field& f = Field::get(p, 2);
  SmoothCharacter eta(f, 1, f.generator());
  JFunc phi = make_basis("ell1", eta);
  GMat g = mat_s(p) * mat_u(PExact::pow_p(p, -1, 1)) * mat_alpha0(p);
  for (auto _ : state) benchmark::DoNotOptimize(act_ps(g, phi));
}
BENCHMARK(BM_ActPs)->Arg(3)->Arg(5)->Unit(benchmark::kMicrosecond);

void BM_GenerationRound(benchmark::State& state) {
  const std::uint32_t p = std::uint32_t(state.range(0));
  const Field& f = Field::get(p, 2);
  SmoothCharacter eta(f, 0, f.neg(f.one()));
  JFunc seed = make_basis("f0", eta);
  Alphabet a = Alphabet::named("SL2_default", p);
  for (auto _ : state) benchmark::DoNotOptimize(generation_check({seed}, a, 1, 1, 1));
}
BENCHMARK(BM_GenerationRound)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
