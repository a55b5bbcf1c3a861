// Microbenchmarks for the hot paths: table validation, ideal enumeration,
// strong-closure primality checks, brace enumeration, automorphism search and
// product construction.  Run with --benchmark_min_time=... to tighten noise.
#include <benchmark/benchmark.h>

#include "skewbrace/enumerate.hpp"
#include "skewbrace/ideals.hpp"
#include "skewbrace/primality.hpp"
#include "skewbrace/products.hpp"

using namespace skewbrace;

namespace {

SemidirectSpec order48_spec() {
  auto classes = enumerate_braces(12).classes;
  const SkewBrace* simple12 = nullptr;
  for (const auto& c : classes)
    if (is_simple(c.rep)) {
      simple12 = &c.rep;
      break;
    }
  SkewBrace right = trivial_brace(make_klein());
  auto specs = enumerate_actions(*simple12, right);
  return specs.back();
}

void bm_validate_automatic(benchmark::State& state) {
  SkewBrace b = mod_p_squared_brace(5);
  for (auto _ : state)
    validate_brace_tables(b.add(), b.mul(), ValidationMode::automatic);
}
BENCHMARK(bm_validate_automatic);

void bm_validate_exhaustive(benchmark::State& state) {
  SkewBrace b = mod_p_squared_brace(5);
  for (auto _ : state)
    validate_brace_tables(b.add(), b.mul(), ValidationMode::exhaustive);
}
BENCHMARK(bm_validate_exhaustive);

void bm_all_ideals_order24(benchmark::State& state) {
  SkewBrace left = trivial_brace(make_abelian({2, 2, 3}));
  SkewBrace right = trivial_brace(make_cyclic(2));
  SemidirectProduct p = semidirect_product(enumerate_actions(left, right).front());
  for (auto _ : state) benchmark::DoNotOptimize(all_ideals(p.brace));
}
BENCHMARK(bm_all_ideals_order24);

void bm_strong_closure_mod9(benchmark::State& state) {
  SkewBrace b = mod_p_squared_brace(3);
  PrimalityOptions oracle;
  oracle.definition_oracle = true;
  for (auto _ : state)
    benchmark::DoNotOptimize(check_strongly_prime(b, oracle));
}
BENCHMARK(bm_strong_closure_mod9);

void bm_enumerate_order8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_braces(8));
}
BENCHMARK(bm_enumerate_order8);

void bm_brace_automorphisms(benchmark::State& state) {
  SkewBrace b = trivial_brace(make_abelian({2, 2, 2}));
  for (auto _ : state) benchmark::DoNotOptimize(brace_automorphisms(b));
}
BENCHMARK(bm_brace_automorphisms);

void bm_semidirect_order48(benchmark::State& state) {
  SemidirectSpec spec = order48_spec();
  for (auto _ : state) benchmark::DoNotOptimize(semidirect_product(spec));
}
BENCHMARK(bm_semidirect_order48);

}  // namespace

BENCHMARK_MAIN();
