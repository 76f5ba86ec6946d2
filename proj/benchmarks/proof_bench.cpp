// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "bench_util.hpp"
#include "ncproof/check.hpp"
#include "ncproof/translate.hpp"

namespace {

void BM_CommutatorProof(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = bench::random_formula(rng, n, 4);
  const auto g = bench::random_formula(rng, n, 4);
  std::size_t size = 0;
  for (auto _ : state) {
    auto proof = ncproof::translate::commutator_proof(f, g);
    size = proof.formula_size();
    benchmark::DoNotOptimize(proof);
  }
  state.counters["proof_size"] = static_cast<double>(size);
}
BENCHMARK(BM_CommutatorProof)->Arg(7)->Arg(15)->Arg(31);

void BM_CheckCommutatorProof(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto proof =
      ncproof::translate::commutator_proof(bench::random_formula(rng, n, 4), bench::random_formula(rng, n, 4));
  for (auto _ : state) benchmark::DoNotOptimize(ncproof::check(proof));
  state.counters["lines"] = static_cast<double>(proof.lines.size());
}
BENCHMARK(BM_CheckCommutatorProof)->Arg(7)->Arg(15)->Arg(31);

}  // namespace
