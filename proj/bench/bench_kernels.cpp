// Serial reference kernels against their OpenMP versions.

#include <random>

#include <benchmark/benchmark.h>

#include "blockpos/block_pattern.hpp"
#include "blockpos/kernels.hpp"
#include "blockpos/preserver_fn.hpp"

using namespace blockpos;

namespace {

std::vector<Complex> random_entries(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<Complex> v(count);
  for (auto& z : v) {
    const double re = normal(rng);
    z = {re, normal(rng)};
  }
  return v;
}

template <auto Kernel>
void bm_hadamard(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 1), b = random_entries(n * n, 2);
  std::vector<Complex> out(n * n);
  for (auto _ : state) {
    Kernel(a, b, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

template <auto Kernel>
void bm_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_entries(n * n, 3), b = random_entries(n * n, 4);
  std::vector<Complex> out(n * n * n * n);
  for (auto _ : state) {
    Kernel(a, n, b, n, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(out.size()));
}

template <auto Kernel>
void bm_gram(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t r = n;
  const auto b = random_entries(n * r, 5);
  std::vector<Complex> out(n * n);
  for (auto _ : state) {
    Kernel(b, n, r, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Kernel>
void bm_entrywise(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RawGrid in(n), out(n);
  in.entries = random_entries(n * n, 6);
  const Mask mask = mask_matrix(rules::pair_partition().at(n));
  const auto g = PreserverFunction::herz_series({{0, 0, 1}, {1, 0, 0.5}, {2, 1, 0.25}, {3, 3, 0.1}});
  const auto f = PreserverFunction::scalar_multiple(-0.3, PreserverFunction::herz_monomial(1, 2, 1));
  for (auto _ : state) {
    Kernel(in, mask, g, f, out);
    benchmark::DoNotOptimize(out.entries.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n));
}

}  // namespace

BENCHMARK(bm_hadamard<kernels::serial::hadamard>)->Name("hadamard/serial")->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(bm_hadamard<kernels::omp::hadamard>)->Name("hadamard/omp")->Arg(64)->Arg(256)->Arg(1024)->UseRealTime();
BENCHMARK(bm_kron<kernels::serial::kron>)->Name("kron/serial")->Arg(8)->Arg(16)->Arg(32);
BENCHMARK(bm_kron<kernels::omp::kron>)->Name("kron/omp")->Arg(8)->Arg(16)->Arg(32)->UseRealTime();
BENCHMARK(bm_gram<kernels::serial::gram>)->Name("gram/serial")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_gram<kernels::omp::gram>)->Name("gram/omp")->Arg(64)->Arg(128)->Arg(256)->UseRealTime();
BENCHMARK(bm_entrywise<kernels::serial::entrywise>)->Name("entrywise/serial")->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(bm_entrywise<kernels::omp::entrywise>)->Name("entrywise/omp")->Arg(64)->Arg(256)->Arg(512)->UseRealTime();

BENCHMARK_MAIN();
