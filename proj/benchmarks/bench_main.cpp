#include <benchmark/benchmark.h>

#include "symtensor/rng.hpp"
#include "symtensor/spectral.hpp"
#include "symtensor/sym_product.hpp"
#include "symtensor/tensor_basis.hpp"
#include "symtensor/theorems.hpp"

namespace {

using namespace symtensor;

void BM_SymProductPair(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const ComplexMatrix a = rng.gaussian_matrix(d, d);
  const ComplexMatrix b = rng.gaussian_matrix(d, d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sym_product(a, b));
  }
}
BENCHMARK(BM_SymProductPair)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_SymmetrizerBuild(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetrizer(d, 3));
  }
}
BENCHMARK(BM_SymmetrizerBuild)->Arg(2)->Arg(3)->Arg(4);

void BM_HermitianEigen(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  ComplexMatrix h = rng.gaussian_matrix(n, n);
  h += h.adjoint();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigen(h, 1e-11));
  }
}
BENCHMARK(BM_HermitianEigen)->Arg(16)->Arg(32)->Arg(61);

void BM_GeneralEigen(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const ComplexMatrix m = rng.gaussian_matrix(n, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(general_eigen(m, 1e-8));
  }
}
BENCHMARK(BM_GeneralEigen)->Arg(8)->Arg(16)->Arg(32);

void BM_KernelConstruction(benchmark::State& state) {
  const int truncation = static_cast<int>(state.range(0));
  Rng rng(4);
  std::vector<Complex> mu(static_cast<std::size_t>(truncation) + 2);
  for (auto& v : mu) v = rng.uniform(0.1, 1.0) * rng.unit_phase();
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel_vector_SM(mu, truncation, 0.5));
  }
}
BENCHMARK(BM_KernelConstruction)->Arg(30)->Arg(60)->Arg(120);

void BM_ShiftBlockOracle(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(degree_block_dense(k, Flavor::symmetric));
  }
}
BENCHMARK(BM_ShiftBlockOracle)->Arg(10)->Arg(20)->Arg(25);

}  // namespace

BENCHMARK_MAIN();
