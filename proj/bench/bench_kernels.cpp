// Serial reference kernels against their OpenMP versions.
#include <random>

#include <benchmark/benchmark.h>

#include "nngeom/fieldtools.hpp"
#include "nngeom/kernels.hpp"
#include "nngeom/traindata.hpp"

using namespace nngeom;
using namespace nngeom::kernels;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = nd(rng);
  return m;
}

template <auto Kernel>
void BM_gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, 1), b = random_matrix(n, n, 2);
  Matrix c;
  for (auto _ : state) {
    Kernel(a, Trans::No, b, Trans::No, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * n * n));
}

template <auto Kernel>
void BM_syrk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 4 * n, 3);
  Matrix g;
  for (auto _ : state) {
    Kernel(a, g);
    benchmark::DoNotOptimize(g.data());
  }
}

template <auto Kernel>
void BM_field(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const MLPNetwork net = init_network({2, width, 2}, ActivationKind::sigmoid(), 7);
  for (auto _ : state) {
    GeometryField f = grid_field(-1.5, 1.5, 40);
    Kernel(net, f, FieldOptions{});
    benchmark::DoNotOptimize(f.channels.data());
  }
}

}  // namespace

BENCHMARK(BM_gemm<gemm_serial>)->Name("gemm/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_gemm<gemm_omp>)->Name("gemm/omp")->Arg(64)->Arg(256);
BENCHMARK(BM_syrk<syrk_serial>)->Name("syrk/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_syrk<syrk_omp>)->Name("syrk/omp")->Arg(64)->Arg(256);
BENCHMARK(BM_field<evaluate_field_serial>)->Name("field/serial")->Arg(20)->Arg(250);
BENCHMARK(BM_field<evaluate_field_omp>)->Name("field/omp")->Arg(20)->Arg(250);

BENCHMARK_MAIN();
