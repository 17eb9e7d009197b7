// Serial reference vs OpenMP versions of the flat-torus grid kernels.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "mirlat/quant.hpp"
#include "mirlat/quant_kernels.hpp"

using namespace mirlat::quant;

namespace {

std::vector<double> fibre_heights(std::size_t n) {
  std::vector<double> ts(n);
  for (std::size_t i = 0; i < n; ++i)
    ts[i] = static_cast<double>(i) / static_cast<double>(n);
  return ts;
}

std::vector<kernels::Point2> random_points(std::size_t n) {
  std::mt19937_64 g(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<kernels::Point2> pts(n);
  for (auto& p : pts)
    p = {u(g), u(g)};
  return pts;
}

template <bool Parallel>
void BM_holonomy(benchmark::State& st) {
  const TorusModel M = make_torus({0.5, 1.0}, 32);
  const auto ts = fibre_heights(static_cast<std::size_t>(st.range(0)));
  std::vector<double> out(ts.size());
  for (auto _ : st) {
    if constexpr (Parallel)
      kernels::holonomy_args_parallel(M, ts, out);
    else
      kernels::holonomy_args_serial(M, ts, out);
    benchmark::DoNotOptimize(out.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_theta(benchmark::State& st) {
  const TorusModel M = make_torus({0.0, 1.0}, static_cast<int>(st.range(0)));
  const auto pts = random_points(4096);
  for (auto _ : st) {
    auto v = Parallel ? kernels::theta_values_parallel(M, pts) : kernels::theta_values_serial(M, pts);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0) * 4096);
}

template <bool Parallel>
void BM_tangent(benchmark::State& st) {
  const TorusModel M = make_torus({0.5, 1.0}, 1);
  const ParamCurve c = circle_curve({0.5, 0.5}, 0.2, static_cast<int>(st.range(0)));
  for (auto _ : st) {
    auto v = Parallel ? kernels::tangent_parallel(M, c.points, false)
                      : kernels::tangent_serial(M, c.points, false);
    benchmark::DoNotOptimize(v.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

} // namespace

BENCHMARK(BM_holonomy<false>)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_holonomy<true>)->Arg(1 << 10)->Arg(1 << 14);
BENCHMARK(BM_theta<false>)->Arg(1)->Arg(8);
BENCHMARK(BM_theta<true>)->Arg(1)->Arg(8);
BENCHMARK(BM_tangent<false>)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_tangent<true>)->Arg(1 << 12)->Arg(1 << 16);

BENCHMARK_MAIN();
