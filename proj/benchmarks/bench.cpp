#include <benchmark/benchmark.h>

#include <complex>

#include "canard/airy.hpp"
#include "canard/inner_vdp.hpp"
#include "canard/ode.hpp"
#include "canard/relief.hpp"
#include "canard/vdp_series.hpp"

using namespace canard;

static void BM_VdpSeries(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vdp_series(n));
    state.SetComplexityN(n);
}
BENCHMARK(BM_VdpSeries)->Arg(10)->Arg(20)->Arg(40)->Arg(60)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_PolyMul(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<Rat> c(n);
    for (int i = 0; i < n; ++i) c[i] = Rat(i + 1, 2 * i + 3);
    const Poly p(c);
    for (auto _ : state) benchmark::DoNotOptimize(p * p);
}
BENCHMARK(BM_PolyMul)->Arg(32)->Arg(128)->Arg(512);

static void BM_Airy(benchmark::State& state) {
    const std::complex<double> z(state.range(0), 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(airy(z));
}
BENCHMARK(BM_Airy)->Arg(2)->Arg(5)->Arg(10);

static void BM_VdpInnerY0(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(vdp_inner_Y0({3.0, 0.0}, 2));
}
BENCHMARK(BM_VdpInnerY0);

static void BM_OuterIntegration(benchmark::State& state) {
    ODEField f;
    f.kind = FieldKind::vdp_outer;
    f.eps = 0.2;
    f.param = {0.9684, 0.0015};
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-12;
    const ComplexPath path{{Cplx(9, 0), Cplx(1, 0)}};
    for (auto _ : state)
        benchmark::DoNotOptimize(integrate_along_path(f, path, Cplx(-0.1, 0), cfg));
}
BENCHMARK(BM_OuterIntegration)->Unit(benchmark::kMillisecond);

static void BM_ReliefDescend(benchmark::State& state) {
    const auto spec = ReliefSpec::vdp();
    DescentStop stop;
    stop.target = Cplx(1, 0);
    stop.radius = 0.05;
    for (auto _ : state)
        benchmark::DoNotOptimize(steepest_descent_path(spec, Cplx(9, 0), stop, 1e-2));
}
BENCHMARK(BM_ReliefDescend)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
