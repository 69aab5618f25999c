#include <benchmark/benchmark.h>

#include "emtoro/emtf_system.hpp"
#include "emtoro/limit_models.hpp"
#include "emtoro/sampling.hpp"

namespace {

using namespace emtoro;

PlasmaParams bench_params() {
  PlasmaParams p;
  p.m_e = 0.25;
  p.m_i = 1.0;
  p.n_bar = 1.0;
  p.pressure_e = PressureLaw{0.1, 3.0};
  p.pressure_i = PressureLaw{0.15, 3.0};
  return p;
}

struct Fixture {
  GridPtr grid;
  std::shared_ptr<const ModeWorkspace> ws;
  std::shared_ptr<const EmtfSystem> sys;
  State14 state;

  explicit Fixture(int n) {
    GridSpec gs;
    gs.n = n;
    grid = Grid::make(gs);
    ws = std::make_shared<const ModeWorkspace>(grid, bench_params());
    sys = std::make_shared<const EmtfSystem>(ws);
    Rng rng(1);
    VectorField3 ve = random_divfree(grid, 4, rng);
    VectorField3 vi = random_divfree(grid, 4, rng);
    normalize_h1_pair(ve, vi);
    ve *= 0.1;
    vi *= 0.1;
    state = prepare_data(*ws, ve, vi, 0.05);
  }
};

Fixture& fixture(int n) {
  static Fixture f16(16);
  static Fixture f32(32);
  return n == 16 ? f16 : f32;
}

void BM_FftRoundTrip(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  Rng rng(2);
  const ScalarField x = random_scalar(f.grid, 4, rng);
  for (auto _ : bs) {
    auto phys = x.to_physical();
    benchmark::DoNotOptimize(ScalarField::from_physical(f.grid, phys));
  }
}
BENCHMARK(BM_FftRoundTrip)->Arg(16)->Arg(32);

void BM_GroupApply(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  double tau = 0.1;
  for (auto _ : bs) {
    benchmark::DoNotOptimize(f.ws->apply_group(tau, f.state));
    tau += 0.1;
  }
}
BENCHMARK(BM_GroupApply)->Arg(16)->Arg(32);

void BM_ApplyPeMultiplier(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  for (auto _ : bs) {
    benchmark::DoNotOptimize(f.ws->apply_Pe(f.state));
  }
}
BENCHMARK(BM_ApplyPeMultiplier)->Arg(16)->Arg(32);

void BM_ApplyPeModewise(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  for (auto _ : bs) {
    benchmark::DoNotOptimize(f.ws->apply_Pe_modewise(f.state));
  }
}
BENCHMARK(BM_ApplyPeModewise)->Arg(16)->Arg(32);

void BM_TwoFluidRhs(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  for (auto _ : bs) {
    benchmark::DoNotOptimize(f.sys->rhs_nonstiff(0.1, f.state));
  }
}
BENCHMARK(BM_TwoFluidRhs)->Arg(16)->Arg(32);

void BM_FilteredStep(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  EmtfSystem::RunState rs{0.1, 0.0, 1e-3, f.state};
  for (auto _ : bs) {
    rs = f.sys->step(rs);
    benchmark::DoNotOptimize(rs.v);
  }
}
BENCHMARK(BM_FilteredStep)->Arg(16)->Arg(32);

void BM_SlowModelRhs(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  for (auto _ : bs) {
    benchmark::DoNotOptimize(eslm_rhs(*f.ws, f.state));
  }
}
BENCHMARK(BM_SlowModelRhs)->Arg(16)->Arg(32);

void BM_ReducedRhs(benchmark::State& bs) {
  Fixture& f = fixture(static_cast<int>(bs.range(0)));
  const XmhdState x = slm_to_xmhd(*f.ws, f.state);
  for (auto _ : bs) {
    benchmark::DoNotOptimize(xmhd_rhs(*f.ws, x));
  }
}
BENCHMARK(BM_ReducedRhs)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
