#include <benchmark/benchmark.h>

#include "elmid/adaptive_observer.hpp"
#include "elmid/experiment.hpp"
#include "elmid/online_rls.hpp"
#include "elmid/plants.hpp"
#include "elmid/ridge.hpp"
#include "elmid/rng.hpp"

using namespace elmid;

namespace {

Vec random_vec(int n, Rng& r) {
  Vec v(n);
  for (int i = 0; i < n; ++i) v[i] = r.uniform(-1.0, 1.0);
  return v;
}

void BM_HiddenOutput(benchmark::State& state) {
  const int hidden = int(state.range(0));
  const auto proj = RandomProjection::create(4, hidden, 1);
  Rng r(2);
  const Vec x = random_vec(4, r);
  for (auto _ : state) benchmark::DoNotOptimize(proj.hidden_output(x));
}
BENCHMARK(BM_HiddenOutput)->Arg(8)->Arg(64);

void BM_OnlineUpdate(benchmark::State& state) {
  const int hidden = int(state.range(0));
  Rng r(3);
  auto s = OnlineState::fresh(hidden, 2, 1e6);
  Mat H1(1, hidden);
  Mat Y1(1, 2);
  for (int j = 0; j < hidden; ++j) H1(0, j) = r.uniform(0.0, 1.0);
  Y1 << 0.3, -0.2;
  for (auto _ : state) {
    s.update(H1, Y1);
    benchmark::DoNotOptimize(s.W);
  }
}
BENCHMARK(BM_OnlineUpdate)->Arg(8)->Arg(64);

void BM_ObserverStep(benchmark::State& state) {
  const int hidden = int(state.range(0));
  const auto proj = RandomProjection::create(3, hidden, 4);
  Mat A = Mat::Zero(2, 2);
  A.diagonal() << -50.0, -50.0;
  AdaptiveObserver obs(A, proj, Mat::Zero(hidden, 2), Vec::Zero(2), 100.0);
  Rng r(5);
  const Vec z_meas = random_vec(2, r);
  const Vec x = random_vec(3, r);
  for (auto _ : state) {
    obs.step(z_meas, x, 1e-4);
    benchmark::DoNotOptimize(obs.z_hat());
  }
}
BENCHMARK(BM_ObserverStep)->Arg(8)->Arg(64);

void BM_PlantStep(benchmark::State& state) {
  const auto plant = lorentz_plant();
  Vec s = Vec::Ones(3);
  double t = 0.0;
  for (auto _ : state) {
    s = plant_rk4_step(plant, s, Vec(0), t, 1e-4);
    t += 1e-4;
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_PlantStep);

void BM_ShortExperiment(benchmark::State& state) {
  auto cfg = default_config("dc_motor");
  cfg.duration = 0.5;
  for (auto _ : state) {
    const auto res = run_experiment(cfg);
    benchmark::DoNotOptimize(res.methods[0].rmse);
  }
}
BENCHMARK(BM_ShortExperiment)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
