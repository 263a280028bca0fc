#include "aristotle/dynamics.hpp"
#include "aristotle/group_models.hpp"
#include "aristotle/verify.hpp"

#include <benchmark/benchmark.h>

using namespace aristotle;

namespace {

DualVector cyclotron_dual() {
  Eigen::VectorXd v(8);
  v << 0, 1, 0, 0, 0, 0, 1, 1;
  return DualVector(v);
}

void BM_Coadjoint(benchmark::State& state) {
  const auto m = static_cast<ModelId>(state.range(0));
  const ModelParams p;
  Eigen::VectorXd c = Eigen::VectorXd::LinSpaced(static_cast<Eigen::Index>(model_dim(m)), 0.1, 0.9);
  const auto g = GroupParam::from_coords(m, c);
  DualVector xi(Eigen::VectorXd::Ones(c.size()));
  for (auto _ : state) benchmark::DoNotOptimize(coadjoint(g, xi, p));
  state.SetLabel(std::string(model_name(m)));
}
BENCHMARK(BM_Coadjoint)->DenseRange(0, 4);

void BM_ExpCoadjointSeries(benchmark::State& state) {
  const auto t = structure(ModelId::Double, ModelParams{});
  AlgebraVector x(Eigen::VectorXd::LinSpaced(8, -0.5, 0.5));
  const DualVector xi = cyclotron_dual();
  for (auto _ : state) benchmark::DoNotOptimize(exp_coadjoint(t, x, xi));
}
BENCHMARK(BM_ExpCoadjointSeries);

void BM_HamiltonianFlow(benchmark::State& state) {
  const ModelParams p;
  const DualVector xi = cyclotron_dual();
  const auto z0 = chart_from_dual(ModelId::Double, xi, p);
  const auto inv = casimirs(ModelId::Double, xi, p);
  FlowSpec s;
  s.kind = FlowKind::Hamiltonian;
  s.integrator = state.range(0) ? Integrator::ImplicitMidpoint : Integrator::Rk4;
  s.dt = 1e-3;
  s.nsteps = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_flow(s, z0, inv, double_kinetic(p), p));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.nsteps));
  state.SetLabel(state.range(0) ? "midpoint" : "rk4");
}
BENCHMARK(BM_HamiltonianFlow)->Arg(0)->Arg(1);

void BM_VerifyAll(benchmark::State& state) {
  const VerifyOptions o;
  const std::vector<ModelId> models(kAllModels.begin(), kAllModels.end());
  for (auto _ : state) benchmark::DoNotOptimize(verify_models(models, o));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
