#include <benchmark/benchmark.h>

#include "suval/invariant_forms.hpp"
#include "suval/kinematics.hpp"
#include "suval/polytope.hpp"
#include "suval/valuations.hpp"

using namespace suval;

namespace {

std::vector<RVector> random_generators(int count, Rng& rng) {
  std::vector<RVector> gens;
  for (int i = 0; i < count; ++i) {
    RVector g(4);
    for (int j = 0; j < 4; ++j) g(j) = rng.normal();
    gens.push_back(g);
  }
  return gens;
}

void BM_ZonotopeVolumeBruteForce(benchmark::State& state) {
  Rng rng(1);
  const auto gens = random_generators(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(zonotope_volume(gens));
}
BENCHMARK(BM_ZonotopeVolumeBruteForce)->Arg(4)->Arg(8)->Arg(12);

void BM_ZonotopeVolumeKernel(benchmark::State& state) {
  Rng rng(2);
  const int moving = static_cast<int>(state.range(0));
  const auto fixed = random_generators(4, rng);
  const ZonotopeVolumeKernel kernel(fixed, moving);
  RMatrix m(4, moving);
  for (int i = 0; i < moving; ++i) m.col(i) = random_generators(1, rng)[0];
  for (auto _ : state) benchmark::DoNotOptimize(kernel.volume(m));
}
BENCHMARK(BM_ZonotopeVolumeKernel)->Arg(2)->Arg(4);

void BM_SampleUnitary(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sample_unitary(n, rng));
}
BENCHMARK(BM_SampleUnitary)->Arg(2)->Arg(3)->Arg(8);

void BM_CoupledPair(benchmark::State& state) {
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(coupled_pair(2, rng));
}
BENCHMARK(BM_CoupledPair);

void BM_FormEvaluation(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto data = forms::phi2_rumin_data(n);
  const forms::PolyForm top = forms::wedge(forms::conjugate(data).omega, data.d_expected);
  Rng rng(5);
  const auto p = forms::SpherePoint::random(n, rng);
  const auto frame = forms::random_tangent_frame(p, 4 * n - 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(forms::eval_at(top, p, frame));
}
BENCHMARK(BM_FormEvaluation)->Arg(2)->Arg(3);

void BM_Phi2Evaluate(benchmark::State& state) {
  Rng rng(6);
  const Polytope p = Polytope::parallelotope(RVector::Zero(4), random_generators(4, rng));
  const auto phi2 = Valuation::make(ValuationKind::phi2, 2);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(phi2, p));
}
BENCHMARK(BM_Phi2Evaluate);

void BM_IntersectHrep(benchmark::State& state) {
  const std::vector<double> sides{2, 1, 2, 1};
  const Polytope k = Polytope::box(sides);
  Rng rng(7);
  const CMatrix g = sample_unitary(2, rng);
  RVector t(4);
  t << 0.3, 0.2, 0.5, 0.1;
  const Polytope l = k.transformed(g, t);
  const auto hk = k.halfspaces();
  const auto hl = l.halfspaces();
  for (auto _ : state) benchmark::DoNotOptimize(intersect_hrep(hk, hl));
}
BENCHMARK(BM_IntersectHrep);

void BM_AdditiveDelta(benchmark::State& state) {
  const std::vector<double> sides{2, 1, 2, 1};
  const Zonotope k = Zonotope::box(sides);
  KinematicOptions opts;
  opts.samples = 1000;
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(additive_kinematic_delta(k, k, opts));
}
BENCHMARK(BM_AdditiveDelta)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
