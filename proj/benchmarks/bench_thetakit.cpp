#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "thetakit/thetakit.hpp"

using namespace thetakit;

static void BM_ParseExpression(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(Expression::parse("2*x/sqrt(1 - x^4) + sin(x^2/2)^3"));
  }
}
BENCHMARK(BM_ParseExpression);

static void BM_EvaluateJet(benchmark::State& state) {
  const Expression e = Expression::parse("2*x/sqrt(1 - x^4) + sin(x^2/2)^3");
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.evaluate_jet(x, 3));
    x = x < 0.8 ? x + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_EvaluateJet);

static void BM_IntegrateAdaptive(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_adaptive([](double t) { return std::cos(t * t / 2); }, 0.0, 3.0));
  }
}
BENCHMARK(BM_IntegrateAdaptive);

static void BM_BuildEulerSpiral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(builtin_curve("euler_spiral"));
}
BENCHMARK(BM_BuildEulerSpiral)->Unit(benchmark::kMillisecond);

static void BM_BuildCurvatureByArcLength(benchmark::State& state) {
  const Expression k = Expression::parse("1 + s^2", "s");
  for (auto _ : state) {
    benchmark::DoNotOptimize(curve_from_curvature_arclength(k, {-2.0, 2.0}));
  }
}
BENCHMARK(BM_BuildCurvatureByArcLength)->Unit(benchmark::kMillisecond);

static void BM_SOfTheta(benchmark::State& state) {
  const auto segs = stratify(builtin_curve("euler_spiral"), {}, {0.0});
  double th = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(segs[1].s_of_theta(th));
    th = th < 4.4 ? th + 0.01 : 0.01;
  }
}
BENCHMARK(BM_SOfTheta);

static void BM_EqualThetaMarkers(benchmark::State& state) {
  const auto segs = stratify(builtin_curve("kappa_1_plus_s2"));
  const double step = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(equal_theta_markers(segs[0], step));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EqualThetaMarkers)->RangeMultiplier(4)->Range(4, 256)->Complexity();

static void BM_RevolveAndMesh(benchmark::State& state) {
  const PlaneCurve profile = curve_from_curvature_arclength(
      Expression::parse("1 + s^2", "s"), {-1.5, 1.5}, {2.0, 0.0}, std::numbers::pi / 2);
  for (auto _ : state) {
    const SurfaceOfRevolution surf = revolve(profile);
    const auto rings = equal_theta_rings(surf, 0.1);
    benchmark::DoNotOptimize(
        emit_obj_mesh(build_mesh(surf, rings, static_cast<int>(state.range(0)), true), true));
  }
}
BENCHMARK(BM_RevolveAndMesh)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
