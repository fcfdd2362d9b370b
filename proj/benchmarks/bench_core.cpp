#include <benchmark/benchmark.h>

#include "gradelie/grading.hpp"
#include "gradelie/harness/document.hpp"
#include "gradelie/harness/examples.hpp"
#include "gradelie/harness/generators.hpp"
#include "gradelie/lie_algebra.hpp"
#include "gradelie/nil.hpp"
#include "gradelie/spectral.hpp"

namespace {

using namespace gradelie;

void BM_LieClosureE2(benchmark::State& state) {
  const auto m = harness::e2();
  const std::vector<Mat> gens = {m.a, m.b};
  for (auto _ : state) benchmark::DoNotOptimize(lie_closure(gens, 3).dim());
}
BENCHMARK(BM_LieClosureE2);

void BM_NilSubspaceConjugatedUpper(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  harness::Rng rng(1);
  const auto g = harness::random_unimodular(rng, n);
  std::vector<Mat> mats;
  for (int k = 0; k < 3; ++k) mats.push_back(g.first * harness::random_upper_triangular(rng, n, true) * g.second);
  for (auto _ : state) benchmark::DoNotOptimize(is_nil_subspace(mats));
}
BENCHMARK(BM_NilSubspaceConjugatedUpper)->DenseRange(2, 5);

void BM_NilByPolarization(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  harness::Rng rng(2);
  const auto g = harness::random_unimodular(rng, n);
  std::vector<Mat> mats;
  for (int k = 0; k < 2; ++k) mats.push_back(g.first * harness::random_upper_triangular(rng, n, true) * g.second);
  for (auto _ : state) benchmark::DoNotOptimize(nil_by_polarization(mats));
}
BENCHMARK(BM_NilByPolarization)->DenseRange(2, 4);

void BM_CartanTest(benchmark::State& state) {
  harness::Rng rng(3);
  const LieAlgebra l = harness::gen_conjugated_upper(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cartan_test(l));
}
BENCHMARK(BM_CartanTest)->DenseRange(2, 5);

void BM_DecideIrreducibleE2(benchmark::State& state) {
  const auto m = harness::e2();
  const LieAlgebra l = lie_closure(std::vector<Mat>{m.a, m.b}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(decide_irreducible(l.basis(), 3).assoc_dim);
}
BENCHMARK(BM_DecideIrreducibleE2);

void BM_Triangularize(benchmark::State& state) {
  harness::Rng rng(4);
  const LieAlgebra l = harness::gen_conjugated_upper(rng, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(triangularize_solvable(l).dim());
}
BENCHMARK(BM_Triangularize)->DenseRange(2, 5);

void BM_AmpliatePauli(benchmark::State& state) {
  const SubgradedAlgebra s = harness::document_grading(harness::build_example("pauli"));
  for (auto _ : state) benchmark::DoNotOptimize(ampliate(s).ampliated.algebra().dim());
}
BENCHMARK(BM_AmpliatePauli);

void BM_SpectralRadius(benchmark::State& state) {
  harness::Rng rng(5);
  const NumMat a = to_numeric(harness::random_small_matrix(rng, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(a));
}
BENCHMARK(BM_SpectralRadius)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

BENCHMARK_MAIN();
