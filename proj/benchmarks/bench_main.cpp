// Timings for the heavier exact computations.
#include <benchmark/benchmark.h>

#include "twistbv/bv.hpp"
#include "twistbv/comparison.hpp"
#include "twistbv/examples.hpp"

namespace {

using namespace twistbv;

comparison::ProductSetup qci_setup(std::size_t m, std::size_t n, const Scalar& q) {
  auto d = examples::build_qci(m, n, q);
  return comparison::ProductSetup(d.left, d.right, d.t);
}

void BM_Cohomology(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  auto fr = examples::qci_product(examples::build_qci(2, 2, 2));
  for (auto _ : state) {
    hochschild::BarComplex cx(fr.algebra, algebra::regular_bimodule(fr.algebra));
    benchmark::DoNotOptimize(hochschild::cohomology(cx, level).dimension);
  }
}
BENCHMARK(BM_Cohomology)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_BvDelta(benchmark::State& state) {
  const auto level = static_cast<std::size_t>(state.range(0));
  bv::BVContext ctx(examples::build_truncated(3));
  auto group = hochschild::cohomology(ctx.complex(), level);
  std::vector<hochschild::Cochain> reps;
  for (const auto& r : group.representatives) reps.push_back(ctx.invariant_representative(r));
  for (auto _ : state)
    for (const auto& r : reps) benchmark::DoNotOptimize(bv::bv_delta(ctx, r).values.size());
}
BENCHMARK(BM_BvDelta)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_IdentityCheck(benchmark::State& state) {
  auto ps = qci_setup(2, 2, 2);
  const auto level = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(comparison::identity_check(ps, level).pairs_checked);
}
BENCHMARK(BM_IdentityCheck)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MainTheorem(benchmark::State& state) {
  auto ps = qci_setup(2, 3, 2);
  const auto level = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(comparison::verify_main_theorem(ps, level).pairs.size());
}
BENCHMARK(BM_MainTheorem)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_BvAxioms(benchmark::State& state) {
  bv::BVContext ctx(examples::build_truncated(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(bv::check_bv_axioms(ctx, 3).instances_checked);
}
BENCHMARK(BM_BvAxioms)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
