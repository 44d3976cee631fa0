#include <benchmark/benchmark.h>

#include "fanocert/bounds.hpp"
#include "fanocert/groebner.hpp"
#include "fanocert/regularity.hpp"
#include "fanocert/resolution_graph.hpp"
#include "fanocert/sqrt_series.hpp"

using namespace fanocert;

namespace {

Polynomial<Rational> dense_rational(int nvars, unsigned degree, std::uint64_t seed) {
  CoefficientSampler<Rational> sampler;
  return random_homogeneous<Rational>(nvars, degree, seed, sampler);
}

BranchSeries<Rational> dense_series(int l, int nvars, std::uint64_t seed) {
  SplitMix64 rng(seed);
  CoefficientSampler<Rational> sampler;
  std::vector<Polynomial<Rational>> w;
  for (int j = 1; j <= 2 * l; ++j)
    w.push_back(random_homogeneous<Rational>(nvars, static_cast<unsigned>(j), rng, sampler));
  return BranchSeries<Rational>::from_components(l, nvars, std::move(w));
}

void BM_PolynomialMultiply(benchmark::State& state) {
  const auto f = dense_rational(4, 4, 1);
  const auto g = dense_rational(4, 4, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(f * g);
  }
}
BENCHMARK(BM_PolynomialMultiply);

void BM_TruncatedSqrt(benchmark::State& state) {
  const int l = static_cast<int>(state.range(0));
  const auto g = dense_series(l, 3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(truncated_sqrt(g, 2 * l));
  }
}
BENCHMARK(BM_TruncatedSqrt)->Arg(2)->Arg(3);

void BM_GroebnerCurve(benchmark::State& state) {
  const std::uint64_t p = kDefaultPrime;
  auto z = [&](int i) { return Polynomial<Fp>::variable(3, i, Fp{1, p}); };
  const std::vector<Polynomial<Fp>> system{z(0) * z(0) - z(1) * z(2),
                                           z(1) * z(1) - z(0) * z(2)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(gb::ideal_dimension(system, 3));
  }
}
BENCHMARK(BM_GroebnerCurve);

void BM_RegularityCheck(benchmark::State& state) {
  FamilyDescriptor desc;
  desc.M = 4;
  desc.k = 1;
  desc.d = {2};
  desc.m = 1;
  desc.l = {3};
  const std::uint64_t p = kDefaultPrime;
  CoefficientSampler<Fp> sampler;
  sampler.p = p;
  SplitMix64 rng(11);
  const auto point = sample_point_fp(desc.ambient_vars(), p, rng);
  const auto inst = sample_instance<Fp>(desc, point, 0, 99, sampler);
  const auto frame = taylor_frame(inst, std::span<const Fp>(point));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_regular(frame));
  }
}
BENCHMARK(BM_RegularityCheck);

void BM_SurfaceGraphEnumeration(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_surface_graphs(n));
  }
}
BENCHMARK(BM_SurfaceGraphEnumeration)->Arg(6)->Arg(8);

void BM_SubsetProductBound(benchmark::State& state) {
  FamilyDescriptor desc;
  desc.M = 12;
  desc.k = 2;
  desc.d = {4, 3};
  desc.m = 2;
  desc.l = {4, 3};
  const auto profile = ratio_profile(hypertangent_profile(desc, 0), desc.k + 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(subset_product_bound(profile));
  }
}
BENCHMARK(BM_SubsetProductBound);

}  // namespace

BENCHMARK_MAIN();
