#include <benchmark/benchmark.h>

#include <random>

#include "hforge/heckealg.hpp"
#include "hforge/quadspace.hpp"
#include "hforge/sp4oracle.hpp"
#include "hforge/sympweil.hpp"

using namespace hforge;

static void BM_ConvolveS(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convolve_s(TwistChoice::sign, q, 3));
}
BENCHMARK(BM_ConvolveS)->Arg(3)->Arg(9)->Arg(49);

static void BM_WeilOperator(benchmark::State& state) {
  const HeisenbergRep rho(SymplecticSpace(static_cast<std::uint64_t>(state.range(0)), 1));
  const WeilSL2 omega(rho);
  std::mt19937_64 rng(1);
  const FqMatrix g = random_sl2(rho.space().field(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(omega(g));
}
BENCHMARK(BM_WeilOperator)->Arg(3)->Arg(5)->Arg(7);

static void BM_HeckeMultiply(benchmark::State& state) {
  const auto W = CoxeterSystem::from_type("G2");
  const HeckeAlgebra H(W, ParameterFunction::generic(W));
  const auto elements = W.elements_up_to_length(6);
  const HeckeElement a = H.basis(elements[elements.size() - 1]);
  const HeckeElement b = H.basis(elements[elements.size() - 2]);
  for (auto _ : state) benchmark::DoNotOptimize(H.multiply(a, b));
}
BENCHMARK(BM_HeckeMultiply);

static void BM_NormalFormAffine(benchmark::State& state) {
  const auto W = CoxeterSystem::from_type("A1~");
  Word w;
  for (int i = 0; i < state.range(0); ++i) w.push_back(i % 3 == 0 ? 0 : 1);
  for (auto _ : state) benchmark::DoNotOptimize(W.normal_form(w));
}
BENCHMARK(BM_NormalFormAffine)->Arg(16)->Arg(48);

static void BM_SpinorNorm(benchmark::State& state) {
  const auto f = FqContext::make(7);
  const auto n = static_cast<std::size_t>(state.range(0));
  const QuadraticSpace V(f, FqMatrix::identity(*f, n));
  std::mt19937_64 rng(2);
  const OrthogonalMap g = random_orthogonal(V, rng, 8);
  for (auto _ : state) benchmark::DoNotOptimize(spinor_norm(g));
}
BENCHMARK(BM_SpinorNorm)->Arg(2)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
