#include <benchmark/benchmark.h>

#include "minherm/certify.hpp"
#include "minherm/companion.hpp"
#include "minherm/construct.hpp"
#include "minherm/eigen.hpp"
#include "minherm/majorize.hpp"
#include "minherm/oracle.hpp"
#include "minherm/rng.hpp"

using namespace minherm;

namespace {

HermitianMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex z(rng.gaussian(), rng.gaussian());
      m(i, j) = z;
      m(j, i) = std::conj(z);
    }
  }
  return hermitian_from_entries(m);
}

ConstructionSpec balanced_spec(std::size_t n) {
  const std::size_t r = n / 2;
  const std::size_t s = n - r;
  RealVector a(r, static_cast<double>(s));
  RealVector x(s, static_cast<double>(r));
  return ConstructionSpec::create(1.0, MajorizationInstance::create(a, x, 0), {});
}

void BM_eigh(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix m = random_hermitian(n, 1234);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigh(m));
  }
}
BENCHMARK(BM_eigh)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_certify_minimal(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const HermitianMatrix m = build_minimal(balanced_spec(n)).matrix;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_minimal(m));
  }
}
BENCHMARK(BM_certify_minimal)->Arg(4)->Arg(8);

void BM_schur_horn(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const ConstructionSpec spec = balanced_spec(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(schur_horn_zero_diag(spec.instance()));
  }
}
BENCHMARK(BM_schur_horn)->Arg(8)->Arg(32);

void BM_distance_oracle(benchmark::State& state) {
  const HermitianMatrix m = build_minimal(balanced_spec(4)).matrix;
  DistanceOptions opts;
  opts.starts = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_to_diagonals(m, opts));
  }
}
BENCHMARK(BM_distance_oracle);

void BM_hull_membership(benchmark::State& state) {
  Rng rng(77);
  const std::size_t n = 8, k = 8;
  std::vector<RealVector> gens(k, RealVector(n, 0.0));
  for (auto& g : gens)
    for (double& v : g) v = rng.uniform(0.0, 1.0);
  RealVector target(n, 0.0);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) target[i] += gens[j][i] / static_cast<double>(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hull_membership(target, gens, HullKind::Convex));
  }
}
BENCHMARK(BM_hull_membership);

}  // namespace

BENCHMARK_MAIN();
