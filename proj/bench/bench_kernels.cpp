// Parallel kernels against their serial references.
#include "ihara/entropy.hpp"
#include "ihara/prime_cycles.hpp"
#include "ihara/zeta.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <memory>
#include <random>

using namespace ihara;

namespace {

const OrientedLineGraph& petersen() {
  static const OrientedLineGraph olg = build_line_graph(catalog::petersen());
  return olg;
}

const OrientedLineGraph& complete(std::size_t n) {
  static std::map<std::size_t, OrientedLineGraph> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_line_graph(catalog::complete(n))).first;
  return it->second;
}

void BM_Traces(benchmark::State& state) {
  const auto& olg = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(traces(olg, 32));
}
void BM_TracesSerial(benchmark::State& state) {
  const auto& olg = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(traces_serial(olg, 32));
}
BENCHMARK(BM_Traces)->Arg(6)->Arg(10);
BENCHMARK(BM_TracesSerial)->Arg(6)->Arg(10);

void BM_ClosedWalks(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_closed_walks_bruteforce(petersen(), 12));
}
void BM_ClosedWalksSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_closed_walks_bruteforce_serial(petersen(), 12));
}
BENCHMARK(BM_ClosedWalks);
BENCHMARK(BM_ClosedWalksSerial);

void BM_Primes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primes(petersen(), 12));
}
void BM_PrimesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_primes_serial(petersen(), 12));
}
BENCHMARK(BM_Primes);
BENCHMARK(BM_PrimesSerial);

void BM_Determinant(benchmark::State& state) {
  const auto& olg = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_identity_minus(olg, 0.01L));
}
void BM_DeterminantSerial(benchmark::State& state) {
  const auto& olg = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(det_identity_minus_serial(olg, 0.01L));
}
BENCHMARK(BM_Determinant)->Arg(10)->Arg(16);
BENCHMARK(BM_DeterminantSerial)->Arg(10)->Arg(16);

void BM_SpectralRadius(benchmark::State& state) {
  const auto& olg = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(olg));
}
void BM_SpectralRadiusSerial(benchmark::State& state) {
  const auto& olg = complete(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius_serial(olg));
}
BENCHMARK(BM_SpectralRadius)->Arg(24);
BENCHMARK(BM_SpectralRadiusSerial)->Arg(24);

struct EntropyFixture {
  std::unique_ptr<IharaEntropy> entropy;
  std::vector<ProbabilityDistribution> dists;
  EntropyFixture() {
    auto model = std::make_shared<const ZetaModel>(build_zeta_model(catalog::petersen(), 32));
    entropy = std::make_unique<IharaEntropy>(IharaEntropy::with_fraction(model, 0.5L));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<Real> u(0.01L, 1);
    for (int i = 0; i < 256; ++i) {
      std::vector<Real> p(8);
      Real sum = 0;
      for (auto& x : p) sum += (x = u(rng));
      Real rest = 1;
      for (std::size_t j = 0; j + 1 < p.size(); ++j) rest -= (p[j] /= sum);
      p.back() = rest;
      dists.emplace_back(std::move(p));
    }
  }
};

const EntropyFixture& entropy_fixture() {
  static const EntropyFixture f;
  return f;
}

void BM_EntropyBatch(benchmark::State& state) {
  const auto& f = entropy_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(entropy_batch(*f.entropy, f.dists));
}
void BM_EntropyBatchSerial(benchmark::State& state) {
  const auto& f = entropy_fixture();
  for (auto _ : state) benchmark::DoNotOptimize(entropy_batch_serial(*f.entropy, f.dists));
}
BENCHMARK(BM_EntropyBatch)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EntropyBatchSerial)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
