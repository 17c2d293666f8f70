#include <benchmark/benchmark.h>

#include <random>

#include "symq/io.hpp"
#include "symq/matrix.hpp"
#include "symq/schur.hpp"
#include "symq/semiinvariant.hpp"
#include "symq/tame.hpp"

using namespace symq;

namespace {

SymmetricQuiver load(const char* name) {
  return parse_quiver_document(read_text_file(std::string(SYMQ_FIXTURE_DIR) + "/" + name)).symmetric();
}

Matrix random_skew(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = coef(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

void BM_Pfaffian(benchmark::State& state) {
  const Matrix m = random_skew(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(pfaffian(m));
}
BENCHMARK(BM_Pfaffian)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Determinant(benchmark::State& state) {
  const Matrix m = random_skew(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->Arg(8)->Arg(16)->Arg(32);

void BM_HomExt(benchmark::State& state) {
  const Quiver q = load("d10_3.qv").quiver();
  const auto p = state.range(0);
  DimVec d = scale(p, null_root(q));
  auto v = random_representation(q, d, 1), w = random_representation(q, d, 2);
  for (auto _ : state) benchmark::DoNotOptimize(dvw_and_homext(v, w).ext_dim);
}
BENCHMARK(BM_HomExt)->Arg(1)->Arg(2)->Arg(3);

void BM_LittlewoodRichardson(benchmark::State& state) {
  const Partition lambda{4, 3, 2, 1}, mu{3, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(lr_product(lambda, mu, 6).size());
}
BENCHMARK(BM_LittlewoodRichardson);

void BM_WeightSpaceDim(benchmark::State& state) {
  auto k = load("a201_00.qv");
  const auto p = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weight_space_dim(k, Flavor::Symplectic, {p, p}, {1, -1}));
}
BENCHMARK(BM_WeightSpaceDim)->Arg(2)->Arg(4)->Arg(6);

void BM_GenericDecomposition(benchmark::State& state) {
  auto t = tau_orbits(load("a11_06.qv"));
  const DimVec d = add(scale(state.range(0), t.h), parse_dim("2,3,0,2,0,3,2", t.sq.quiver()));
  for (auto _ : state) benchmark::DoNotOptimize(generic_decomposition(t, d, DecompositionMode::Symplectic).size());
}
BENCHMARK(BM_GenericDecomposition)->Arg(0)->Arg(4)->Arg(16);

void BM_TameGenerators(benchmark::State& state) {
  auto sq = load("d10_3.qv");
  const DimVec h = tau_orbits(sq).h;
  for (auto _ : state) benchmark::DoNotOptimize(generators_tame(sq, h, Flavor::Symplectic).size());
}
BENCHMARK(BM_TameGenerators);

}  // namespace

BENCHMARK_MAIN();
