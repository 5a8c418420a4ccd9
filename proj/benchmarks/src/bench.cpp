#include <benchmark/benchmark.h>

#include <random>

#include "koszulcat/linalg.hpp"
#include "koszulcat/syzygy.hpp"

namespace {

using namespace koszulcat;

const CategoryPtr& trivial() {
  static const CategoryPtr c = CategoryPresentation::trivial(Field::rationals());
  return c;
}

MonoidPtr rationals() {
  static const MonoidPtr q = std::make_shared<const MonoidData>(
      algebra_monoid(trivial(), "Q", {"1"}, Matrix::identity(Field::rationals(), 1),
                     Matrix::unit_vector(Field::rationals(), 1, 0)));
  return q;
}

Matrix random_sparse(const Field& f, std::size_t n, double density, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  std::uniform_int_distribution<long> value(-9, 9);
  MatrixBuilder b(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (keep(rng) < density) b.add(i, j, value(rng));
    }
  }
  return b.build();
}

void BM_RankRational(benchmark::State& state) {
  const Matrix m = random_sparse(Field::rationals(), static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(50)->Arg(100)->Arg(200);

void BM_RankPrime(benchmark::State& state) {
  const Matrix m = random_sparse(Field::prime(32003), static_cast<std::size_t>(state.range(0)), 0.05, 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankPrime)->Arg(50)->Arg(100)->Arg(200);

void BM_KoszulHomology(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const PolynomialMonoid g = polynomial_monoid(rationals(), n, 6);
  std::vector<ElementRef> alpha;
  for (std::size_t i = 0; i < n; ++i) alpha.push_back(variable_element(g, i));
  const Exec exec{static_cast<unsigned>(state.range(1))};
  for (auto _ : state) {
    const KoszulComplex k = build_koszul(g.monoid, alpha, kInheritCap, {}, exec);
    benchmark::DoNotOptimize(homology(k.complex, exec));
  }
}
BENCHMARK(BM_KoszulHomology)->Args({2, 1})->Args({3, 1})->Args({3, 4})->Unit(benchmark::kMillisecond);

void BM_Hochschild(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto cert = certify_tensor_idempotent(rationals());
  for (auto _ : state) {
    const EnvelopingData e = build_enveloping(rationals(), n, 5, cert);
    benchmark::DoNotOptimize(hochschild_cohomology(e, regular_module(e.an.monoid), 1));
  }
}
BENCHMARK(BM_Hochschild)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SyzygyResidueField(benchmark::State& state) {
  const auto cert = certify_tensor_idempotent(rationals());
  const EnvelopingData e = build_enveloping(rationals(), 2, 4, cert);
  std::vector<ElementRef> vars{variable_element(e.an, 0), variable_element(e.an, 1)};
  const ModuleData m =
      forget_right(quotient_module(regular_module(e.an.monoid), generated_submodule(*e.an.monoid, vars)).module);
  for (auto _ : state) benchmark::DoNotOptimize(build_syzygy_resolution(e, m));
}
BENCHMARK(BM_SyzygyResidueField)->Unit(benchmark::kMillisecond);

void BM_TensorOverPolynomials(benchmark::State& state) {
  const PolynomialMonoid g = polynomial_monoid(rationals(), 1, static_cast<int>(state.range(0)));
  const ModuleData reg = regular_module(g.monoid);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_over_monoid(forget_left(reg), forget_right(reg)));
}
BENCHMARK(BM_TensorOverPolynomials)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
