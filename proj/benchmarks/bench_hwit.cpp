// Microbenchmarks for the hot paths: Hilbert symbols (closed form vs. the
// brute-force oracle), congruence diagonalization, Clifford multiplication,
// and the full twist/delta2 pipeline on the flagship example.

#include <hwit/grid.hpp>

#include <benchmark/benchmark.h>

namespace {

using namespace hwit;

void BM_HilbertSymbol(benchmark::State& state) {
  const Place p3 = Place::prime(Int(3));
  for (auto _ : state) {
    int acc = 0;
    for (long a = 1; a <= 30; ++a)
      for (long b = 1; b <= 30; ++b)
        acc += hilbert_symbol(Rat(a), Rat(-b), p3);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_HilbertSymbol);

void BM_HilbertOracle(benchmark::State& state) {
  const Place p3 = Place::prime(Int(3));
  for (auto _ : state) {
    int acc = 0;
    for (long a = 1; a <= 30; ++a)
      for (long b = 1; b <= 30; ++b)
        acc += hilbert_oracle(Int(a), Int(-b), p3);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_HilbertOracle);

void BM_Diagonalize(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Mat<Rat> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = Rat(static_cast<long>(1 + ((i * 7 + j * 3) % 11)),
                    static_cast<long>(1 + ((i + j) % 4)));
      g(j, i) = g(i, j);
    }
  const QuadraticForm q(g);
  for (auto _ : state) {
    auto d = diagonalize(q);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_Diagonalize)->Arg(3)->Arg(5)->Arg(8);

void BM_CliffordMul(benchmark::State& state) {
  const DiagonalForm q({Rat(2), Rat(6), Rat(-1), Rat(3)});
  const CliffAlg cl = CliffordAlgebra::create(q, MultiQuadField::rationals());
  const CliffordElement x =
      CliffordElement::basis(cl, 0b0001) + CliffordElement::basis(cl, 0b0110);
  const CliffordElement y =
      CliffordElement::basis(cl, 0b1000) +
      CliffordElement::scalar(cl, FieldElement(Rat(1, 2)));
  for (auto _ : state) {
    auto z = x * y;
    benchmark::DoNotOptimize(z);
  }
}
BENCHMARK(BM_CliffordMul);

void BM_TwistForm(benchmark::State& state) {
  const DiagonalForm q({Rat(1), Rat(1)});
  Mat<Rat> swap(2, 2);
  swap(0, 1) = Rat(1);
  swap(1, 0) = Rat(1);
  const OrthCocycle c = quadratic_cocycle(q, Int(3), swap);
  for (auto _ : state) {
    auto t = twist_form(q, c);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TwistForm);

void BM_Delta2Flagship(benchmark::State& state) {
  const DiagonalForm q({Rat(1), Rat(1)});
  Mat<Rat> swap(2, 2);
  swap(0, 1) = Rat(1);
  swap(1, 0) = Rat(1);
  const OrthCocycle c = quadratic_cocycle(q, Int(3), swap);
  for (auto _ : state) {
    auto d2 = delta2(c);
    benchmark::DoNotOptimize(d2);
  }
}
BENCHMARK(BM_Delta2Flagship);

}  // namespace

BENCHMARK_MAIN();
