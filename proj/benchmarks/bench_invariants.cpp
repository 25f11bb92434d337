#include <benchmark/benchmark.h>

#include <random>

#include "recip/bezoutian.hpp"
#include "recip/mfd.hpp"
#include "recip/realization.hpp"

using namespace recip;

namespace {

// deterministic inputs: a fixed signature-symmetric realization per size
LeftMFD make_mfd(int states) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> c(-3, 3), sign(0, 1);
  std::vector<Rat> w(static_cast<size_t>(states));
  for (auto& x : w) x = sign(rng) ? Rat(1) : Rat(-1);
  RatMat sigma = RatMat::diagonal(w);
  RatMat s(states, states);
  for (int i = 0; i < states; ++i)
    for (int j = i; j < states; ++j) {
      Rat v(c(rng));
      s.at(i, j) = v;
      s.at(j, i) = v;
    }
  RatMat a = s * sigma;
  RatMat cm(1, states);
  for (int j = 0; j < states; ++j) cm.at(0, j) = Rat(c(rng));
  return transfer_function(StateSpace(a, sigma * cm.transpose(), cm, RatMat(1, 1)));
}

void bench_bezoutian_inertia(benchmark::State& state) {
  LeftMFD h = make_mfd(int(state.range(0)));
  for (auto _ : state) {
    BezoutianMatrix bz = bezoutian(h.P, h.Q);
    benchmark::DoNotOptimize(inertia(bz.data));
  }
}
BENCHMARK(bench_bezoutian_inertia)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void bench_coprime_decompose(benchmark::State& state) {
  LeftMFD h = make_mfd(int(state.range(0)));
  // introduce a common left factor so there is something to extract
  Poly f = Poly::xi() + Poly(1);
  PolyMatrix p = h.P.scaled(f), q = h.Q.scaled(f);
  for (auto _ : state) benchmark::DoNotOptimize(coprime_decompose(p, q));
}
BENCHMARK(bench_coprime_decompose)->Arg(2)->Arg(4)->Arg(6);

void bench_hankel_rank(benchmark::State& state) {
  LeftMFD h = make_mfd(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mcmillan_degree_hankel(h));
}
BENCHMARK(bench_hankel_rank)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
