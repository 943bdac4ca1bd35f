#include <benchmark/benchmark.h>

#include <random>

#include "wqo/finite_poset.hpp"
#include "wqo/games.hpp"
#include "wqo/invariants.hpp"
#include "wqo/ordinal_text.hpp"
#include "wqo/realize.hpp"

namespace {

using namespace wqo;

std::vector<Ordinal> sample_ordinals(int count, int max_exp) {
  std::mt19937_64 rng(7);
  std::vector<Ordinal> out;
  for (int i = 0; i < count; ++i) {
    Ordinal::Terms ts;
    for (int e = max_exp; e >= 0; --e)
      if (rng() % 3 == 0)
        ts.push_back(Ordinal::Term{Ordinal(std::uint64_t(e)), BigNat(1 + rng() % 5)});
    out.push_back(Ordinal::from_terms(std::move(ts)));
  }
  return out;
}

void BM_NatSum(benchmark::State& state) {
  const auto xs = sample_ordinals(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nat_sum(xs[i % 64], xs[(i + 17) % 64]));
    ++i;
  }
}
BENCHMARK(BM_NatSum)->Arg(3)->Arg(8);

void BM_NatProd(benchmark::State& state) {
  const auto xs = sample_ordinals(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nat_prod(xs[i % 64], xs[(i + 17) % 64]));
    ++i;
  }
}
BENCHMARK(BM_NatProd)->Arg(3)->Arg(8);

void BM_Wprod2(benchmark::State& state) {
  const auto xs = sample_ordinals(64, static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(wprod2(xs[i % 64], xs[(i + 29) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Wprod2)->Arg(3)->Arg(8);

void BM_Invariants(benchmark::State& state) {
  const PosetExpr e = parse_expr("M(A3) U (w^2 x w x 4) ++ Seq(w)");
  for (auto _ : state) benchmark::DoNotOptimize(invariants(e));
}
BENCHMARK(BM_Invariants);

void BM_WidthRank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FinitePoset grid =
      realize(PosetExpr::cart_prod({PosetExpr::ord(Ordinal(std::uint64_t(n))),
                                    PosetExpr::ord(Ordinal(std::uint64_t(4)))}))
          .poset;
  for (auto _ : state) benchmark::DoNotOptimize(width_rank(grid));
}
BENCHMARK(BM_WidthRank)->Arg(3)->Arg(4);

void BM_GameSolve(benchmark::State& state) {
  const FinitePoset p =
      realize(PosetExpr::cart_prod({PosetExpr::ord(Ordinal(std::uint64_t(2))),
                                    PosetExpr::ord(Ordinal(std::uint64_t(3)))}))
          .poset;
  for (auto _ : state)
    benchmark::DoNotOptimize(winner(p, static_cast<std::uint64_t>(p.size()), GameKind::width));
}
BENCHMARK(BM_GameSolve);

}  // namespace

BENCHMARK_MAIN();
