#include <benchmark/benchmark.h>

#include <random>

#include "ftd/atlas.h"
#include "ftd/autsearch.h"
#include "ftd/design.h"
#include "ftd/suzuki.h"

namespace {

void BM_FieldMul(benchmark::State& state) {
  auto f = ftd::make_field(2, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937 rng(1);
  std::vector<ftd::Elem> xs(1024);
  for (auto& x : xs) x = rng() % f->order();
  ftd::Elem acc = 1;
  for (auto _ : state) {
    for (ftd::Elem x : xs) acc = f->mul(acc, x) ^ 1;
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * xs.size());
}
BENCHMARK(BM_FieldMul)->Arg(6)->Arg(12)->Arg(20);

void BM_PointOrbitSz8(benchmark::State& state) {
  const auto g = ftd::atlas("Sz", {.q = 8});
  const ftd::PointAction act(g);
  for (auto _ : state) benchmark::DoNotOptimize(ftd::point_orbit(act, 1).size());
}
BENCHMARK(BM_PointOrbitSz8)->Unit(benchmark::kMillisecond);

void BM_BuildDesignSz8(benchmark::State& state) {
  const auto g = ftd::affine_closure(ftd::atlas("Sz", {.q = 8}));
  const auto base = ftd::family_block(8, {1, 0, 1, 0}).elements();
  for (auto _ : state) benchmark::DoNotOptimize(ftd::build_design(base, g).r());
}
BENCHMARK(BM_BuildDesignSz8)->Unit(benchmark::kMillisecond);

void BM_LambdaOrbitwise(benchmark::State& state) {
  const auto g0 = ftd::atlas("Sp4", {.q = 3});
  const auto d = ftd::build_design({0, 1, 2, 3, 4, 5, 6, 7, 8}, ftd::affine_closure(g0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ftd::verify_2design(d, ftd::VerifyMode::kOrbitwise, &g0).lambda);
  }
}
BENCHMARK(BM_LambdaOrbitwise)->Unit(benchmark::kMillisecond);

void BM_LambdaBruteforce(benchmark::State& state) {
  const auto g0 = ftd::atlas("Sp4", {.q = 3});
  const auto d = ftd::build_design({0, 1, 2, 3, 4, 5, 6, 7, 8}, ftd::affine_closure(g0));
  for (auto _ : state) benchmark::DoNotOptimize(ftd::verify_2design(d, ftd::VerifyMode::kBruteforce).lambda);
}
BENCHMARK(BM_LambdaBruteforce)->Unit(benchmark::kMillisecond);

void BM_AutSearchEx3(benchmark::State& state) {
  const auto h0 = ftd::atlas("Ex3-SL2(5)");
  const ftd::PointSpace sp(3, 4);
  const std::vector<ftd::Point> gens{sp.unit(0), sp.unit(3)};
  const auto d = ftd::build_design(ftd::Subspace::span_points(sp, gens).elements(), ftd::affine_closure(h0));
  for (auto _ : state) benchmark::DoNotOptimize(ftd::linear_blockset_stabilizer(d.blocks0, 3, 4).order);
}
BENCHMARK(BM_AutSearchEx3)->Unit(benchmark::kMillisecond);

void BM_BaseBlockSearchD18(benchmark::State& state) {
  const auto g0 = ftd::atlas("GammaL1-subgroup", {.p = 2, .degree = 6, .c = 7, .e = 0, .sexp = 3});
  for (auto _ : state) benchmark::DoNotOptimize(ftd::base_block_search(g0, 8, 2).size());
}
BENCHMARK(BM_BaseBlockSearchD18)->Unit(benchmark::kMillisecond);

void BM_Family4Search(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ftd::family4_search(8).size());
}
BENCHMARK(BM_Family4Search)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
