#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "hurwitz/classes.hpp"
#include "hurwitz/group.hpp"
#include "hurwitz/oracle.hpp"
#include "hurwitz/realization.hpp"
#include "hurwitz/squares.hpp"

using namespace hurwitz;

namespace {

Permutation random_perm(int d, std::mt19937_64& rng) {
  std::vector<int> images(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

void BM_Compose(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const int d = static_cast<int>(state.range(0));
  const Permutation p = random_perm(d, rng), q = random_perm(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(compose(p, q));
}
BENCHMARK(BM_Compose)->Arg(8)->Arg(64)->Arg(1024);

void BM_IsPrimitive(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const int d = static_cast<int>(state.range(0));
  const GeneratedGroup g({random_perm(d, rng), random_perm(d, rng)});
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(g));
}
BENCHMARK(BM_IsPrimitive)->Arg(14)->Arg(64)->Arg(256);

void BM_ImprimitiveCanonicalPair(benchmark::State& state) {
  const auto [a, b] = canonical_involution_pair(static_cast<int>(state.range(0)));
  const GeneratedGroup g({a, b});
  for (auto _ : state) benchmark::DoNotOptimize(is_primitive(g));
}
BENCHMARK(BM_ImprimitiveCanonicalPair)->Arg(14)->Arg(256);

void BM_StabilizerIsMaximal(benchmark::State& state) {
  const GeneratedGroup s5({Permutation::parse(5, "(1 2)"), Permutation::parse(5, "(1 2 3 4 5)")});
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_is_maximal(s5, 1));
}
BENCHMARK(BM_StabilizerIsMaximal);

void BM_Sqrt(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const int d = static_cast<int>(state.range(0));
  const Permutation b = random_perm(d, rng);
  const Permutation p = compose(b, b);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz::sqrt(p));
}
BENCHMARK(BM_Sqrt)->Arg(14)->Arg(1024);

void BM_AssemblePairNearFullCycle(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const Partition a = Partition::all_twos(d);
  // [d/2 + 1, 1, ...]: the defects add up to d, just enough for transitivity.
  std::vector<int> parts{d / 2 + 1};
  parts.resize(static_cast<std::size_t>(d / 2), 1);
  const Partition b(parts);
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_pair(a, b, PairGoal::transitive_near_full_cycle(d)));
  }
}
BENCHMARK(BM_AssemblePairNearFullCycle)->Arg(6)->Arg(10)->Arg(14);

void BM_RealizeIndecomposable(benchmark::State& state) {
  const char* inputs[] = {
      "d=6; [3,2,1],[2,2,2]",
      "d=12; [2,2,2,2,2,2],[2,2,2,2,2,2],[2,2,2,2,2,2]",
      "d=14; [2,2,2,2,2,2,2],[2,2,2,2,2,2,2],[2,2,2,2,2,2,2],[4,1,1,1,1,1,1,1,1,1,1]",
      "d=14; [5,4,3,2],[3,3,3,3,2],[2,2,2,2,2,2,2]",
  };
  const BranchData data = parse_branch_data(inputs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(realize_indecomposable(data));
}
BENCHMARK(BM_RealizeIndecomposable)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

void BM_OracleExistsPrimitive(benchmark::State& state) {
  const BranchData data = parse_branch_data("d=6; [2,2,2],[2,2,2],[2,2,1,1]");
  SearchBounds bounds;
  bounds.workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(exists_primitive_realization(data, bounds));
}
BENCHMARK(BM_OracleExistsPrimitive)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_InvolutionSurvey(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(involution_pair_survey(8));
}
BENCHMARK(BM_InvolutionSurvey)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
