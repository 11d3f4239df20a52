#include <benchmark/benchmark.h>

#include <string>

#include "ptw/bridges.hpp"
#include "ptw/io.hpp"
#include "ptw/measurement.hpp"
#include "ptw/moves.hpp"

using namespace ptw;

namespace {

const char* const kFixtures[] = {"square4", "schubert36", "d4", "tri3", "tri6"};

PlabicGraph fixture(int index) {
  return io::load_graph(std::string(PTW_FIXTURE_DIR) + "/" + kFixtures[index] + ".json");
}

void fixture_args(benchmark::internal::Benchmark* b) {
  for (int i = 0; i < 5; ++i) b->Arg(i);
}

void BM_Embedding(benchmark::State& state) {
  const PlabicGraph g = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Embedding(g).labels(LabelMode::Source));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Embedding)->Apply(fixture_args);

void BM_GraphPositroid(benchmark::State& state) {
  const PlabicGraph g = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(graph_positroid(g));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_GraphPositroid)->Apply(fixture_args);

void BM_CountMatchings(benchmark::State& state) {
  const PlabicGraph g = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_matchings(g));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_CountMatchings)->Arg(0)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Measure(benchmark::State& state) {
  const PlabicGraph g = fixture(static_cast<int>(state.range(0)));
  WeightRng rng(1);
  const EdgeWeighting z = random_weighting(g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(measure(g, z));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Measure)->Arg(0)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Twist(benchmark::State& state) {
  const PlabicGraph g = fixture(static_cast<int>(state.range(0)));
  WeightRng rng(2);
  const Matrix a = matrix_from_pluecker(measure(g, random_weighting(g, rng)));
  for (auto _ : state) benchmark::DoNotOptimize(twist(a, Side::Right));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_Twist)->Arg(0)->Arg(1)->Arg(2);

void BM_VerifyDiagram(benchmark::State& state) {
  const Embedding emb(fixture(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(verify_diagram(emb, 1, 1));
  state.SetLabel(kFixtures[state.range(0)]);
}
BENCHMARK(BM_VerifyDiagram)->Apply(fixture_args)->Unit(benchmark::kMillisecond);

void BM_SynthesizeAll(benchmark::State& state) {
  const auto perms = all_bounded_perms(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    for (const AffinePerm& pi : perms) benchmark::DoNotOptimize(synthesize(pi));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(perms.size()));
}
BENCHMARK(BM_SynthesizeAll)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_UrbanRenewal(benchmark::State& state) {
  const PlabicGraph g = fixture(0);
  WeightRng rng(3);
  const EdgeWeighting z = random_weighting(g, rng);
  const Move m{MoveKind::UrbanRenewal, "F1", {}};
  for (auto _ : state) benchmark::DoNotOptimize(apply_move(g, z, m));
}
BENCHMARK(BM_UrbanRenewal);

}  // namespace

BENCHMARK_MAIN();
