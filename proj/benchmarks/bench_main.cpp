#include <benchmark/benchmark.h>

#include "torelli/curvegraph.hpp"
#include "torelli/instance.hpp"
#include "torelli/theorem.hpp"
#include "torelli/twist.hpp"
#include "torelli/winding.hpp"

using namespace torelli;

namespace {

void BM_TotalTurning(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  FatGraph fg = FatGraph::canonical(g);
  PlanarImmersion im = PlanarImmersion::standard(fg);
  FreeWord w = boundary_word(g);
  for (auto _ : state) benchmark::DoNotOptimize(total_turning(w, fg, im));
}
BENCHMARK(BM_TotalTurning)->Arg(3)->Arg(5);

void BM_Admissibility(benchmark::State& state) {
  FatGraph fg = FatGraph::canonical(3);
  FreeWord w = parse_word("x1 x3 x4 X3 X4 x5 x6 X5 X6", 3);
  for (auto _ : state) benchmark::DoNotOptimize(admissibility(w, fg).ok);
}
BENCHMARK(BM_Admissibility);

void BM_DehnTwist(benchmark::State& state) {
  FatGraph fg = FatGraph::canonical(3);
  FreeWord c = parse_word("x1 x3 x4 X3 X4", 3);
  for (auto _ : state) benchmark::DoNotOptimize(dehn_twist(c, fg).img.size());
}
BENCHMARK(BM_DehnTwist);

void BM_CatalogBuild(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  SurfaceSpec spec{g, true};
  FatGraph fg = FatGraph::canonical(g);
  for (auto _ : state) benchmark::DoNotOptimize(build_catalog(spec, fg).entries.size());
}
BENCHMARK(BM_CatalogBuild)->Arg(3)->Arg(5);

void BM_ApplyCatalogWord(benchmark::State& state) {
  FatGraph fg = FatGraph::canonical(3);
  Catalog cat = build_catalog(SurfaceSpec{3, true}, fg);
  MappingClass f = realize(cat, {{"bp_x1_h2", 1}, {"bp_x2_h2", -1}, {"sep_h1", 1}});
  FreeWord w = boundary_word(3);
  for (auto _ : state) benchmark::DoNotOptimize(apply_word(f, w).size());
}
BENCHMARK(BM_ApplyCatalogWord);

void BM_FindEdges(benchmark::State& state) {
  FatGraph fg = FatGraph::canonical(3);
  CurveVertex a = *admit_vertex(parse_word("x1", 3), fg);
  CurveVertex b = *admit_vertex(parse_word("x1 x3 x4 X3 X4", 3), fg);
  bool capped = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_edges(a, b, fg, capped).size());
}
BENCHMARK(BM_FindEdges)->Arg(0)->Arg(1);

void BM_Refine(benchmark::State& state) {
  CellComplex cx = canonical_surface_complex(SurfaceSpec{4, false});
  for (auto _ : state) benchmark::DoNotOptimize(refine(cx).cx.nverts);
}
BENCHMARK(BM_Refine);

void BM_TheoremSweep(benchmark::State& state) {
  SweepOptions opt;
  opt.max_len = static_cast<int>(state.range(0));
  opt.threads = 1;
  SurfaceSpec spec{3, true};
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_sweep(spec, opt).cases);
}
BENCHMARK(BM_TheoremSweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
