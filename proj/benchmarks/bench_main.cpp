#include <benchmark/benchmark.h>

#include <array>
#include <cstddef>
#include <vector>

#include "arcchroma/constructions.hpp"
#include "arcchroma/cyclic_model.hpp"
#include "arcchroma/field.hpp"
#include "arcchroma/geometry.hpp"
#include "arcchroma/solver.hpp"
#include "arcchroma/verify.hpp"

using arcchroma::Geometry;
using arcchroma::PointId;

namespace {

void BM_FieldMul(benchmark::State& state) {
  const auto& f = arcchroma::Field::get(2, static_cast<int>(state.range(0)));
  const int q = f.order();
  int x = 1;
  for (auto _ : state) {
    x = f.mul(x, 3) + 1;
    if (x >= q) x -= q;
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldMul)->Arg(3)->Arg(6)->Arg(9);

void BM_Collinear(benchmark::State& state) {
  const Geometry g = Geometry::projective_plane(static_cast<int>(state.range(0)));
  const int n = g.point_count();
  std::vector<std::array<PointId, 3>> triples;
  for (PointId a = 0; a < 12 && a < n; ++a)
    for (PointId b = a + 1; b < n; ++b)
      for (PointId c = b + 1; c < n; ++c) triples.push_back({a, b, c});
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& t = triples[i];
    benchmark::DoNotOptimize(g.collinear(t[0], t[1], t[2]));
    if (++i == triples.size()) i = 0;
  }
}
BENCHMARK(BM_Collinear)->Arg(4)->Arg(9);

void BM_IsArcTripleScan(benchmark::State& state) {
  const Geometry g = Geometry::grid(8);
  const auto arcs = arcchroma::constructions::grid_embedding_coloring(8).classes();
  for (auto _ : state)
    for (const auto& arc : arcs)
      benchmark::DoNotOptimize(arcchroma::verify::is_arc(g, arc));
}
BENCHMARK(BM_IsArcTripleScan);

void BM_IsArcLineIndex(benchmark::State& state) {
  const Geometry g = Geometry::grid(8);
  const auto arcs = arcchroma::constructions::grid_embedding_coloring(8).classes();
  for (auto _ : state)
    for (const auto& arc : arcs)
      benchmark::DoNotOptimize(arcchroma::verify::is_arc_line_index(g, arc));
}
BENCHMARK(BM_IsArcLineIndex);

void BM_SolveAffine4(benchmark::State& state) {
  const Geometry g = Geometry::affine_plane(4);
  for (auto _ : state) {
    auto out = arcchroma::solver::solve_coloring(g, 3);
    benchmark::DoNotOptimize(out.stats.nodes);
  }
}
BENCHMARK(BM_SolveAffine4)->Unit(benchmark::kMillisecond);

void BM_EnumerateGrid6(benchmark::State& state) {
  const Geometry g = Geometry::grid(6);
  for (auto _ : state) {
    auto arcs = arcchroma::solver::enumerate_max_arcs(g, 12);
    benchmark::DoNotOptimize(arcs.size());
  }
}
BENCHMARK(BM_EnumerateGrid6)->Unit(benchmark::kMillisecond);

void BM_CyclicBuild(benchmark::State& state) {
  for (auto _ : state) {
    auto m = arcchroma::CyclicModel::build(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(m.modulus());
  }
}
BENCHMARK(BM_CyclicBuild)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
