#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hermicl/harness.hpp"
#include "hermicl/operators.hpp"
#include "hermicl/surface.hpp"

using namespace hermicl;

// Matrix-free transform on the circle; the argument is the node count.
static void BM_HilbertTransformCircle(benchmark::State& state) {
  const SurfaceMesh mesh = mesh_circle(int(state.range(0)));
  const BoundaryField L = random_smooth_field(mesh, 3, 11);
  for (auto _ : state) {
    BoundaryField out = hilbert_transform(mesh, L);
    benchmark::DoNotOptimize(out);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HilbertTransformCircle)->Arg(128)->Arg(256)->Arg(512)->Complexity();

// Matrix-free transform on the unit-sphere product grid; the argument is the
// per-angle resolution r of the r^3 grid.
static void BM_HilbertTransformSphereGrid(benchmark::State& state) {
  const int r = int(state.range(0));
  const SurfaceMesh mesh = mesh_sphere_S3(r, r, r);
  const BoundaryField L = random_smooth_field(mesh, 2, 13);
  for (auto _ : state) {
    BoundaryField out = hilbert_transform(mesh, L);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_HilbertTransformSphereGrid)->Arg(6)->Arg(8);

// Full projection solve (GMRES resolvent plus the averaged projection).
static void BM_SzegoProjection(benchmark::State& state) {
  const SurfaceMesh mesh = mesh_circle(int(state.range(0)));
  const BoundaryField L = random_smooth_field(mesh, 3, 17);
  for (auto _ : state) {
    BoundaryField out = szego_projection(mesh, L);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_SzegoProjection)->Arg(64)->Arg(128);

// Interior evaluation of the boundary integral at a batch of points.
static void BM_CauchyTransformInterior(benchmark::State& state) {
  const SurfaceMesh mesh = mesh_circle(256);
  const BoundaryField L = random_smooth_field(mesh, 3, 19);
  std::vector<VectorR2n> points;
  for (int k = 0; k < int(state.range(0)); ++k) {
    const double t = 0.1 + 0.05 * double(k);
    points.push_back(VectorR2n{0.5 * std::cos(t), 0.5 * std::sin(t)});
  }
  for (auto _ : state) {
    std::vector<CirculantPair> out = cauchy_transform(mesh, L, points);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_CauchyTransformInterior)->Arg(1)->Arg(10);
