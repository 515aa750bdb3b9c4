#include <benchmark/benchmark.h>

#include <vector>

#include "hermicl/clifford.hpp"
#include "hermicl/harness.hpp"

using namespace hermicl;

namespace {

std::vector<Multivector> random_operands(int dim, std::size_t count, std::uint64_t seed) {
  FieldRng rng(seed);
  std::vector<Multivector> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_multivector(dim, rng));
  return out;
}

}  // namespace

// Dense geometric product through the precomputed sign table; the argument is
// the algebra dimension m of R_{0,m}.
static void BM_GeometricProduct(benchmark::State& state) {
  const int dim = int(state.range(0));
  const SignTable& table = sign_table(dim);
  const std::vector<Multivector> lhs = random_operands(dim, 64, 1);
  const std::vector<Multivector> rhs = random_operands(dim, 64, 2);
  Multivector dst(dim);
  std::size_t k = 0;
  for (auto _ : state) {
    geometric_product_into(dst, lhs[k & 63], rhs[k & 63], table);
    benchmark::DoNotOptimize(dst);
    ++k;
  }
}
BENCHMARK(BM_GeometricProduct)->Arg(2)->Arg(4)->Arg(6);

// Circulant pair product: two channel products per call at the same dimension.
static void BM_CirculantProduct(benchmark::State& state) {
  const int dim = int(state.range(0));
  FieldRng rng(3);
  const CirculantPair x(random_multivector(dim, rng), random_multivector(dim, rng));
  const CirculantPair y(random_multivector(dim, rng), random_multivector(dim, rng));
  for (auto _ : state) {
    CirculantPair out = circulant_product(x, y);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_CirculantProduct)->Arg(2)->Arg(4);

// Blade sign resolution without the table, as used when tables are built.
static void BM_BladeProductSign(benchmark::State& state) {
  const int dim = int(state.range(0));
  const BladeIndex mask = (BladeIndex(1) << dim) - 1;
  BladeIndex a = 0;
  for (auto _ : state) {
    const BladeProduct p = blade_product_sign(a & mask, (a * 7 + 3) & mask, dim);
    benchmark::DoNotOptimize(p);
    ++a;
  }
}
BENCHMARK(BM_BladeProductSign)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
