#include "affine_hall/flags.hpp"
#include "affine_hall/hall.hpp"
#include "affine_hall/monomials.hpp"
#include "affine_hall/uqminus.hpp"

#include <benchmark/benchmark.h>

using namespace ah;

namespace {

QuiverPtr kronecker() {
  static const QuiverPtr K = intern_quiver(Quiver::load(std::string(AH_DATA_DIR) + "/kronecker.json"));
  return K;
}

Word word(std::initializer_list<std::pair<int, int>> entries) {
  Word s;
  for (auto [m, v] : entries) s.entries.push_back({m, v});
  return s;
}

// Catalog of E_V orbits from scratch, nu = (n, n).
void BM_Catalog(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0)), q = static_cast<int>(st.range(1));
  for (auto _ : st) {
    Catalog cat(kronecker(), q, {n, n});
    benchmark::DoNotOptimize(cat.orbits({n, n}).size());
  }
}
BENCHMARK(BM_Catalog)->Args({2, 2})->Args({3, 2})->Args({3, 5});

void BM_StableFlagCount(benchmark::State& st) {
  const int q = static_cast<int>(st.range(0));
  Catalog cat(kronecker(), q, {3, 3});
  const Word s = word({{1, 1}, {1, 0}, {1, 1}, {1, 0}, {1, 1}, {1, 0}});
  for (auto _ : st) benchmark::DoNotOptimize(raw_counts(s, cat));
}
BENCHMARK(BM_StableFlagCount)->Arg(2)->Arg(3);

// Fresh HallAlgebra each iteration, so the Hall numbers are recounted.
void BM_HallProduct(benchmark::State& st) {
  const int q = static_cast<int>(st.range(0));
  auto cat = std::make_shared<Catalog>(kronecker(), q, DimVec{2, 2});
  for (auto _ : st) {
    HallAlgebra H(cat);
    benchmark::DoNotOptimize(H.product(H.evaluate_word(word({{1, 1}, {1, 0}})), H.evaluate_word(word({{1, 1}, {1, 0}}))));
  }
}
BENCHMARK(BM_HallProduct)->Arg(2)->Arg(3);

void BM_UMinusWeightSpace(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) {
    UMinus U(cartan_of(*kronecker()));
    benchmark::DoNotOptimize(U.dim({n, n}));
  }
}
BENCHMARK(BM_UMinusWeightSpace)->Arg(2)->Arg(3)->Arg(4);

void BM_Triangularity(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0)), q = static_cast<int>(st.range(1));
  const DimVec nu{m, m};
  auto cat = std::make_shared<Catalog>(kronecker(), q, nu);
  const ClosureOracle O(kronecker(), nu);
  for (auto _ : st) {
    HallAlgebra H(cat);
    benchmark::DoNotOptimize(verify_triangularity(H, O, nu).pass);
  }
}
BENCHMARK(BM_Triangularity)->Args({2, 2})->Args({2, 3})->Args({3, 2});

}  // namespace

// The distro's benchmark_main archive is LTO bytecode from another compiler release.
BENCHMARK_MAIN();
