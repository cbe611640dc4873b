#include <benchmark/benchmark.h>

#include "ctlenum/enumerate.hpp"
#include "ctlenum/modelcheck.hpp"
#include "ctlenum/reductions.hpp"

using namespace ctlenum;

namespace {

// v0 -> ... -> v{k-1}, self-loop everywhere, x on the last world.
KripkeModel chain_model(std::size_t k) {
  ModelData d;
  for (std::size_t i = 0; i < k; ++i) d.worlds.push_back({"v" + std::to_string(i), {}});
  d.worlds.back().labels.insert("x");
  for (std::size_t i = 0; i < k; ++i) {
    d.edges.emplace_back(d.worlds[i].id, d.worlds[i].id);
    if (i + 1 < k) d.edges.emplace_back(d.worlds[i].id, d.worlds[i + 1].id);
  }
  d.root = "v0";
  return KripkeModel(std::move(d));
}

void BM_EnumerateChain(benchmark::State& state, OracleKind kind) {
  const KripkeModel m = chain_model(static_cast<std::size_t>(state.range(0)));
  const Formula f = parse_formula("EF x & EG EX true");
  std::size_t solutions = 0;
  for (auto _ : state) {
    EnumerationOptions opts{kind, true, std::nullopt};
    solutions = enumerate_submodels(m, f, opts, [](const Submodel&) { return true; })
                    .solutions;
  }
  state.counters["solutions"] = static_cast<double>(solutions);
  state.counters["per_solution"] = benchmark::Counter(
      static_cast<double>(solutions), benchmark::Counter::kIsIterationInvariantRate |
                                          benchmark::Counter::kInvert);
}
BENCHMARK_CAPTURE(BM_EnumerateChain, monotone, OracleKind::Monotone)->DenseRange(4, 10, 2);
BENCHMARK_CAPTURE(BM_EnumerateChain, exhaustive, OracleKind::Exhaustive)->DenseRange(4, 8, 2);

void BM_CheckMicrowave(benchmark::State& state) {
  const KripkeModel m = read_model_file(CTLENUM_DATA_DIR "/microwave.json");
  const Formula f = parse_formula("AG (Error -> A[!Heat U !Start])");
  for (auto _ : state) benchmark::DoNotOptimize(check(m, f));
}
BENCHMARK(BM_CheckMicrowave);

void BM_CheckAuReduction(benchmark::State& state) {
  HampathInstance h;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (std::size_t i = 0; i < n; ++i) h.vertices.push_back("v" + std::to_string(i));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) h.edges.emplace_back(h.vertices[u], h.vertices[v]);
    }
  }
  h.source = h.vertices.front();
  h.target = h.vertices.back();
  const auto inst = hampath_to_au(h);
  for (auto _ : state) benchmark::DoNotOptimize(check(inst.model, inst.formula));
  state.counters["worlds"] = static_cast<double>(inst.model.num_worlds());
}
BENCHMARK(BM_CheckAuReduction)->DenseRange(4, 12, 4);

}  // namespace
BENCHMARK_MAIN();
