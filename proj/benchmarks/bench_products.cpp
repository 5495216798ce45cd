#include <benchmark/benchmark.h>

#include "qkgr/engine.hpp"
#include "qkgr/gr3_path.hpp"
#include "qkgr/gr3n.hpp"

using namespace qkgr;

static void BM_BuildTable(benchmark::State& state) {
  const auto ctx = GrContext::make(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  for (auto _ : state) {
    const QKEngine engine(ctx);
    engine.build_table();
    benchmark::DoNotOptimize(engine.observed_max_degree());
  }
  state.counters["classes"] = static_cast<double>(Basis(ctx).size());
}
BENCHMARK(BM_BuildTable)->Args({2, 8})->Args({3, 8})->Args({4, 8})->Args({3, 10})->Unit(benchmark::kMillisecond);

static void BM_SingleColumn(benchmark::State& state) {
  const auto ctx = GrContext::make(4, 9);
  const Partition mu({4, 3, 2, 1});
  for (auto _ : state) {
    const QKEngine engine(ctx);
    benchmark::DoNotOptimize(engine.column(mu).size());
  }
}
BENCHMARK(BM_SingleColumn)->Unit(benchmark::kMillisecond);

static void BM_PieriApply(benchmark::State& state) {
  const PieriFamily family(GrContext::make(4, 10));
  const Basis& basis = family.basis();
  QVector v(basis.size(), family.context().D);
  for (std::size_t i = 0; i < basis.size(); ++i) v.at(i, 0) = static_cast<Coeff>(i % 7) - 3;
  QVector out(basis.size(), family.context().D);
  for (auto _ : state) {
    family.op(3).apply(v, out);
    benchmark::DoNotOptimize(out.row(0));
  }
  state.counters["nonzeros"] = static_cast<double>(family.op(3).nonzeros());
}
BENCHMARK(BM_PieriApply);

static void BM_ThreeRowProduct(benchmark::State& state) {
  const auto ctx = GrContext::make(3, static_cast<int>(state.range(0)));
  const Basis basis(ctx);
  for (auto _ : state) {
    const Gr3Path path(std::make_shared<const PieriFamily>(ctx));
    Coeff sum = 0;
    for (const Partition& a : basis.partitions()) sum += path.product(a, basis.at(basis.size() / 2)).term_count();
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_ThreeRowProduct)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_RuleEvaluation(benchmark::State& state) {
  const auto ctx = GrContext::make(3, 10);
  const QKEngine engine(ctx);
  engine.build_table();
  const ClassicalLR lr = [&engine](const Partition& a, const Partition& b, const Partition& c) {
    return engine.structure_constant(a, b, c, 0);
  };
  const auto& parts = engine.basis().partitions();
  std::size_t i = 0;
  for (auto _ : state) {
    const IndexTuple t{parts[i % parts.size()], parts[(i * 7) % parts.size()], parts[(i * 13) % parts.size()], 1};
    benchmark::DoNotOptimize(qlr_gr3_full(ctx, t, lr));
    ++i;
  }
}
BENCHMARK(BM_RuleEvaluation);

BENCHMARK_MAIN();
