// Serial reference loop (workers = 1) against the OpenMP path on the same
// workloads. The worker count is the benchmark argument.

#include <benchmark/benchmark.h>

#include <vector>

#include "superdom/harness.hpp"
#include "superdom/solvers.hpp"

using namespace superdom;

namespace {

void apply_worker_args(benchmark::internal::Benchmark* b) {
  // Always compare against 2 and 4 workers, plus the machine default.
  b->Arg(1)->Arg(2)->Arg(4);
  if (const int n = default_workers(); n > 4) b->Arg(n);
  b->ArgName("workers")->Unit(benchmark::kMillisecond)->UseRealTime();
}

void BM_FamilyEquivalence(benchmark::State& state) {
  const Corpus corpus = Corpus::enumerated(6, CorpusFilter::connected);
  const RunOptions options{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    const TheoremCheck c = verify(TheoremId::thm7_family_f, corpus, options);
    benchmark::DoNotOptimize(c.passes);
  }
  state.counters["graphs"] = static_cast<double>(corpus.count());
}
BENCHMARK(BM_FamilyEquivalence)->Apply(apply_worker_args);

void BM_OracleEquivalence(benchmark::State& state) {
  const Corpus corpus = Corpus::enumerated(6);
  const RunOptions options{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    TheoremCheck c;
    run_indexed(
        corpus.raw_size(),
        [&corpus](std::uint64_t i) {
          const Graph g = *corpus.item(i);
          return gamma_sp(g).value == gamma_sp_oracle(g).value ? Outcome::pass()
                                                              : Outcome::fail({}, "equal", "different");
        },
        options, c);
    benchmark::DoNotOptimize(c.passes);
  }
}
BENCHMARK(BM_OracleEquivalence)->Apply(apply_worker_args);

void BM_ProductSweep(benchmark::State& state) {
  const Corpus gs = Corpus::enumerated_range(2, 4, CorpusFilter::connected);
  const Corpus hs = Corpus::enumerated_range(2, 4, CorpusFilter::nonempty);
  const TheoremId ids[] = {TheoremId::thm10, TheoremId::thm11, TheoremId::thm12};
  const RunOptions options{static_cast<int>(state.range(0))};
  for (auto _ : state) {
    const auto checks = product_sweep(gs, hs, ids, 16, options);
    benchmark::DoNotOptimize(checks.data());
  }
}
BENCHMARK(BM_ProductSweep)->Apply(apply_worker_args);

void BM_Campaign(benchmark::State& state) {
  const CampaignConfig config{5, RunOptions{static_cast<int>(state.range(0))}};
  for (auto _ : state) {
    const auto checks = run_campaign(config);
    benchmark::DoNotOptimize(checks.data());
  }
}
BENCHMARK(BM_Campaign)->Apply(apply_worker_args);

}  // namespace

BENCHMARK_MAIN();
