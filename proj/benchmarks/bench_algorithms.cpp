#include <random>

#include <benchmark/benchmark.h>

#include "expunc/campaign.hpp"
#include "expunc/generate.hpp"
#include "expunc/minimum.hpp"
#include "expunc/mst.hpp"
#include "expunc/sorting.hpp"
#include "expunc/verifier.hpp"

using namespace expunc;

namespace {

struct MinCase {
    Instance inst;
    Values real, pred;
};

MinCase minimum_case(int roots) {
    GenConfig cfg;
    cfg.seed = 17;
    cfg.roots = roots;
    auto pool = clause_intervals(parse_cnf(random_cnf(10 * roots, 15 * roots, 3, 17)));
    MinCase c;
    c.inst = gen_minimum_instance(pool, cfg);
    c.real = gen_true_values(c.inst, 17).values;
    std::mt19937_64 rng(18);
    c.pred = random_cell_values(c.inst, rng);
    return c;
}

MinCase mst_case(int vertices) {
    std::mt19937_64 rng(19);
    TspGraph g;
    g.vertices = vertices;
    for (int a = 0; a < vertices; ++a)
        for (int b = a + 1; b < vertices; ++b) {
            g.ends.emplace_back(a, b);
            g.weight.push_back(100 + static_cast<std::int64_t>(rng() % 900));
        }
    GenConfig cfg;
    cfg.seed = 19;
    auto s = gen_mst_instance(g, cfg);
    MinCase c{s.instance, s.real, {}};
    c.pred = random_cell_values(c.inst, rng);
    return c;
}

void BM_OfflineOptimum(benchmark::State& state) {
    auto c = minimum_case(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(offline_optimum(c.inst, c.real));
    state.counters["n"] = c.inst.size();
}
BENCHMARK(BM_OfflineOptimum)->Arg(5)->Arg(10)->Arg(20);

void BM_MinimumHop(benchmark::State& state) {
    auto c = minimum_case(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        QueryState st(c.inst, c.real);
        benchmark::DoNotOptimize(run_alg_hop(c.inst, c.pred, 2, st));
    }
}
BENCHMARK(BM_MinimumHop)->Arg(5)->Arg(10)->Arg(20);

void BM_MinimumMqd(benchmark::State& state) {
    auto c = minimum_case(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        QueryState st(c.inst, c.real);
        benchmark::DoNotOptimize(run_alg_mqd(c.inst, c.pred, 2, st));
    }
}
BENCHMARK(BM_MinimumMqd)->Arg(5)->Arg(10)->Arg(20);

void BM_SortSingle(benchmark::State& state) {
    std::mt19937_64 rng(23);
    const int n = static_cast<int>(state.range(0));
    Instance inst = random_set_instance(Problem::Sorting, n, 1, 6, 4 * n, rng);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    inst.sets = {all};
    Values real = random_grid_values(inst, rng), pred = random_grid_values(inst, rng);
    for (auto _ : state) {
        QueryState st(inst, real);
        benchmark::DoNotOptimize(run_sort_single(inst, pred, st));
    }
}
BENCHMARK(BM_SortSingle)->Arg(20)->Arg(80);

void BM_Mst(benchmark::State& state) {
    auto c = mst_case(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        QueryState st(c.inst, c.real);
        benchmark::DoNotOptimize(run_mst(c.inst, c.pred, 2, Recovery::B, st));
    }
    state.counters["edges"] = c.inst.size();
}
BENCHMARK(BM_Mst)->Arg(8)->Arg(16)->Arg(24);

void BM_Campaign(benchmark::State& state) {
    GenConfig cfg;
    cfg.seed = 5;
    cfg.roots = 6;
    Campaign camp;
    camp.corpus = synthetic_minimum_corpus(10, cfg);
    camp.algorithms = {{Algo::Hop, 2}, {Algo::Mqd, 2}, {Algo::Witness, 2}};
    camp.threads = 1;
    for (auto _ : state) benchmark::DoNotOptimize(run_campaign(camp));
}
BENCHMARK(BM_Campaign)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
