// Serial reference kernel vs. the OpenMP root-partitioned kernel on
// synthetic databases.

#include <benchmark/benchmark.h>

#include <map>

#include "ppmine/miner.hpp"
#include "ppmine/oracle.hpp"

namespace {

const ppmine::SequenceDatabase& dataset(std::size_t m) {
    static std::map<std::size_t, ppmine::SequenceDatabase> cache;
    auto it = cache.find(m);
    if (it == cache.end()) it = cache.emplace(m, ppmine::random_db({42, m, 30, 40})).first;
    return it->second;
}

ppmine::MiningConfig config(const ppmine::SequenceDatabase& db) {
    ppmine::MiningConfig cfg;
    cfg.minsup = ppmine::resolve_minsup("8%", db.size());
    return cfg;
}

void BM_MineSerial(benchmark::State& state) {
    const auto& db = dataset(static_cast<std::size_t>(state.range(0)));
    const auto cfg = config(db);
    std::size_t patterns = 0;
    for (auto _ : state) {
        auto r = ppmine::mine(db, cfg);
        patterns = r.patterns.size();
        benchmark::DoNotOptimize(r);
    }
    state.counters["patterns"] = static_cast<double>(patterns);
}

void BM_MineParallel(benchmark::State& state) {
    const auto& db = dataset(static_cast<std::size_t>(state.range(0)));
    const auto cfg = config(db);
    const int threads = static_cast<int>(state.range(1));
    std::size_t patterns = 0;
    for (auto _ : state) {
        auto r = ppmine::mine_parallel(db, cfg, threads);
        patterns = r.patterns.size();
        benchmark::DoNotOptimize(r);
    }
    state.counters["patterns"] = static_cast<double>(patterns);
}

void BM_FrequentItems(benchmark::State& state) {
    const auto& db = dataset(static_cast<std::size_t>(state.range(0)));
    const auto root = ppmine::initial_projection(db);
    ppmine::ItemCounter counter(db.num_items());
    ppmine::FrequentItemSet out;
    for (auto _ : state) {
        counter.count(db, root, 1, out);
        benchmark::DoNotOptimize(out);
    }
}

} // namespace

BENCHMARK(BM_MineSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MineParallel)
    ->ArgsProduct({{1000, 4000}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_FrequentItems)->Arg(1000)->Arg(4000);

BENCHMARK_MAIN();
