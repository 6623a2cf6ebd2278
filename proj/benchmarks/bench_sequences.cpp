#include <benchmark/benchmark.h>

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <tuple>
#include <vector>

#include "succinct/corpus.hpp"
#include "succinct/structure_file.hpp"

namespace {

using namespace succinct;

constexpr uint64_t bench_n = uint64_t{1} << 20;
constexpr uint64_t query_pool = 1 << 14;

struct fixture {
    sequence seq;
    std::unique_ptr<sequence_index> index;
    std::vector<uint64_t> positions;
    std::vector<uint64_t> symbols;    // symbols taken from the text, so select always succeeds
    std::vector<uint64_t> occurrence;  // j with 1 <= j <= count(symbols[k])
};

fixture& get_fixture(backend_tag tag, uint64_t sigma) {
    static std::map<std::tuple<int, uint64_t>, fixture> cache;
    auto key = std::make_tuple(static_cast<int>(tag), sigma);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    fixture fx;
    fx.seq = generate_uniform(bench_n, sigma, 42);
    fx.index = build_index(tag, fx.seq);
    auto const hist = fx.seq.histogram();
    std::mt19937_64 rng(7);
    for (uint64_t k = 0; k < query_pool; ++k) {
        uint64_t const i = 1 + uniform_below(rng, bench_n);
        uint64_t const a = fx.seq[1 + uniform_below(rng, bench_n)];
        fx.positions.push_back(i);
        fx.symbols.push_back(a);
        fx.occurrence.push_back(1 + uniform_below(rng, hist[a]));
    }
    return cache.emplace(key, std::move(fx)).first->second;
}

void bm_access(benchmark::State& state, backend_tag tag) {
    auto& fx = get_fixture(tag, static_cast<uint64_t>(state.range(0)));
    uint64_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fx.index->access(fx.positions[k]));
        k = (k + 1) & (query_pool - 1);
    }
}

void bm_rank(benchmark::State& state, backend_tag tag) {
    auto& fx = get_fixture(tag, static_cast<uint64_t>(state.range(0)));
    uint64_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fx.index->rank(fx.symbols[k], fx.positions[k]));
        k = (k + 1) & (query_pool - 1);
    }
}

void bm_select(benchmark::State& state, backend_tag tag) {
    auto& fx = get_fixture(tag, static_cast<uint64_t>(state.range(0)));
    uint64_t k = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fx.index->select(fx.symbols[k], fx.occurrence[k]));
        k = (k + 1) & (query_pool - 1);
    }
}

void sigmas(benchmark::internal::Benchmark* b) {
    for (int64_t s : {int64_t{1} << 8, int64_t{1} << 16, int64_t{1} << 20}) b->Arg(s);
}

}  // namespace

BENCHMARK_CAPTURE(bm_access, wavelet, backend_tag::wavelet)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_rank, wavelet, backend_tag::wavelet)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_select, wavelet, backend_tag::wavelet)->Apply(sigmas);

BENCHMARK_CAPTURE(bm_access, golynski, backend_tag::golynski)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_rank, golynski, backend_tag::golynski)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_select, golynski, backend_tag::golynski)->Apply(sigmas);

BENCHMARK_CAPTURE(bm_access, rankreduce, backend_tag::rankreduce)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_rank, rankreduce, backend_tag::rankreduce)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_select, rankreduce, backend_tag::rankreduce)->Apply(sigmas);

BENCHMARK_CAPTURE(bm_access, apcompress, backend_tag::apcompress)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_rank, apcompress, backend_tag::apcompress)->Apply(sigmas);
BENCHMARK_CAPTURE(bm_select, apcompress, backend_tag::apcompress)->Apply(sigmas);

BENCHMARK_MAIN();
