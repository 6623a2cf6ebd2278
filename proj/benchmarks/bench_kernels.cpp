#include <benchmark/benchmark.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/broadword.hpp"
#include "succinct/corpus.hpp"
#include "succinct/predecessor.hpp"

namespace {

using namespace succinct;

std::vector<uint64_t> random_words(std::size_t count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> out(count);
    for (auto& w : out) w = rng();
    return out;
}

void bm_project_popcount(benchmark::State& state) {
    unsigned const width = static_cast<unsigned>(state.range(0));
    unsigned const count = 64 / width;
    auto const words = random_words(1024, 1);
    uint64_t k = 0;
    for (auto _ : state) {
        uint64_t const m = broadword::project_block(words[k & 1023], width, count, k & broadword::low_ones(width));
        benchmark::DoNotOptimize(broadword::popcount_fields(m, width, count));
        ++k;
    }
}
BENCHMARK(bm_project_popcount)->Arg(2)->Arg(4)->Arg(8);

void bm_select_in_word(benchmark::State& state) {
    auto const words = random_words(1024, 2);
    uint64_t k = 0;
    for (auto _ : state) {
        uint64_t const x = words[k & 1023] | 1;
        benchmark::DoNotOptimize(broadword::select_in_word(x, static_cast<unsigned>(k % std::popcount(x))));
        ++k;
    }
}
BENCHMARK(bm_select_in_word);

void bm_bitvector_rank(benchmark::State& state) {
    uint64_t const n = uint64_t{1} << 24;
    bit_vector bv(random_words(n / 64, 3), n);
    std::mt19937_64 rng(4);
    uint64_t acc = 0;
    for (auto _ : state) {
        acc += bv.rank1(1 + uniform_below(rng, n));
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(bm_bitvector_rank);

void bm_bitvector_select(benchmark::State& state) {
    uint64_t const n = uint64_t{1} << 24;
    bit_vector bv(random_words(n / 64, 5), n);
    std::mt19937_64 rng(6);
    uint64_t acc = 0;
    for (auto _ : state) {
        acc += bv.select1(1 + uniform_below(rng, bv.ones()));
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(bm_bitvector_select);

void bm_predecessor(benchmark::State& state) {
    unsigned const lg_u = static_cast<unsigned>(state.range(0));
    uint64_t const u = uint64_t{1} << lg_u;
    std::mt19937_64 rng(8);
    std::vector<uint64_t> keys;
    for (int k = 0; k < 100000; ++k) keys.push_back(1 + uniform_below(rng, u));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    predecessor_set set(keys, u);
    uint64_t acc = 0;
    for (auto _ : state) {
        acc += set.query(1 + uniform_below(rng, u)).rank;
    }
    benchmark::DoNotOptimize(acc);
}
BENCHMARK(bm_predecessor)->Arg(20)->Arg(32)->Arg(40)->Arg(48);

}  // namespace
