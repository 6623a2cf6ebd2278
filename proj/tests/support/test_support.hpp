#pragma once

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "succinct/corpus.hpp"
#include "succinct/errors.hpp"
#include "succinct/sequence.hpp"

namespace succinct::testing {

// S = bbcab with a=1, b=2, c=3.
inline sequence fig1() { return sequence({2, 2, 3, 1, 2}, 3); }

inline sequence random_sequence(std::mt19937_64& rng, uint64_t n, uint64_t sigma) {
    std::vector<uint64_t> s(n);
    for (auto& v : s) v = 1 + uniform_below(rng, sigma);
    return sequence(std::move(s), sigma);
}

// Every valid argument of the three queries, plus the boundary errors.
template <typename Index>
void expect_oracle_equal(sequence const& seq, Index const& idx) {
    uint64_t const n = seq.size();
    uint64_t const sigma = seq.sigma();
    ASSERT_EQ(idx.size(), n);
    ASSERT_EQ(idx.sigma(), sigma);
    for (uint64_t i = 1; i <= n; ++i) ASSERT_EQ(idx.access(i), seq[i]) << "access " << i;
    auto const hist = seq.histogram();
    for (uint64_t a = 1; a <= sigma; ++a) {
        uint64_t count = 0;
        ASSERT_EQ(idx.rank(a, 0), 0u);
        for (uint64_t i = 1; i <= n; ++i) {
            if (seq[i] == a) {
                ++count;
                ASSERT_EQ(idx.select(a, count), i) << "select a=" << a << " j=" << count;
            }
            ASSERT_EQ(idx.rank(a, i), count) << "rank a=" << a << " i=" << i;
        }
        ASSERT_EQ(count, hist[a]);
        EXPECT_THROW(idx.select(a, count + 1), not_found_error) << "a=" << a;
    }
    EXPECT_THROW(idx.access(0), range_error);
    EXPECT_THROW(idx.access(n + 1), range_error);
    EXPECT_THROW(idx.rank(1, n + 1), range_error);
    EXPECT_THROW(idx.rank(0, 1), range_error);
    EXPECT_THROW(idx.rank(sigma + 1, 1), range_error);
    EXPECT_THROW(idx.select(sigma + 1, 1), range_error);
    EXPECT_THROW(idx.select(1, 0), not_found_error);
}

// Random queries against the scan oracles.
template <typename Index>
void expect_sampled_equal(sequence const& seq, Index const& idx, uint64_t queries, uint64_t seed) {
    std::mt19937_64 rng(seed);
    uint64_t const n = seq.size();
    auto const hist = seq.histogram();
    std::vector<std::vector<uint64_t>> occ(seq.sigma() + 1);
    for (uint64_t i = 1; i <= n; ++i) occ[seq[i]].push_back(i);
    for (uint64_t q = 0; q < queries; ++q) {
        uint64_t const i = 1 + uniform_below(rng, n);
        ASSERT_EQ(idx.access(i), seq[i]);
        uint64_t const a = 1 + uniform_below(rng, seq.sigma());
        uint64_t const r = static_cast<uint64_t>(
            std::upper_bound(occ[a].begin(), occ[a].end(), i) - occ[a].begin());
        ASSERT_EQ(idx.rank(a, i), r) << "rank a=" << a << " i=" << i;
        uint64_t const b = seq[1 + uniform_below(rng, n)];
        uint64_t const j = 1 + uniform_below(rng, hist[b]);
        ASSERT_EQ(idx.select(b, j), occ[b][j - 1]) << "select a=" << b << " j=" << j;
    }
}

}  // namespace succinct::testing
