#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "succinct/corpus.hpp"

namespace succinct {
namespace {

// Reference values from an independent mt19937_64 implementation.
TEST(Corpus, GeneratorMatchesReference) {
    std::mt19937_64 rng;
    rng.discard(9999);
    EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(Corpus, UniformFrozen) {
    auto const s = generate_uniform(10, 4, 7);
    std::vector<uint64_t> expected{4, 4, 1, 4, 1, 1, 4, 4, 2, 3};
    EXPECT_EQ(std::vector<uint64_t>(s.symbols().begin(), s.symbols().end()), expected);

    auto const t = generate_uniform(12, 256, 1);
    std::vector<uint64_t> expected_t{35, 35, 116, 6, 90, 234, 121, 20, 146, 163, 23, 143};
    EXPECT_EQ(std::vector<uint64_t>(t.symbols().begin(), t.symbols().end()), expected_t);
}

TEST(Corpus, ZipfFrozen) {
    auto const s = generate_zipf(12, 16, 1.0, 3);
    std::vector<uint64_t> expected{4, 1, 4, 2, 4, 2, 7, 2, 6, 1, 1, 4};
    EXPECT_EQ(std::vector<uint64_t>(s.symbols().begin(), s.symbols().end()), expected);
}

TEST(Corpus, ZipfEntropyFrozen) {
    EXPECT_NEAR(zeroth_order_entropy(generate_zipf(100000, 1 << 16, 1.0, 11)), 10.74895473632205, 1e-9);
}

TEST(Corpus, ZeroExponentIsUniform) {
    auto const a = generate_zipf(1000, 50, 0.0, 9);
    auto const b = generate_uniform(1000, 50, 9);
    EXPECT_TRUE(std::equal(a.symbols().begin(), a.symbols().end(), b.symbols().begin()));
}

TEST(Corpus, ValuesInAlphabet) {
    for (auto const& s : {generate_uniform(5000, 3, 1), generate_zipf(5000, 1000, 1.3, 2)}) {
        for (uint64_t v : s.symbols()) {
            ASSERT_GE(v, 1u);
            ASSERT_LE(v, s.sigma());
        }
    }
}

TEST(Corpus, BytesMapToShiftedSymbols) {
    std::string const text = "ab\xff";
    auto const s = sequence_from_bytes(
        std::span(reinterpret_cast<uint8_t const*>(text.data()), text.size()));
    EXPECT_EQ(s.sigma(), 256u);
    EXPECT_EQ(s[1], 98u);
    EXPECT_EQ(s[2], 99u);
    EXPECT_EQ(s[3], 256u);
}

TEST(Corpus, RejectsDegenerateShapes) {
    EXPECT_THROW(generate_uniform(0, 4, 1), validation_error);
    EXPECT_THROW(generate_uniform(4, 1, 1), validation_error);
}

}  // namespace
}  // namespace succinct
