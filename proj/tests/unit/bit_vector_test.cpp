#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/serialize.hpp"

namespace succinct {
namespace {

TEST(BitVector, SmallExamples) {
    auto const v = bit_vector::from_string("101");
    EXPECT_EQ(v.size(), 3u);
    EXPECT_EQ(v.rank1(3), 2u);

    auto const r = bit_vector::from_string("10111010");
    EXPECT_EQ(r.rank1(5), 4u);
    EXPECT_EQ(r.rank0(2), 1u);
    EXPECT_EQ(r.select0(1), 2u);
}

TEST(BitVector, FigureColumnBitmap) {
    auto const c = bit_vector::from_string("1011000110");
    EXPECT_EQ(c.select0(4), 7u);
    EXPECT_EQ(c.rank1(7), 3u);
}

TEST(BitVector, UnaryConcat) {
    std::vector<uint64_t> rows{1, 3, 1};
    EXPECT_EQ(unary_concat(rows), bit_vector::from_string("10111010"));
    std::vector<uint64_t> chunk{1, 1, 2, 0};
    EXPECT_EQ(unary_concat(chunk), bit_vector::from_string("10101100"));
}

TEST(BitVector, Empty) {
    bit_vector v;
    EXPECT_EQ(v.size(), 0u);
    EXPECT_EQ(v.rank1(0), 0u);
}

TEST(BitVector, AllZerosAndAllOnes) {
    bit_vector_builder b0, b1;
    b0.append(false, 70000);
    b1.append(true, 70000);
    auto const z = std::move(b0).build();
    auto const o = std::move(b1).build();
    EXPECT_EQ(z.rank1(70000), 0u);
    EXPECT_EQ(z.select0(70000), 70000u);
    EXPECT_EQ(o.rank1(65537), 65537u);
    EXPECT_EQ(o.select1(12345), 12345u);
}

class BitVectorDensity : public ::testing::TestWithParam<double> {};

// Directories against a running scan, over several superblocks.
TEST_P(BitVectorDensity, MatchesScan) {
    std::mt19937_64 rng(17);
    std::bernoulli_distribution coin(GetParam());
    uint64_t const n = 1000003;
    bit_vector_builder b;
    std::vector<bool> bits(n + 1);
    for (uint64_t i = 1; i <= n; ++i) {
        bits[i] = coin(rng);
        b.push_back(bits[i]);
    }
    auto const v = std::move(b).build();
    uint64_t ones = 0;
    for (uint64_t i = 1; i <= n; ++i) {
        if (bits[i]) {
            ++ones;
            ASSERT_EQ(v.select1(ones), i);
        } else {
            ASSERT_EQ(v.select0(i - ones), i);
        }
        ASSERT_EQ(v.rank1(i), ones);
    }
    EXPECT_EQ(v.ones(), ones);
}

INSTANTIATE_TEST_SUITE_P(Densities, BitVectorDensity, ::testing::Values(0.001, 0.5, 0.999));

TEST(BitVector, SerializeRoundTrip) {
    auto const v = bit_vector::from_string("1100101110001");
    binary_writer w;
    v.serialize(w);
    auto const bytes = w.release();
    binary_reader r(bytes);
    EXPECT_EQ(bit_vector::deserialize(r), v);
    EXPECT_TRUE(r.at_end());
}

}  // namespace
}  // namespace succinct
