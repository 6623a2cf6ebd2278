#include <gtest/gtest.h>

#include "succinct/sequence.hpp"
#include "test_support.hpp"

namespace succinct {
namespace {

using testing::fig1;

TEST(Sequence, RejectsSymbolsOutsideAlphabet) {
    EXPECT_THROW(sequence({1, 4}, 3), validation_error);
    EXPECT_THROW(sequence({0, 1}, 3), validation_error);
}

TEST(Oracle, AccessOnFigureString) { EXPECT_EQ(oracle_access(fig1(), 3), 3u); }

TEST(Oracle, RankOnFigureString) {
    EXPECT_EQ(oracle_rank(fig1(), 2, 3), 2u);
    EXPECT_EQ(oracle_rank(fig1(), 3, 2), 0u);
    EXPECT_EQ(oracle_rank(fig1(), 2, 0), 0u);
}

TEST(Oracle, SelectOnFigureString) {
    EXPECT_EQ(oracle_select(fig1(), 2, 2), 2u);
    EXPECT_EQ(oracle_select(fig1(), 1, 1), 4u);
    EXPECT_EQ(oracle_select(fig1(), 2, 3), 5u);
    EXPECT_THROW(oracle_select(fig1(), 1, 2), not_found_error);
}

TEST(Oracle, Errors) {
    EXPECT_THROW(oracle_access(fig1(), 0), range_error);
    EXPECT_THROW(oracle_access(fig1(), 6), range_error);
    EXPECT_THROW(oracle_rank(fig1(), 1, 6), range_error);
    EXPECT_THROW(oracle_rank(fig1(), 4, 1), range_error);
    EXPECT_THROW(oracle_select(fig1(), 0, 1), range_error);
}

TEST(Entropy, TwoSymbols) {
    EXPECT_NEAR(zeroth_order_entropy(sequence({1, 1, 1, 2}, 2)), 0.81128, 1e-5);
}

TEST(Entropy, ConstantStringIsZero) { EXPECT_EQ(zeroth_order_entropy(sequence({3, 3, 3}, 4)), 0.0); }

TEST(Histogram, CountsEverySymbol) {
    auto const h = fig1().histogram();
    ASSERT_EQ(h.size(), 4u);
    EXPECT_EQ(h[1], 1u);
    EXPECT_EQ(h[2], 3u);
    EXPECT_EQ(h[3], 1u);
}

}  // namespace
}  // namespace succinct
