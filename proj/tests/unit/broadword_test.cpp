#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <vector>

#include "succinct/broadword.hpp"

namespace succinct {
namespace {

using namespace broadword;

uint64_t project_loop(uint64_t block, unsigned width, unsigned count, uint64_t value) {
    uint64_t mask = 0;
    for (unsigned j = 1; j <= count; ++j) {
        if (((block >> ((j - 1) * width)) & low_ones(width)) == value) mask |= uint64_t{1} << (j * width - 1);
    }
    return mask;
}

unsigned select_loop(uint64_t mask, unsigned width, unsigned j) {
    for (unsigned bit = 0; bit < 64; ++bit) {
        if ((mask >> bit) & 1) {
            if (--j == 0) return (bit + 1) / width;
        }
    }
    return 0;
}

TEST(Broadword, ProjectExample) { EXPECT_EQ(project_block(0x7252, 4, 4, 2), 0x0808u); }

TEST(Broadword, ProjectAbsentValue) { EXPECT_EQ(project_block(0x7252, 4, 4, 9), 0u); }

TEST(Broadword, ProjectExhaustiveWidthTwo) {
    for (uint64_t block = 0; block < 256; ++block) {
        for (uint64_t a = 0; a < 4; ++a) ASSERT_EQ(project_block(block, 2, 4, a), project_loop(block, 2, 4, a));
    }
}

TEST(Broadword, ProjectTopFieldNotLost) {
    // A full word of 4-bit fields: the top field carries into bit 63.
    uint64_t const block = 0xF000000000000000ULL;
    EXPECT_EQ(project_block(block, 4, 16, 0xF), uint64_t{1} << 63);
    EXPECT_EQ(project_block(block, 4, 16, 0), project_loop(block, 4, 16, 0));
}

TEST(Broadword, PopcountExamples) {
    EXPECT_EQ(popcount_fields(0x0808, 4, 4), 2u);
    EXPECT_EQ(popcount_fields(0, 4, 4), 0u);
    EXPECT_EQ(popcount_fields(0x8888, 4, 4), 4u);
}

TEST(Broadword, PopcountMatchesNative) {
    std::mt19937_64 rng(1);
    for (unsigned width : {2u, 3u, 4u, 8u}) {
        for (unsigned count = 1; count * width <= 64; ++count) {
            uint64_t const highs = field_highs(width, count);
            for (int k = 0; k < 2000; ++k) {
                uint64_t const m = rng() & highs;
                ASSERT_EQ(popcount_fields(m, width, count), static_cast<unsigned>(std::popcount(m)))
                    << width << "x" << count;
            }
        }
    }
}

TEST(Broadword, SelectExamples) {
    EXPECT_EQ(select_in_block(0x0808, 4, 4, 2), 3u);
    EXPECT_EQ(select_in_block(0x0008, 4, 4, 1), 1u);
    EXPECT_THROW(select_in_block(0x0808, 4, 4, 3), not_found_error);
    EXPECT_THROW(select_in_block(0x0808, 4, 4, 0), not_found_error);
}

TEST(Broadword, SelectThreeFieldsAllMasks) {
    uint64_t const highs = field_highs(4, 3);
    for (uint64_t m = 0; m < 4096; ++m) {
        uint64_t const mask = m & highs;
        for (unsigned j = 1; j <= static_cast<unsigned>(std::popcount(mask)); ++j) {
            ASSERT_EQ(select_in_block(mask, 4, 3, j), select_loop(mask, 4, j));
        }
    }
}

// Every block shape small enough for the superfield scheme, every mask.
TEST(Broadword, SelectSuperfieldShapesExhaustive) {
    for (unsigned width = 1; width <= 8; ++width) {
        for (unsigned count = 1; superfield_fits(width, count); ++count) {
            for (uint64_t bits = 0; bits < (uint64_t{1} << count); ++bits) {
                uint64_t mask = 0;
                for (unsigned f = 0; f < count; ++f) {
                    if ((bits >> f) & 1) mask |= uint64_t{1} << ((f + 1) * width - 1);
                }
                for (unsigned j = 1; j <= static_cast<unsigned>(std::popcount(mask)); ++j) {
                    ASSERT_EQ(select_in_block(mask, width, count, j), select_loop(mask, width, j))
                        << width << "x" << count << " mask " << mask << " j " << j;
                }
            }
        }
    }
}

TEST(Broadword, PopcountWidthOne) {
    for (unsigned count = 1; count <= 7; ++count) {
        for (uint64_t m = 0; m < (uint64_t{1} << count); ++m) {
            ASSERT_EQ(popcount_fields(m, 1, count), static_cast<unsigned>(std::popcount(m)));
        }
    }
}

TEST(Broadword, SelectWideBlocksFallBack) {
    std::mt19937_64 rng(2);
    uint64_t const highs = field_highs(4, 16);
    for (int k = 0; k < 5000; ++k) {
        uint64_t const mask = rng() & highs;
        for (unsigned j = 1; j <= static_cast<unsigned>(std::popcount(mask)); ++j) {
            ASSERT_EQ(select_in_block(mask, 4, 16, j), select_loop(mask, 4, j));
        }
    }
}

TEST(Broadword, SelectInWord) {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 10000; ++k) {
        uint64_t const x = rng();
        unsigned seen = 0;
        for (unsigned bit = 0; bit < 64; ++bit) {
            if ((x >> bit) & 1) ASSERT_EQ(select_in_word(x, seen++), bit);
        }
    }
}

TEST(Broadword, LowestSetField) {
    EXPECT_EQ(lowest_set_field(0x0800, 4), 3u);
    EXPECT_EQ(lowest_set_field(0x8, 4), 1u);
    EXPECT_THROW(lowest_set_field(0, 4), contract_violation);
    EXPECT_THROW(lowest_set_field(0x0808, 4), contract_violation);
    EXPECT_THROW(lowest_set_field(0x4, 4), contract_violation);
    for (unsigned stride : {4u, 5u, 8u}) {
        for (unsigned pos = stride; pos <= 64; pos += stride) {
            EXPECT_EQ(lowest_set_field(uint64_t{1} << (pos - 1), stride),
                      static_cast<unsigned>(std::countr_zero(uint64_t{1} << (pos - 1)) + 1) / stride);
        }
    }
}

TEST(Broadword, PackedPredecessorExamples) {
    std::vector<uint64_t> keys{3, 7, 9, 12};
    packed_key_set set(keys, 4);
    EXPECT_EQ(set.predecessor(8), std::make_pair(uint64_t{2}, uint64_t{7}));
    EXPECT_EQ(set.predecessor(2), std::make_pair(uint64_t{0}, uint64_t{0}));
    EXPECT_EQ(set.predecessor(12), std::make_pair(uint64_t{4}, uint64_t{12}));
    EXPECT_EQ(set.predecessor(15), std::make_pair(uint64_t{4}, uint64_t{12}));
}

TEST(Broadword, PackedPredecessorEmpty) {
    packed_key_set set({}, 4);
    EXPECT_EQ(set.predecessor(5), std::make_pair(uint64_t{0}, uint64_t{0}));
}

TEST(Broadword, PackedKeySetValidates) {
    std::vector<uint64_t> unsorted{3, 2};
    EXPECT_THROW(packed_key_set(unsorted, 4), validation_error);
    std::vector<uint64_t> wide{16};
    EXPECT_THROW(packed_key_set(wide, 4), validation_error);
}

TEST(Broadword, FieldBlockScans) {
    std::mt19937_64 rng(5);
    for (unsigned width : {2u, 3u, 5u, 8u}) {
        uint64_t const count = 300;
        std::vector<uint64_t> fields(count);
        std::vector<uint64_t> words((count * width + 63) / 64 + 1, 0);
        for (uint64_t k = 0; k < count; ++k) {
            fields[k] = rng() & low_ones(width);
            uint64_t const at = 5 + k * width;
            words[at >> 6] |= fields[k] << (at & 63);
            if ((at & 63) + width > 64) words[(at >> 6) + 1] |= fields[k] >> (64 - (at & 63));
        }
        field_block const blk{words, 5, width, count};
        for (uint64_t v = 0; v <= low_ones(width); v += 1 + (width > 4 ? 37 : 0)) {
            uint64_t seen = 0;
            for (uint64_t k = 0; k < count; ++k) {
                if (fields[k] == v) ASSERT_EQ(select_equal(blk, v, ++seen), k + 1);
            }
            ASSERT_EQ(count_equal(blk, v), seen);
            ASSERT_EQ(select_equal(blk, v, seen + 1), 0u);
        }
    }
}

}  // namespace
}  // namespace succinct
