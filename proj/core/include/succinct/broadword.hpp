#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "succinct/errors.hpp"

/*
    Word-parallel kernels over blocks of small fields packed into 64-bit
    words.

    Field layout: field 1 occupies bits [0, width) of the block, field 2 bits
    [width, 2*width), and so on (least-significant first). A "field mask" has
    at most one bit per field, at the field's highest bit, i.e. bit j*width-1
    for field j.

    Constant names follow the usual broadword notation: L = (0^{w-1}1)^b puts
    a one at the bottom of each field, H = (10^{w-1})^b at the top.
*/
namespace succinct::broadword {

constexpr uint64_t low_ones(unsigned len) {
    return len >= 64 ? ~uint64_t{0} : (uint64_t{1} << len) - 1;
}

// Sum over k < count of (value << k*stride), truncated to 64 bits.
constexpr uint64_t repeat(uint64_t value, unsigned stride, unsigned count) {
    uint64_t out = 0;
    for (unsigned k = 0; k < count && uint64_t{k} * stride < 64; ++k) out |= value << (k * stride);
    return out;
}

constexpr uint64_t field_lows(unsigned width, unsigned count) { return repeat(1, width, count); }

constexpr uint64_t field_highs(unsigned width, unsigned count) {
    return field_lows(width, count) << (width - 1);
}

// Mask with the top bit of every field of `block` equal to `value`.
//
// Y = block XOR (value * L) zeroes exactly the matching fields. A field is
// zero iff its top bit is clear and its low width-1 bits are all clear; the
// second test is done by adding the low-bit mask, which cannot carry out of
// the field, so fields never interfere with each other.
inline uint64_t project_block(uint64_t block, unsigned width, unsigned count, uint64_t value) {
    uint64_t const lows = field_lows(width, count);
    uint64_t const highs = lows << (width - 1);
    uint64_t const body = highs ^ (lows * low_ones(width));  // low width-1 bits of every field
    uint64_t const y = block ^ (value * lows);
    uint64_t const t = (y & body) + body;
    return ~(t | y) & highs;
}

// True when the four-step multiply popcount fits a 64-bit word.
constexpr bool popcount_fits(unsigned width, unsigned count) {
    if (count == 0) return true;
    uint64_t const top = uint64_t{count} * count * width - 1 + std::bit_width(uint64_t{count});
    return top <= 64;
}

// Number of set bits in a field mask of `count` fields.
//
// Replicates the block `count` times, keeps bit i of copy i, and gathers the
// kept bits into one counter with a single multiplication. Falls back to the
// native popcount when the replicated block does not fit a word.
inline unsigned popcount_fields(uint64_t mask, unsigned width, unsigned count) {
    if (count == 0 || mask == 0) return 0;
    if (!popcount_fits(width, count)) return static_cast<unsigned>(std::popcount(mask));
    unsigned const block_bits = width * count;
    uint64_t const copies = repeat(1, block_bits, count);
    uint64_t const diag = repeat(uint64_t{1} << (width - 1), block_bits + width, count);
    uint64_t const gather = repeat(1, block_bits + width, count);
    uint64_t const x = mask * copies;
    uint64_t const y = x & diag;
    uint64_t const z = y * gather;
    unsigned const at = count * block_bits - 1;
    return static_cast<unsigned>((z >> at) & low_ones(std::bit_width(uint64_t{count})));
}

// Field index (1-based) of the single set bit of v, which must sit at the
// top of a field of width `stride`.
inline unsigned lowest_set_field(uint64_t v, unsigned stride) {
    if (v == 0 || (v & (v - 1)) != 0) {
        throw contract_violation("lowest_set_field: expected exactly one set bit");
    }
    unsigned const pos = static_cast<unsigned>(std::countr_zero(v)) + 1;
    if (pos % stride != 0) {
        throw contract_violation("lowest_set_field: set bit is not at a field boundary");
    }
    return pos / stride;
}

// Position (0-based) of the (k+1)-th set bit of x. Requires k < popcount(x).
inline unsigned select_in_word(uint64_t x, unsigned k) {
    constexpr uint64_t ones8 = 0x0101010101010101ULL;
    constexpr uint64_t msbs8 = 0x8080808080808080ULL;
    uint64_t s = x - ((x >> 1) & 0x5555555555555555ULL);
    s = (s & 0x3333333333333333ULL) + ((s >> 2) & 0x3333333333333333ULL);
    s = ((s + (s >> 4)) & 0x0F0F0F0F0F0F0F0FULL) * ones8;  // byte i: popcount of bytes 0..i
    uint64_t const le = ((k * ones8 | msbs8) - s) & msbs8;  // bytes whose prefix count <= k
    unsigned const place = static_cast<unsigned>(std::popcount(le)) * 8;
    unsigned rest = k - static_cast<unsigned>(((s << 8) >> place) & 0xFF);
    uint64_t byte = (x >> place) & 0xFF;
    while (rest-- > 0) byte &= byte - 1;
    return place + static_cast<unsigned>(std::countr_zero(byte));
}

// Superfield width used by select_in_block.
constexpr unsigned superfield_width(unsigned width, unsigned count) {
    return 2 * count * count * width;
}

constexpr bool superfield_fits(unsigned width, unsigned count) {
    return count >= 1 && uint64_t{count} * superfield_width(width, count) <= 64;
}

namespace detail {

// Prefix-count select: copy the block into `count` superfields, keep the
// first i fields in superfield i, popcount all superfields at once, then
// project the superfield equal to j and locate it.
inline unsigned superfield_select(uint64_t mask, unsigned width, unsigned count, unsigned j) {
    unsigned const k = superfield_width(width, count);
    unsigned const block_bits = width * count;
    uint64_t const x = mask * repeat(1, k, count);
    uint64_t prefixes = 0;
    for (unsigned i = 1; i <= count; ++i) prefixes |= low_ones(i * width) << ((i - 1) * k);
    uint64_t const y = x & prefixes;

    // four-step popcount, run inside every superfield simultaneously
    uint64_t const copies = repeat(1, block_bits, count);  // y already holds every superfield
    uint64_t const diag =
        repeat(repeat(uint64_t{1} << (width - 1), block_bits + width, count), k, count);
    uint64_t const gather = repeat(1, block_bits + width, count);
    uint64_t const z = ((y * copies) & diag) * gather;
    unsigned const at = count * block_bits - 1;
    uint64_t const counts = (z >> at) & repeat(low_ones(std::bit_width(uint64_t{count})), k, count);

    uint64_t const w = project_block(counts, k, count, j);
    uint64_t const v = w & (w ^ (w - 1));
    return lowest_set_field(v, k);
}

}  // namespace detail

// Field index (1-based) holding the j-th set bit of a field mask.
inline unsigned select_in_block(uint64_t mask, unsigned width, unsigned count, unsigned j) {
    if (j == 0 || j > static_cast<unsigned>(std::popcount(mask))) {
        throw not_found_error("select_in_block: occurrence out of range");
    }
    if (superfield_fits(width, count)) return detail::superfield_select(mask, width, count, j);
    return (select_in_word(mask, j - 1) + 1) / width;
}

// Reads `len` <= 64 bits starting at absolute bit `offset` of a word array.
// Bits past the end of the array read as zero.
inline uint64_t extract_bits(std::span<const uint64_t> words, uint64_t offset, unsigned len) {
    if (len == 0) return 0;
    uint64_t const w = offset >> 6;
    unsigned const shift = static_cast<unsigned>(offset & 63);
    uint64_t value = w < words.size() ? words[w] >> shift : 0;
    if (shift != 0 && shift + len > 64 && w + 1 < words.size()) value |= words[w + 1] << (64 - shift);
    return value & low_ones(len);
}

// A run of `count` fields of `width` bits starting at bit `first_bit`.
// Fields may straddle word boundaries; kernels process them in groups of
// floor(64/width) fields.
struct field_block {
    std::span<const uint64_t> words;
    uint64_t first_bit = 0;
    unsigned width = 1;
    uint64_t count = 0;

    unsigned group() const { return 64 / width; }
};

// Field mask for a whole block, in the same bit layout as the block (bit
// j*width-1 relative to first_bit is set iff field j equals value).
inline std::vector<uint64_t> project_fields(field_block const& blk, uint64_t value) {
    std::vector<uint64_t> out((blk.count * blk.width + 63) / 64, 0);
    unsigned const g = blk.group();
    for (uint64_t f = 0; f < blk.count; f += g) {
        unsigned const c = static_cast<unsigned>(std::min<uint64_t>(g, blk.count - f));
        uint64_t const word = extract_bits(blk.words, blk.first_bit + f * blk.width, c * blk.width);
        uint64_t const m = project_block(word, blk.width, c, value);
        uint64_t const at = f * blk.width;
        out[at >> 6] |= m << (at & 63);
        if ((at & 63) != 0 && (at & 63) + c * blk.width > 64) out[(at >> 6) + 1] |= m >> (64 - (at & 63));
    }
    return out;
}

// Number of fields equal to value.
inline uint64_t count_equal(field_block const& blk, uint64_t value) {
    unsigned const g = blk.group();
    uint64_t total = 0;
    for (uint64_t f = 0; f < blk.count; f += g) {
        unsigned const c = static_cast<unsigned>(std::min<uint64_t>(g, blk.count - f));
        uint64_t const word = extract_bits(blk.words, blk.first_bit + f * blk.width, c * blk.width);
        total += popcount_fields(project_block(word, blk.width, c, value), blk.width, c);
    }
    return total;
}

// Index (1-based) of the j-th field equal to value, or 0 when there are
// fewer than j such fields.
inline uint64_t select_equal(field_block const& blk, uint64_t value, uint64_t j) {
    unsigned const g = blk.group();
    for (uint64_t f = 0; f < blk.count; f += g) {
        unsigned const c = static_cast<unsigned>(std::min<uint64_t>(g, blk.count - f));
        uint64_t const word = extract_bits(blk.words, blk.first_bit + f * blk.width, c * blk.width);
        uint64_t const m = project_block(word, blk.width, c, value);
        unsigned const here = static_cast<unsigned>(std::popcount(m));
        if (here >= j) return f + select_in_block(m, blk.width, c, static_cast<unsigned>(j));
        j -= here;
    }
    return 0;
}

/*
    Packed key sets: sorted keys of `width` bits, each followed by a zero
    separator bit (stride width+1), stored contiguously across words.
*/

// Rank (number of keys <= x) among `count` keys of one word-sized group.
//
// X holds copies of x with every separator set; subtracting the keys leaves
// separator i set iff x >= key i, with no borrow crossing a separator.
inline unsigned packed_group_rank(uint64_t group, unsigned width, unsigned count, uint64_t x) {
    unsigned const stride = width + 1;
    uint64_t const seps = repeat(uint64_t{1} << width, stride, count);
    uint64_t const xs = (x * repeat(1, stride, count)) | seps;
    uint64_t const z = (xs - group) & seps;
    return static_cast<unsigned>(std::bit_width(z)) / stride;
}

inline uint64_t packed_key_at_bit(std::span<const uint64_t> words, uint64_t first_bit, unsigned width,
                                  uint64_t index) {
    return extract_bits(words, first_bit + index * (width + 1), width);
}

inline uint64_t packed_key_at(std::span<const uint64_t> words, uint64_t first_key, unsigned width,
                              uint64_t index) {
    return packed_key_at_bit(words, first_key * (width + 1), width, index);
}

// Number of keys <= x among `count` keys of a packed stream starting at bit
// first_bit, scanning one word-sized group at a time.
inline uint64_t packed_rank_at_bit(std::span<const uint64_t> words, uint64_t first_bit, uint64_t count,
                                   unsigned width, uint64_t x) {
    unsigned const stride = width + 1;
    unsigned const g = 64 / stride;
    x = std::min(x, low_ones(width));
    uint64_t total = 0;
    for (uint64_t k = 0; k < count; k += g) {
        unsigned const c = static_cast<unsigned>(std::min<uint64_t>(g, count - k));
        uint64_t const group = extract_bits(words, first_bit + k * stride, c * stride);
        unsigned const r = packed_group_rank(group, width, c, x);
        total += r;
        if (r < c) break;
    }
    return total;
}

// Same, for keys [first_key, first_key+count).
inline uint64_t packed_rank(std::span<const uint64_t> words, uint64_t first_key, uint64_t count,
                            unsigned width, uint64_t x) {
    return packed_rank_at_bit(words, first_key * (width + 1), count, width, x);
}

// Writes keys (each < 2^width) into a packed stream from bit first_bit on;
// the bits there must be zero.
inline void packed_write_at_bit(std::vector<uint64_t>& words, uint64_t first_bit, unsigned width,
                                std::span<const uint64_t> keys) {
    unsigned const stride = width + 1;
    uint64_t const end_bit = first_bit + keys.size() * stride;
    words.resize(std::max<std::size_t>(words.size(), (end_bit + 63) / 64), 0);
    uint64_t at = first_bit;
    for (uint64_t key : keys) {
        words[at >> 6] |= key << (at & 63);
        if ((at & 63) + width > 64) words[(at >> 6) + 1] |= key >> (64 - (at & 63));
        at += stride;
    }
}

// Appends keys to a packed stream that currently holds `existing` keys.
inline void packed_append(std::vector<uint64_t>& words, uint64_t existing, unsigned width,
                          std::span<const uint64_t> keys) {
    packed_write_at_bit(words, existing * (width + 1), width, keys);
}

// A self-contained packed key set.
class packed_key_set {
public:
    packed_key_set() = default;

    packed_key_set(std::span<const uint64_t> sorted_keys, unsigned width) : width_(width) {
        if (width == 0 || width > 63) throw validation_error("packed_key_set: width must be in [1,63]");
        for (std::size_t k = 0; k < sorted_keys.size(); ++k) {
            if (sorted_keys[k] > low_ones(width)) throw validation_error("packed_key_set: key too wide");
            if (k > 0 && sorted_keys[k] <= sorted_keys[k - 1]) {
                throw validation_error("packed_key_set: keys must be strictly increasing");
            }
        }
        count_ = sorted_keys.size();
        packed_append(words_, 0, width, sorted_keys);
    }

    // (rank, value) of the predecessor of x; (0, 0) when x precedes every key.
    std::pair<uint64_t, uint64_t> predecessor(uint64_t x) const {
        if (count_ == 0) return {0, 0};
        uint64_t const r = packed_rank(words_, 0, count_, width_, x);
        if (r == 0) return {0, 0};
        return {r, packed_key_at(words_, 0, width_, r - 1)};
    }

    uint64_t size() const { return count_; }
    unsigned width() const { return width_; }
    std::span<const uint64_t> words() const { return words_; }

private:
    std::vector<uint64_t> words_;
    unsigned width_ = 1;
    uint64_t count_ = 0;
};

}  // namespace succinct::broadword
