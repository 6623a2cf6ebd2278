#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace succinct {

class binary_writer;
class binary_reader;

/*
    Plain bitvector with constant-time rank and sampled select.

    Bit i (1-based) lives in word (i-1)/64 at offset (i-1)%64. Bits past the
    end of the last word are zero.

    Rank directory: one absolute 64-bit counter per 2^16-bit superblock plus
    one 16-bit counter per 512-bit block, relative to its superblock. Both
    arrays carry a trailing sentinel so rank(n_bits) needs no special case.

    Select directory: the position of every 8192-th one (and zero). A query
    starts at its sample, binary-searches the rank directory up to the next
    sample, scans at most one block, and finishes with an in-word select.
*/
class bit_vector {
public:
    static constexpr uint64_t block_bits = 512;
    static constexpr uint64_t superblock_bits = uint64_t{1} << 16;
    static constexpr uint64_t select_sample = 8192;

    bit_vector() { build_directories(); }
    bit_vector(std::vector<uint64_t> words, uint64_t n_bits);

    // "10111010" -> bits 1..8; for tests and examples.
    static bit_vector from_string(std::string_view bits);

    uint64_t size() const { return n_bits_; }
    uint64_t ones() const { return ones_; }
    uint64_t zeros() const { return n_bits_ - ones_; }

    // 1-based.
    bool operator[](uint64_t i) const { return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1; }

    // Number of ones (zeros) among bits 1..i; 0 <= i <= size().
    uint64_t rank1(uint64_t i) const;
    uint64_t rank0(uint64_t i) const { return i - rank1(i); }

    // Position of the j-th one (zero); 1 <= j <= ones() (zeros()).
    uint64_t select1(uint64_t j) const;
    uint64_t select0(uint64_t j) const;
    uint64_t select(bool bit, uint64_t j) const { return bit ? select1(j) : select0(j); }

    std::span<const uint64_t> words() const { return words_; }

    uint64_t payload_bits() const { return 64 * words_.size(); }
    uint64_t directory_bits() const;

    void serialize(binary_writer& out) const;
    static bit_vector deserialize(binary_reader& in);

    friend bool operator==(bit_vector const&, bit_vector const&) = default;

private:
    void build_directories();
    uint64_t rank1_at_block(uint64_t block) const {
        return super_[block >> 7] + blocks_[block];
    }
    uint64_t select_impl(bool bit, uint64_t j) const;

    std::vector<uint64_t> words_;
    uint64_t n_bits_ = 0;
    uint64_t ones_ = 0;
    std::vector<uint64_t> super_;
    std::vector<uint16_t> blocks_;
    std::vector<uint64_t> samples1_;  // 0-based position of the (k*8192+1)-th one
    std::vector<uint64_t> samples0_;
};

// Incremental construction.
class bit_vector_builder {
public:
    void push_back(bool bit);
    void append(bool bit, uint64_t count);
    uint64_t size() const { return n_bits_; }
    bit_vector build() &&;

private:
    std::vector<uint64_t> words_;
    uint64_t n_bits_ = 0;
};

// 1^{c_1} 0 1^{c_2} 0 ... 1^{c_k} 0
bit_vector unary_concat(std::span<const uint64_t> counts);

}  // namespace succinct
