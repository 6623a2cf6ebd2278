#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace succinct {

class binary_writer;
class binary_reader;

// ceil(lg x) for x >= 1, with ceil_log2(1) == 0.
inline unsigned ceil_log2(uint64_t x) {
    unsigned w = 0;
    while (w < 64 && (uint64_t{1} << w) < x) ++w;
    return w;
}

// Bits needed to store values in [0, max_value], at least 1.
unsigned bits_for(uint64_t max_value);

/*
    n fixed-width fields concatenated into 64-bit words, field k (0-based) at
    bits [k*width, (k+1)*width), least-significant first. Fields may straddle
    a word boundary. Indexing is 0-based: this is storage, not a sequence in
    the query sense.
*/
class packed_sequence {
public:
    packed_sequence() = default;
    packed_sequence(uint64_t size, unsigned width);

    static packed_sequence from_values(std::span<const uint64_t> values, unsigned width);

    uint64_t size() const { return size_; }
    unsigned width() const { return width_; }

    uint64_t get(uint64_t k) const;
    void set(uint64_t k, uint64_t value);

    std::span<const uint64_t> words() const { return words_; }
    uint64_t bits() const { return 64 * words_.size(); }

    void serialize(binary_writer& out) const;
    static packed_sequence deserialize(binary_reader& in);

    friend bool operator==(packed_sequence const&, packed_sequence const&) = default;

private:
    std::vector<uint64_t> words_;
    uint64_t size_ = 0;
    unsigned width_ = 1;
};

}  // namespace succinct
