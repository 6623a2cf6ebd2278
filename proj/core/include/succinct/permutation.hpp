#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/packed_sequence.hpp"

namespace succinct {

class binary_writer;
class binary_reader;

/*
    A sequence of permutations stored as one array: positions are cut into
    blocks of block_size (the last may be shorter) and each block holds a
    permutation of [0, len) in local coordinates.

    The stored direction P is read directly. The other direction P^{-1}
    walks the cycle of P: on every cycle longer than t, each t-th element
    (in cycle order) is marked and keeps a back-link to the previous marked
    element. Walking forward from i to the first marked element, jumping
    back and walking forward again reaches P^{-1}(i) after at most t
    evaluations of P.
*/
class shortcut_permutation {
public:
    shortcut_permutation() = default;
    // values[g] is the local image of global position g.
    shortcut_permutation(std::span<const uint64_t> values, uint64_t block_size, unsigned period);

    uint64_t size() const { return values_.size(); }
    uint64_t block_size() const { return block_size_; }
    unsigned period() const { return period_; }

    // P(g) and P^{-1}(g), both as local values; g is 0-based and global.
    uint64_t apply(uint64_t g) const { return values_.get(g); }
    uint64_t inverse(uint64_t g, unsigned* steps = nullptr) const;

    uint64_t size_in_bits() const;
    void serialize(binary_writer& out) const;
    static shortcut_permutation deserialize(binary_reader& in);

private:
    packed_sequence values_;
    uint64_t block_size_ = 1;
    unsigned period_ = 1;
    bit_vector marked_;
    packed_sequence back_;  // local value of the previous marked element
};

}  // namespace succinct
