#pragma once

#include <cstdint>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/sequence.hpp"

namespace succinct {

class binary_writer;
class binary_reader;

/*
    Binary wavelet tree shaped by a Huffman code of the symbol frequencies.
    Symbol a is written into one bitvector per bit of its code, so the
    bitvector payload is sum_a n_a |code(a)| < n(H_0 + 1) bits.

    Codes are canonical: ordered by (length, symbol), which makes the tree a
    function of the code lengths alone. Internal nodes are numbered in the
    order their paths first appear in that assignment; node 0 is the root.
    With a single occurring symbol the tree has no nodes.
*/
class huffman_sequence {
public:
    huffman_sequence() = default;
    explicit huffman_sequence(sequence const& seq);

    uint64_t size() const { return n_; }
    uint64_t sigma() const { return sigma_; }
    uint64_t access(uint64_t i) const;
    uint64_t rank(uint64_t a, uint64_t i) const;
    uint64_t select(uint64_t a, uint64_t j) const;

    // Code length of a; 0 for absent symbols and for the only symbol of a
    // single-symbol text.
    unsigned code_length(uint64_t a) const { return lengths_[a - 1]; }
    uint64_t node_count() const { return bits_.size(); }

    void serialize(binary_writer& out) const;
    static huffman_sequence deserialize(binary_reader& in);

private:
    // Builds codes_ and the node topology from lengths_.
    void build_tree();
    bool single() const { return bits_.empty(); }
    int bit_of(uint64_t a, unsigned depth) const {
        return static_cast<int>((codes_[a - 1] >> (lengths_[a - 1] - 1 - depth)) & 1);
    }

    uint64_t n_ = 0;
    uint64_t sigma_ = 0;
    uint64_t only_ = 0;  // the symbol, when only one occurs
    std::vector<uint8_t> lengths_;
    std::vector<uint64_t> codes_;
    std::vector<int64_t> child_;  // [2*node + bit]: node index, or -symbol for a leaf
    std::vector<bit_vector> bits_;
};

}  // namespace succinct
