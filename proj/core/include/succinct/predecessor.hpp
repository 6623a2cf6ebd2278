#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/packed_sequence.hpp"

namespace succinct {

class binary_writer;
class binary_reader;

struct predecessor_params {
    // Nodes whose key length is at most this are packed leaves.
    unsigned base_width = 16;
    // Largest packed leaf; a base-width node with more keys is split once more.
    uint64_t leaf_capacity = 64;
};

// Predecessor answer: value is the largest key <= x and rank its 1-based
// position among the keys. {0, 0} means no key is <= x.
struct pred_result {
    uint64_t value = 0;
    uint64_t rank = 0;
    friend bool operator==(pred_result const&, pred_result const&) = default;
};

/*
    Static predecessor structure over distinct keys in [1, u].

    Top level: the keys are split by their top floor(lg n) bits into
    n' = 2^floor(lg n) partitions. A bitvector of partition sizes
    (1^{|S_p|} 0 per partition) turns a partition number into the count of
    smaller keys. The low bits of every key are also kept in one packed
    stream in key order, so a partition small enough to be a leaf needs
    nothing else, and the key of any rank can be read back directly. Larger
    partitions are marked in a bitmap whose rank locates their root node.

    Each partition is a van Emde Boas style recursion on key length ell,
    where ell is the smallest 5 * 2^i covering the partition's low bits
    (5 = lg w - 1 at w = 64). An internal node splits keys into a high and a
    low half and stores

      * a hash dictionary from each distinct high half p to the tuple
        (m, r_m, M, r_M) of the min/max of that bucket and their node-local
        ranks,
      * a summary node over the distinct high halves,
      * a child node over the low halves of each bucket minus its min and
        max; child presence is a bit per dictionary slot plus rank into a
        dense child array.

    Leaves are packed key sets queried with the separator-bit subtraction
    kernel. A node becomes a leaf when ell <= base_width (splitting once
    more if it holds more than leaf_capacity keys) or when its keys fit in
    four words. Leaves share one bit stream; nodes and dictionary slots are
    stored column by column, each column as wide as its largest value.
*/
class predecessor_set {
public:
    predecessor_set() = default;
    predecessor_set(std::span<const uint64_t> sorted_keys, uint64_t universe,
                    predecessor_params params = {});

    // 1 <= x <= universe().
    pred_result query(uint64_t x) const;

    uint64_t size() const { return n_; }
    uint64_t universe() const { return universe_; }
    predecessor_params const& params() const { return params_; }

    uint64_t node_count() const { return nodes_[0].size(); }
    uint64_t size_in_bits() const;

    void serialize(binary_writer& out) const;
    static predecessor_set deserialize(binary_reader& in);

private:
    struct node {
        uint64_t width;    // key length ell
        uint64_t leaf;     // 1 for packed leaves
        uint64_t begin;    // leaf: first bit in leaf_bits_; internal: first slot
        uint64_t count;    // leaf: number of keys; internal: slot count (power of two)
        uint64_t summary;  // internal: node over the distinct high halves
    };
    struct slot {
        uint64_t key;  // high half + 1; 0 marks an empty slot
        uint64_t min;  // full keys here; the low half in storage
        uint64_t min_rank;
        uint64_t max;
        uint64_t max_rank;
    };
    struct builder;

    node node_at(uint64_t index) const;
    slot slot_at(uint64_t index, unsigned half) const;  // min and max are stored as low halves
    bool leaf_shape(uint64_t count, unsigned width) const;
    unsigned root_width() const;
    uint64_t low_key(uint64_t rank) const;
    pred_result query_node(uint64_t index, uint64_t x) const;
    uint64_t find(node const& nd, uint64_t high) const;  // slot index, or nd.begin + nd.count

    predecessor_params params_;
    uint64_t universe_ = 0;
    uint64_t n_ = 0;
    unsigned key_bits_ = 0;   // bit width of u - 1
    unsigned part_bits_ = 0;  // lg n'
    unsigned low_bits_ = 0;   // key_bits_ - part_bits_

    bit_vector sizes_;                // 1^{|S_p|} 0 for every partition
    bit_vector internal_;             // partitions whose root is an internal node
    std::vector<uint64_t> low_keys_;  // low bits of every key, packed with separators
    std::vector<packed_sequence> nodes_ = std::vector<packed_sequence>(5);  // columns of node
    std::vector<packed_sequence> slots_ = std::vector<packed_sequence>(5);  // columns of slot
    bit_vector has_child_;
    packed_sequence children_;
    std::vector<uint64_t> leaf_bits_;
};

}  // namespace succinct
