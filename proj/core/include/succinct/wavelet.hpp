#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/packed_sequence.hpp"
#include "succinct/sequence.hpp"

namespace succinct {

class binary_writer;
class binary_reader;

struct wavelet_params {
    unsigned ell = 4;    // digit width in bits, 2..8
    uint64_t block = 0;  // rank block in positions; 0 picks the default for ell
};

/*
    Multiary wavelet tree stored levelwise.

    Symbols are written as B = ceil(lg sigma) bit integers (S[i]-1) and cut
    into h = ceil(B/ell) digits, the first possibly narrower. Level l holds
    one digit per position; positions are ordered by the prefix of the
    previous l-1 digits (stable), so every node of the tree is a contiguous
    interval of its level. Node intervals are stored as explicit offsets.

    Per level and digit value there is a rank directory (64-bit counters per
    superblock, 16-bit counters per block, block tails scanned with the
    field kernels) and a select directory (every 4096-th occurrence; dense
    superblocks further sampled every 64 occurrences, sparse ones storing
    all positions; dense 64-blocks finished with a field scan).
*/
class wavelet_sequence final : public sequence_index {
public:
    static constexpr uint64_t select_super = 4096;
    static constexpr uint64_t select_block = 64;
    static constexpr uint64_t sparse_super_span = uint64_t{1} << 18;
    static constexpr uint64_t sparse_block_span = 4096;
    static constexpr unsigned relative_bits = 18;

    static uint64_t default_block(unsigned ell);

    wavelet_sequence() = default;
    explicit wavelet_sequence(sequence const& seq, wavelet_params params = {});

    uint64_t size() const override { return n_; }
    uint64_t sigma() const override { return sigma_; }
    uint64_t access(uint64_t i) const override;
    uint64_t rank(uint64_t a, uint64_t i) const override;
    uint64_t select(uint64_t a, uint64_t j) const override;
    backend_tag tag() const override { return backend_tag::wavelet; }
    std::string params() const override;
    void serialize(binary_writer& out) const override;
    static wavelet_sequence deserialize(binary_reader& in);

    unsigned ell() const { return ell_; }
    uint64_t block() const { return block_; }
    unsigned height() const { return static_cast<unsigned>(levels_.size()); }
    unsigned level_width(unsigned l) const { return levels_[l - 1].digits.width(); }

    // Digit at 0-based position k of level l (1-based).
    uint64_t digit(unsigned l, uint64_t k) const { return levels_[l - 1].digits.get(k); }
    // Occurrences of digit d among the first j positions of level l.
    uint64_t digit_rank(unsigned l, uint64_t d, uint64_t j) const;
    // 0-based position of the j-th occurrence of digit d in level l.
    uint64_t digit_select(unsigned l, uint64_t d, uint64_t j) const;
    // [begin, end) of node `prefix` at level l.
    uint64_t node_begin(unsigned l, uint64_t prefix) const { return levels_[l - 1].starts.get(prefix); }
    uint64_t node_end(unsigned l, uint64_t prefix) const { return levels_[l - 1].starts.get(prefix + 1); }

    uint64_t level_bits() const;
    uint64_t rank_directory_bits() const;
    uint64_t select_directory_bits() const;
    uint64_t node_bits() const;

private:
    struct level {
        packed_sequence digits;
        packed_sequence starts;  // node offsets, 2^{prefix bits} + 1 entries
        unsigned shift = 0;      // bits below this level's digit

        // rank directory, indexed [superblock * r + d] and [block * r + d]
        std::vector<uint64_t> super;
        std::vector<uint16_t> blocks;

        // select directory; superblocks of digit d are super_begin[d] ..
        std::vector<uint64_t> super_begin;
        packed_sequence super_pos;           // first occurrence of each superblock
        std::vector<uint64_t> super_ref;     // dense: first block entry; sparse: top bit | offset
        packed_sequence sparse_super_pos;    // every position of sparse superblocks
        packed_sequence block_start;         // block start relative to its superblock
        bit_vector block_sparse;             // one bit per block entry
        packed_sequence sparse_block_pos;    // occurrences 2..64 of sparse blocks, relative
    };

    void build_rank_directory(level& lv) const;
    void build_select_directory(level& lv) const;
    uint64_t superblock_size() const { return block_ * (65536 / block_); }

    uint64_t n_ = 0;
    uint64_t sigma_ = 0;
    unsigned ell_ = 4;
    uint64_t block_ = 512;
    unsigned total_bits_ = 1;
    std::vector<level> levels_;
};

}  // namespace succinct
