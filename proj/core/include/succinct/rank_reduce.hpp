#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/packed_sequence.hpp"
#include "succinct/predecessor.hpp"
#include "succinct/sequence.hpp"

namespace succinct {

class binary_writer;
class binary_reader;

/*
    Rank through predecessor search.

    Each S[c] becomes the point (S[c]-1)*n + c of [1, n*sigma]; the points
    in increasing order list row 1 left to right, then row 2, and so on.
    rank_a(i) is the predecessor of (a-1)*n + i: if that point lies in row
    a, its precomputed rank answers the query, otherwise the answer is 0.

    The string is cut into chunks of sigma positions. Point p keeps the pair
    (row, rank within its chunk) in 2*ceil(lg sigma) bits; rank up to the
    chunk start comes from the bitmap A, which lists for every row and chunk
    the occurrences in unary: 1^{count} 0.

    Alphabets larger than n are first mapped to the symbols that occur.
*/
class rank_reduce_sequence final : public sequence_index {
public:
    rank_reduce_sequence() = default;
    explicit rank_reduce_sequence(sequence const& seq, predecessor_params pred = {});

    uint64_t size() const override { return n_; }
    uint64_t sigma() const override { return sigma_; }
    uint64_t access(uint64_t i) const override;
    uint64_t rank(uint64_t a, uint64_t i) const override;
    uint64_t select(uint64_t a, uint64_t j) const override;
    backend_tag tag() const override { return backend_tag::rankreduce; }
    std::string params() const override;
    void serialize(binary_writer& out) const override;
    static rank_reduce_sequence deserialize(binary_reader& in);

    // Effective alphabet after remapping, and the chunk count.
    uint64_t rows() const { return rows_; }
    uint64_t chunks() const { return chunks_; }
    predecessor_set const& points() const { return points_; }
    bit_vector const& chunk_bitmap() const { return a_; }

    // Stored pair of the p-th point: (row, rank within its chunk).
    std::pair<uint64_t, uint64_t> pair(uint64_t p) const;
    // The same pair with the rank counted from the start of the row.
    std::pair<uint64_t, uint64_t> full_pair(uint64_t p) const;

private:
    // Dense row of symbol a, or 0 when a does not occur.
    uint64_t row_of(uint64_t a) const;
    // Occurrences of row r in chunks [0, k).
    uint64_t chunk_prefix(uint64_t r, uint64_t k) const;
    uint64_t zeros_before(uint64_t z) const { return z == 0 ? 0 : a_.select0(z); }

    uint64_t n_ = 0;
    uint64_t sigma_ = 0;
    uint64_t rows_ = 0;    // alphabet used for points and chunking
    uint64_t chunks_ = 0;  // ceil(n / rows)
    std::vector<uint64_t> alphabet_;  // occurring symbols when remapped, else empty

    predecessor_set points_;
    packed_sequence pairs_;   // (row-1) << b | (chunk rank-1)
    bit_vector a_;
    packed_sequence columns_; // column within the chunk of every point
    packed_sequence plain_;   // S[i]-1
};

}  // namespace succinct
