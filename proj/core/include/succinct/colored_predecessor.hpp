#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/wavelet.hpp"

namespace succinct {

/*
    Colored predecessor search solved with rank on a string.

    The universe [1, n*sigma] is a sigma x n grid: x = (r-1)*n + c. Columns
    are expanded to one column per point (points of a column ordered by
    row) and empty columns dropped; the string S lists the row of each
    expanded column. R holds the row counts and C the column counts in
    unary. The predecessor rank of x = (r, c) is

        count(r-1) + rank_r(S, col(c)),

    count(r) = select0(R, r) - r, col(c) = select0(C, c) - c, and its color
    is L[rank].
*/
class colored_predecessor {
public:
    struct answer {
        uint64_t rank = 0;  // 0 when no element is <= x
        bool color = false;
        friend bool operator==(answer const&, answer const&) = default;
    };

    colored_predecessor(std::span<const uint64_t> sorted_elements, std::vector<bool> const& colors,
                        uint64_t n, uint64_t sigma);

    answer query(uint64_t x) const;

    uint64_t universe() const { return n_ * sigma_; }
    bit_vector const& colors() const { return l_; }
    bit_vector const& rows() const { return r_; }
    bit_vector const& columns() const { return c_; }
    wavelet_sequence const& string() const { return s_; }

private:
    uint64_t n_;
    uint64_t sigma_;
    bit_vector l_;
    bit_vector r_;
    bit_vector c_;
    wavelet_sequence s_;
};

}  // namespace succinct
