#include "succinct/colored_predecessor.hpp"

#include <string>
#include <vector>

#include "succinct/errors.hpp"

namespace succinct {

colored_predecessor::colored_predecessor(std::span<const uint64_t> sorted_elements,
                                         std::vector<bool> const& colors, uint64_t n, uint64_t sigma)
    : n_(n), sigma_(sigma) {
    if (n == 0 || sigma == 0) throw validation_error("colored_predecessor: n and sigma must be positive");
    if (colors.size() != sorted_elements.size()) {
        throw validation_error("colored_predecessor: one color per element required");
    }
    std::vector<uint64_t> row_count(sigma, 0);
    std::vector<uint64_t> col_count(n, 0);
    std::vector<std::vector<uint64_t>> column_rows(n);
    for (std::size_t k = 0; k < sorted_elements.size(); ++k) {
        uint64_t const e = sorted_elements[k];
        if (e < 1 || e > n * sigma) {
            throw range_error("colored_predecessor: element " + std::to_string(e) + " outside [1," +
                              std::to_string(n * sigma) + "]");
        }
        if (k > 0 && e <= sorted_elements[k - 1]) {
            throw validation_error("colored_predecessor: elements must be strictly increasing");
        }
        uint64_t const r = (e - 1) / n;
        uint64_t const c = (e - 1) % n;
        ++row_count[r];
        ++col_count[c];
        // elements arrive in row order, so each column's rows stay sorted
        column_rows[c].push_back(r + 1);
    }

    bit_vector_builder l;
    for (bool b : colors) l.push_back(b);
    l_ = std::move(l).build();
    r_ = unary_concat(row_count);
    c_ = unary_concat(col_count);

    std::vector<uint64_t> mapped;
    mapped.reserve(sorted_elements.size());
    for (auto const& rows : column_rows) mapped.insert(mapped.end(), rows.begin(), rows.end());
    s_ = wavelet_sequence(sequence(std::move(mapped), sigma), {});
}

colored_predecessor::answer colored_predecessor::query(uint64_t x) const {
    if (x < 1 || x > n_ * sigma_) {
        throw range_error("colored_predecessor: key " + std::to_string(x) + " outside [1," +
                          std::to_string(n_ * sigma_) + "]");
    }
    uint64_t const r = (x - 1) / n_ + 1;
    uint64_t const c = (x - 1) % n_ + 1;
    uint64_t const count = r == 1 ? 0 : r_.select0(r - 1) - (r - 1);
    uint64_t const col = c_.select0(c) - c;
    uint64_t const p = count + s_.rank(r, col);
    if (p == 0) return {};
    return {p, l_[p]};
}

}  // namespace succinct
