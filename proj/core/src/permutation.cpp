#include "succinct/permutation.hpp"

#include <algorithm>
#include <string>

#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

shortcut_permutation::shortcut_permutation(std::span<const uint64_t> values, uint64_t block_size,
                                           unsigned period)
    : block_size_(block_size), period_(period) {
    if (block_size == 0) throw validation_error("shortcut_permutation: block size must be positive");
    if (period == 0) throw validation_error("shortcut_permutation: period must be positive");
    uint64_t const n = values.size();
    unsigned const width = bits_for(block_size - 1);
    values_ = packed_sequence::from_values(values, width);

    std::vector<uint8_t> mark(n, 0);
    std::vector<uint64_t> back_of(n, 0);
    std::vector<uint8_t> seen(n, 0);
    std::vector<uint64_t> cycle;
    for (uint64_t base = 0; base < n; base += block_size) {
        uint64_t const len = std::min(block_size, n - base);
        for (uint64_t k = 0; k < len; ++k) {
            if (values[base + k] >= len) {
                throw validation_error("shortcut_permutation: value " + std::to_string(values[base + k]) +
                                       " outside its block");
            }
        }
        for (uint64_t start = 0; start < len; ++start) {
            if (seen[base + start]) continue;
            cycle.clear();
            uint64_t j = start;
            do {
                if (seen[base + j]) throw validation_error("shortcut_permutation: not a bijection");
                seen[base + j] = 1;
                cycle.push_back(j);
                j = values[base + j];
            } while (j != start);
            if (cycle.size() <= period) continue;
            uint64_t last = 0;
            for (uint64_t k = 0; k < cycle.size(); k += period) last = k;
            for (uint64_t k = 0; k < cycle.size(); k += period) {
                mark[base + cycle[k]] = 1;
                back_of[base + cycle[k]] = cycle[k == 0 ? last : k - period];
            }
        }
    }

    bit_vector_builder marks;
    std::vector<uint64_t> links;
    for (uint64_t g = 0; g < n; ++g) {
        marks.push_back(mark[g] != 0);
        if (mark[g]) links.push_back(back_of[g]);
    }
    marked_ = std::move(marks).build();
    back_ = packed_sequence::from_values(links, width);
}

uint64_t shortcut_permutation::inverse(uint64_t g, unsigned* steps) const {
    uint64_t const base = g - g % block_size_;
    uint64_t const target = g - base;
    uint64_t j = target;
    bool jumped = false;
    unsigned count = 0;
    while (true) {
        if (!jumped && marked_[base + j + 1]) {
            j = back_.get(marked_.rank1(base + j));
            jumped = true;
        }
        uint64_t const next = values_.get(base + j);
        ++count;
        if (next == target) break;
        if (count > block_size_) throw contract_violation("shortcut_permutation: cycle walk did not close");
        j = next;
    }
    if (steps != nullptr) *steps = count;
    return j;
}

uint64_t shortcut_permutation::size_in_bits() const {
    return values_.bits() + marked_.payload_bits() + marked_.directory_bits() + back_.bits();
}

void shortcut_permutation::serialize(binary_writer& out) const {
    out.put_words(std::vector<uint64_t>{block_size_, period_});
    values_.serialize(out);
    marked_.serialize(out);
    back_.serialize(out);
}

shortcut_permutation shortcut_permutation::deserialize(binary_reader& in) {
    auto h = in.get_words();
    if (h.size() != 2 || h[0] == 0 || h[1] == 0 || h[1] > 1u << 20) {
        throw format_error("shortcut_permutation: bad header");
    }
    shortcut_permutation p;
    p.block_size_ = h[0];
    p.period_ = static_cast<unsigned>(h[1]);
    p.values_ = packed_sequence::deserialize(in);
    p.marked_ = bit_vector::deserialize(in);
    p.back_ = packed_sequence::deserialize(in);
    if (p.marked_.size() != p.values_.size() || p.marked_.ones() != p.back_.size() ||
        p.values_.width() != bits_for(p.block_size_ - 1) || p.back_.width() != p.values_.width()) {
        throw format_error("shortcut_permutation: inconsistent component sizes");
    }
    return p;
}

}  // namespace succinct
