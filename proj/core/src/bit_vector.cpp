#include "succinct/bit_vector.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "succinct/broadword.hpp"
#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

bit_vector::bit_vector(std::vector<uint64_t> words, uint64_t n_bits)
    : words_(std::move(words)), n_bits_(n_bits) {
    words_.resize((n_bits_ + 63) / 64, 0);
    if ((n_bits_ & 63) != 0) words_.back() &= broadword::low_ones(n_bits_ & 63);
    build_directories();
}

bit_vector bit_vector::from_string(std::string_view bits) {
    bit_vector_builder b;
    for (char c : bits) {
        if (c == '0' || c == '1') {
            b.push_back(c == '1');
        } else if (c != ' ' && c != '_') {
            throw validation_error("bit_vector::from_string: unexpected character");
        }
    }
    return std::move(b).build();
}

void bit_vector::build_directories() {
    uint64_t const n_blocks = n_bits_ / block_bits + 1;
    uint64_t const n_super = n_bits_ / superblock_bits + 1;
    super_.assign(n_super, 0);
    blocks_.assign(n_blocks, 0);
    samples1_.clear();
    samples0_.clear();

    uint64_t total = 0;
    for (uint64_t b = 0; b < n_blocks; ++b) {
        if ((b & 127) == 0) super_[b >> 7] = total;
        blocks_[b] = static_cast<uint16_t>(total - super_[b >> 7]);
        for (uint64_t w = b * 8; w < std::min<uint64_t>(b * 8 + 8, words_.size()); ++w) {
            total += static_cast<uint64_t>(std::popcount(words_[w]));
        }
    }
    ones_ = total;

    uint64_t seen1 = 0;
    uint64_t seen0 = 0;
    for (uint64_t w = 0; w < words_.size(); ++w) {
        uint64_t const valid = std::min<uint64_t>(64, n_bits_ - w * 64);
        uint64_t const word = words_[w];
        uint64_t const inv = ~word & broadword::low_ones(static_cast<unsigned>(valid));
        auto const c1 = static_cast<uint64_t>(std::popcount(word));
        auto const c0 = static_cast<uint64_t>(std::popcount(inv));
        // next sample targets: occurrence number k*8192+1
        while (samples1_.size() * select_sample + 1 <= seen1 + c1) {
            uint64_t const k = samples1_.size() * select_sample - seen1;
            samples1_.push_back(w * 64 + broadword::select_in_word(word, static_cast<unsigned>(k)));
        }
        while (samples0_.size() * select_sample + 1 <= seen0 + c0) {
            uint64_t const k = samples0_.size() * select_sample - seen0;
            samples0_.push_back(w * 64 + broadword::select_in_word(inv, static_cast<unsigned>(k)));
        }
        seen1 += c1;
        seen0 += c0;
    }
}

uint64_t bit_vector::rank1(uint64_t i) const {
    if (i > n_bits_) {
        throw range_error("bit_vector::rank: position " + std::to_string(i) + " exceeds length " +
                          std::to_string(n_bits_));
    }
    uint64_t const b = i / block_bits;
    uint64_t r = rank1_at_block(b);
    uint64_t const last = i >> 6;
    for (uint64_t w = b * 8; w < last; ++w) r += static_cast<uint64_t>(std::popcount(words_[w]));
    if ((i & 63) != 0) r += static_cast<uint64_t>(std::popcount(words_[last] & broadword::low_ones(i & 63)));
    return r;
}

uint64_t bit_vector::select1(uint64_t j) const { return select_impl(true, j); }
uint64_t bit_vector::select0(uint64_t j) const { return select_impl(false, j); }

uint64_t bit_vector::select_impl(bool bit, uint64_t j) const {
    uint64_t const total = bit ? ones_ : n_bits_ - ones_;
    if (j == 0 || j > total) {
        throw not_found_error("bit_vector::select: occurrence " + std::to_string(j) + " of " +
                              (bit ? "1" : "0") + " out of range (have " + std::to_string(total) +
                              ")");
    }
    auto const& samples = bit ? samples1_ : samples0_;
    auto rank_at = [&](uint64_t block) {
        uint64_t const r1 = rank1_at_block(block);
        return bit ? r1 : block * block_bits - r1;
    };

    uint64_t const s = (j - 1) / select_sample;
    uint64_t lo = samples[s] / block_bits;
    uint64_t hi = s + 1 < samples.size() ? samples[s + 1] / block_bits : blocks_.size() - 1;
    // last block in [lo, hi] whose preceding count is < j
    while (lo < hi) {
        uint64_t const mid = lo + (hi - lo + 1) / 2;
        if (rank_at(mid) < j) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    uint64_t remaining = j - rank_at(lo);
    for (uint64_t w = lo * 8;; ++w) {
        uint64_t const word = bit ? words_[w] : ~words_[w];
        auto const c = static_cast<uint64_t>(std::popcount(word));
        if (c >= remaining) {
            return w * 64 + broadword::select_in_word(word, static_cast<unsigned>(remaining - 1)) + 1;
        }
        remaining -= c;
    }
}

uint64_t bit_vector::directory_bits() const {
    return 64 * (super_.size() + samples1_.size() + samples0_.size()) + 16 * blocks_.size();
}

void bit_vector::serialize(binary_writer& out) const {
    out.put_words(std::vector<uint64_t>{n_bits_, ones_});
    out.put_words(words_);
    out.put_words(super_);
    out.put_array(blocks_);
    out.put_words(samples1_);
    out.put_words(samples0_);
}

bit_vector bit_vector::deserialize(binary_reader& in) {
    auto header = in.get_words();
    if (header.size() != 2) throw format_error("bit_vector: bad header");
    bit_vector v;
    v.n_bits_ = header[0];
    v.ones_ = header[1];
    v.words_ = in.get_words();
    v.super_ = in.get_words();
    v.blocks_ = in.get_array<uint16_t>();
    v.samples1_ = in.get_words();
    v.samples0_ = in.get_words();
    uint64_t const n = v.n_bits_;
    if (v.words_.size() != (n + 63) / 64 || v.super_.size() != n / superblock_bits + 1 ||
        v.blocks_.size() != n / block_bits + 1 || v.ones_ > n ||
        v.samples1_.size() != (v.ones_ + select_sample - 1) / select_sample ||
        v.samples0_.size() != (n - v.ones_ + select_sample - 1) / select_sample) {
        throw format_error("bit_vector: inconsistent directory sizes");
    }
    for (uint64_t p : v.samples1_) {
        if (p >= n) throw format_error("bit_vector: select sample out of range");
    }
    for (uint64_t p : v.samples0_) {
        if (p >= n) throw format_error("bit_vector: select sample out of range");
    }
    return v;
}

void bit_vector_builder::push_back(bool bit) {
    if ((n_bits_ & 63) == 0) words_.push_back(0);
    if (bit) words_.back() |= uint64_t{1} << (n_bits_ & 63);
    ++n_bits_;
}

void bit_vector_builder::append(bool bit, uint64_t count) {
    while (count > 0 && (n_bits_ & 63) != 0) {
        push_back(bit);
        --count;
    }
    while (count >= 64) {
        words_.push_back(bit ? ~uint64_t{0} : 0);
        n_bits_ += 64;
        count -= 64;
    }
    while (count-- > 0) push_back(bit);
}

bit_vector bit_vector_builder::build() && { return bit_vector(std::move(words_), n_bits_); }

bit_vector unary_concat(std::span<const uint64_t> counts) {
    bit_vector_builder b;
    for (uint64_t c : counts) {
        b.append(true, c);
        b.push_back(false);
    }
    return std::move(b).build();
}

}  // namespace succinct
