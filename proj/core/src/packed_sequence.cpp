#include "succinct/packed_sequence.hpp"

#include <bit>

#include "succinct/broadword.hpp"
#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

unsigned bits_for(uint64_t max_value) {
    return max_value == 0 ? 1u : static_cast<unsigned>(std::bit_width(max_value));
}

packed_sequence::packed_sequence(uint64_t size, unsigned width) : size_(size), width_(width) {
    if (width == 0 || width > 64) throw validation_error("packed_sequence: width must be in [1,64]");
    words_.assign((size * width + 63) / 64, 0);
}

packed_sequence packed_sequence::from_values(std::span<const uint64_t> values, unsigned width) {
    packed_sequence out(values.size(), width);
    for (uint64_t k = 0; k < values.size(); ++k) out.set(k, values[k]);
    return out;
}

uint64_t packed_sequence::get(uint64_t k) const {
    return broadword::extract_bits(words_, k * width_, width_);
}

void packed_sequence::set(uint64_t k, uint64_t value) {
    uint64_t const mask = broadword::low_ones(width_);
    if ((value & ~mask) != 0) throw validation_error("packed_sequence: value wider than field");
    uint64_t const at = k * width_;
    uint64_t const w = at >> 6;
    unsigned const shift = static_cast<unsigned>(at & 63);
    words_[w] = (words_[w] & ~(mask << shift)) | (value << shift);
    if (shift != 0 && shift + width_ > 64) {
        unsigned const spill = 64 - shift;
        words_[w + 1] = (words_[w + 1] & ~(mask >> spill)) | (value >> spill);
    }
}

void packed_sequence::serialize(binary_writer& out) const {
    out.put_words(std::vector<uint64_t>{size_, width_});
    out.put_words(words_);
}

packed_sequence packed_sequence::deserialize(binary_reader& in) {
    auto header = in.get_words();
    if (header.size() != 2 || header[1] == 0 || header[1] > 64) {
        throw format_error("packed_sequence: bad header");
    }
    packed_sequence p;
    p.size_ = header[0];
    p.width_ = static_cast<unsigned>(header[1]);
    p.words_ = in.get_words();
    if (p.size_ > p.words_.size() * 64 / p.width_ ||
        p.words_.size() != (p.size_ * p.width_ + 63) / 64) {
        throw format_error("packed_sequence: size does not match payload");
    }
    return p;
}

}  // namespace succinct
