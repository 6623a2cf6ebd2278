#include "succinct/serialize.hpp"

#include <algorithm>

namespace succinct {

void binary_writer::put_u64(uint64_t v) {
    uint8_t buf[8];
    std::memcpy(buf, &v, 8);
    bytes_.insert(bytes_.end(), buf, buf + 8);
}

void binary_writer::put_bytes(std::span<const uint8_t> data) {
    bytes_.insert(bytes_.end(), data.begin(), data.end());
}

void binary_writer::put_words(std::span<const uint64_t> words) {
    put_u64(words.size());
    if (!words.empty()) {
        auto const* p = reinterpret_cast<uint8_t const*>(words.data());
        bytes_.insert(bytes_.end(), p, p + words.size() * 8);
    }
    uint64_t const bits = 64 * words.size();
    payload_bits_ += bits;

    std::string name = "other";
    if (!scope_.empty()) {
        name = scope_.front();
        for (std::size_t k = 1; k < scope_.size(); ++k) name += "/" + scope_[k];
    }
    auto it = std::find_if(components_.begin(), components_.end(),
                           [&](space_component const& c) { return c.name == name; });
    if (it == components_.end()) {
        components_.push_back({name, bits});
    } else {
        it->bits += bits;
    }
}

void binary_writer::push_component(std::string const& name) { scope_.push_back(name); }

void binary_writer::pop_component() {
    if (!scope_.empty()) scope_.pop_back();
}

uint8_t binary_reader::get_u8() {
    if (remaining() < 1) throw format_error("unexpected end of data");
    return data_[pos_++];
}

uint64_t binary_reader::get_u64() {
    if (remaining() < 8) throw format_error("unexpected end of data");
    uint64_t v;
    std::memcpy(&v, data_.data() + pos_, 8);
    pos_ += 8;
    return v;
}

std::span<const uint8_t> binary_reader::get_bytes(std::size_t count) {
    if (remaining() < count) throw format_error("unexpected end of data");
    auto out = data_.subspan(pos_, count);
    pos_ += count;
    return out;
}

std::vector<uint64_t> binary_reader::get_words() {
    uint64_t const count = get_u64();
    if (count > remaining() / 8) throw format_error("array length exceeds remaining data");
    std::vector<uint64_t> words(count);
    if (count != 0) std::memcpy(words.data(), data_.data() + pos_, count * 8);
    pos_ += count * 8;
    return words;
}

uint64_t walk_payload_bits(std::span<const uint8_t> arrays) {
    binary_reader in(arrays);
    uint64_t bits = 0;
    while (!in.at_end()) {
        uint64_t const count = in.get_u64();
        if (count > in.remaining() / 8) throw format_error("array length exceeds remaining data");
        in.get_bytes(count * 8);
        bits += 64 * count;
    }
    return bits;
}

}  // namespace succinct
