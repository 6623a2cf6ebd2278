#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "succinct/errors.hpp"
#include "succinct/sequence.hpp"

namespace succinct {

static_assert(std::endian::native == std::endian::little,
              "serialized layout is the in-memory little-endian word layout");

/*
    Binary framing. Everything after a file header is a flat list of arrays,
    each written as

        u64 word_count, then word_count little-endian 64-bit words.

    Typed arrays (u16, u32, ...) put their element count in the first word
    and pad the last word with zero bytes. Since every array is
    self-delimiting, a reader can sum payload sizes without knowing which
    structure produced the file.

    The writer tallies payload bits per named component so `info` can report
    a breakdown whose sum equals the file payload.
*/
class binary_writer {
public:
    void put_u8(uint8_t v) { bytes_.push_back(v); }
    void put_u64(uint64_t v);
    void put_bytes(std::span<const uint8_t> data);

    void put_words(std::span<const uint64_t> words);

    template <typename T>
    void put_array(std::vector<T> const& values) {
        static_assert(std::is_trivially_copyable_v<T>);
        std::size_t const nbytes = values.size() * sizeof(T);
        std::vector<uint64_t> words(1 + (nbytes + 7) / 8, 0);
        words[0] = values.size();
        if (nbytes != 0) std::memcpy(words.data() + 1, values.data(), nbytes);
        put_words(words);
    }

    // Payload tallying. Names nest with '/' while a scope is open.
    void push_component(std::string const& name);
    void pop_component();

    std::vector<uint8_t> const& bytes() const { return bytes_; }
    std::vector<uint8_t> release() { return std::move(bytes_); }
    std::vector<space_component> const& components() const { return components_; }
    uint64_t payload_bits() const { return payload_bits_; }

private:
    std::vector<uint8_t> bytes_;
    std::vector<std::string> scope_;
    std::vector<space_component> components_;
    uint64_t payload_bits_ = 0;
};

class component_scope {
public:
    component_scope(binary_writer& out, std::string const& name) : out_(out) {
        out_.push_component(name);
    }
    ~component_scope() { out_.pop_component(); }
    component_scope(component_scope const&) = delete;
    component_scope& operator=(component_scope const&) = delete;

private:
    binary_writer& out_;
};

class binary_reader {
public:
    explicit binary_reader(std::span<const uint8_t> data) : data_(data) {}

    uint8_t get_u8();
    uint64_t get_u64();
    std::span<const uint8_t> get_bytes(std::size_t count);

    std::vector<uint64_t> get_words();

    template <typename T>
    std::vector<T> get_array() {
        static_assert(std::is_trivially_copyable_v<T>);
        auto words = get_words();
        if (words.empty()) throw format_error("typed array without element count");
        uint64_t const count = words[0];
        if (count > (words.size() - 1) * 8 / sizeof(T)) {
            throw format_error("typed array element count exceeds its payload");
        }
        if ((count * sizeof(T) + 7) / 8 != words.size() - 1) {
            throw format_error("typed array has trailing words");
        }
        std::vector<T> values(count);
        if (count != 0) std::memcpy(values.data(), words.data() + 1, count * sizeof(T));
        return values;
    }

    std::size_t position() const { return pos_; }
    std::size_t remaining() const { return data_.size() - pos_; }
    bool at_end() const { return pos_ == data_.size(); }

private:
    std::span<const uint8_t> data_;
    std::size_t pos_ = 0;
};

// Sum of array payload bits in a span of concatenated arrays.
uint64_t walk_payload_bits(std::span<const uint8_t> arrays);

}  // namespace succinct
