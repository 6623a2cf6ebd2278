#include "succinct/structure_file.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <iterator>

#include "succinct/broadword.hpp"
#include "succinct/errors.hpp"
#include "succinct/packed_sequence.hpp"
#include "succinct/rank_reduce.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

namespace {

constexpr char sequence_magic[6] = {'S', 'S', 'E', 'Q', '1', '\0'};
constexpr char structure_magic[6] = {'S', 'S', 'D', 'S', '1', '\0'};
constexpr std::size_t header_bytes = 8;

void put_magic(binary_writer& out, char const (&magic)[6]) {
    out.put_bytes({reinterpret_cast<uint8_t const*>(magic), 6});
}

void expect_magic(binary_reader& in, char const (&magic)[6], char const* what) {
    if (in.remaining() < 6) throw format_error(std::string(what) + ": truncated header");
    auto m = in.get_bytes(6);
    if (std::memcmp(m.data(), magic, 6) != 0) throw format_error(std::string(what) + ": bad magic");
}

template <typename T>
std::unique_ptr<sequence_index> boxed(T&& value) {
    return std::make_unique<std::decay_t<T>>(std::forward<T>(value));
}

}  // namespace

std::vector<uint8_t> encode_sequence(sequence const& seq) {
    binary_writer out;
    put_magic(out, sequence_magic);
    out.put_u8(sequence_file_version);
    out.put_u8(0);
    out.put_u64(seq.size());
    out.put_u64(seq.sigma());
    unsigned const width = ceil_log2(seq.sigma());
    if (width > 0) {
        std::vector<uint64_t> words((seq.size() * width + 63) / 64, 0);
        uint64_t at = 0;
        for (uint64_t s : seq.symbols()) {
            uint64_t const v = s - 1;
            words[at >> 6] |= v << (at & 63);
            if ((at & 63) + width > 64) words[(at >> 6) + 1] |= v >> (64 - (at & 63));
            at += width;
        }
        for (uint64_t w : words) out.put_u64(w);
    }
    return out.release();
}

sequence decode_sequence(std::span<const uint8_t> bytes) {
    binary_reader in(bytes);
    expect_magic(in, sequence_magic, "sequence file");
    if (in.remaining() < 18) throw format_error("sequence file: truncated header");
    uint8_t const version = in.get_u8();
    uint8_t const flags = in.get_u8();
    if (version != sequence_file_version) {
        throw format_error("sequence file: unsupported version " + std::to_string(version));
    }
    if (flags != 0) throw format_error("sequence file: unsupported flags");
    uint64_t const n = in.get_u64();
    uint64_t const sigma = in.get_u64();
    if (sigma == 0) throw format_error("sequence file: sigma is zero");
    unsigned const width = ceil_log2(sigma);
    if (width > 0 && n > (uint64_t{1} << 58) / width) throw format_error("sequence file: n too large");
    uint64_t const nwords = (n * width + 63) / 64;
    if (in.remaining() != nwords * 8) throw format_error("sequence file: payload size does not match n");
    std::vector<uint64_t> words(nwords);
    for (auto& w : words) w = in.get_u64();
    std::vector<uint64_t> symbols(n);
    for (uint64_t k = 0; k < n; ++k) {
        uint64_t const v = broadword::extract_bits(words, k * width, width);
        if (v >= sigma) {
            throw format_error("sequence file: value " + std::to_string(v + 1) + " at position " +
                               std::to_string(k + 1) + " exceeds sigma");
        }
        symbols[k] = v + 1;
    }
    if (nwords > 0 && (n * width) % 64 != 0 && (words.back() >> ((n * width) % 64)) != 0) {
        throw format_error("sequence file: nonzero padding");
    }
    return sequence(std::move(symbols), sigma);
}

std::vector<uint8_t> read_file(std::filesystem::path const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path.string());
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw io_error("cannot read " + path.string());
    return bytes;
}

void write_file(std::filesystem::path const& path, std::span<const uint8_t> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot open " + path.string() + " for writing");
    out.write(reinterpret_cast<char const*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw io_error("cannot write " + path.string());
}

backend_tag parse_backend(std::string_view name) {
    for (auto tag : {backend_tag::wavelet, backend_tag::golynski, backend_tag::rankreduce,
                     backend_tag::apcompress, backend_tag::predecessor}) {
        if (to_string(tag) == name) return tag;
    }
    throw validation_error("unknown backend '" + std::string(name) + "'");
}

std::unique_ptr<sequence_index> build_index(backend_tag tag, sequence const& seq, build_options const& options) {
    if (seq.empty()) throw validation_error("cannot build an index over an empty sequence");
    switch (tag) {
        case backend_tag::wavelet:
            return boxed(wavelet_sequence(seq, options.wavelet));
        case backend_tag::golynski:
            return boxed(golynski_sequence(seq, options.golynski));
        case backend_tag::rankreduce:
            return boxed(rank_reduce_sequence(seq, options.predecessor));
        case backend_tag::apcompress:
            return boxed(alphabet_partition(seq, options.apcompress));
        case backend_tag::predecessor:
            break;
    }
    throw validation_error("backend " + to_string(tag) + " does not index sequences");
}

encoded_structure encode_structure(sequence_index const& index) {
    binary_writer out;
    put_magic(out, structure_magic);
    out.put_u8(structure_file_version);
    out.put_u8(static_cast<uint8_t>(index.tag()));
    index.serialize(out);
    encoded_structure e;
    e.components = out.components();
    e.payload_bits = out.payload_bits();
    e.bytes = out.release();
    return e;
}

structure_header peek_structure(std::span<const uint8_t> bytes) {
    binary_reader in(bytes);
    expect_magic(in, structure_magic, "structure file");
    if (in.remaining() < 2) throw format_error("structure file: truncated header");
    structure_header h;
    h.version = in.get_u8();
    if (h.version != structure_file_version) {
        throw format_error("structure file: unsupported version " + std::to_string(h.version));
    }
    uint8_t const tag = in.get_u8();
    if (tag < 1 || tag > 5) throw format_error("structure file: unknown backend tag " + std::to_string(tag));
    h.tag = static_cast<backend_tag>(tag);
    return h;
}

std::unique_ptr<sequence_index> decode_structure(std::span<const uint8_t> bytes) {
    structure_header const h = peek_structure(bytes);
    binary_reader in(bytes.subspan(header_bytes));
    std::unique_ptr<sequence_index> index;
    switch (h.tag) {
        case backend_tag::wavelet:
            index = boxed(wavelet_sequence::deserialize(in));
            break;
        case backend_tag::golynski:
            index = boxed(golynski_sequence::deserialize(in));
            break;
        case backend_tag::rankreduce:
            index = boxed(rank_reduce_sequence::deserialize(in));
            break;
        case backend_tag::apcompress:
            index = boxed(alphabet_partition::deserialize(in));
            break;
        case backend_tag::predecessor:
            throw format_error("structure file holds a predecessor set, not a sequence");
    }
    if (!in.at_end()) throw format_error("structure file: trailing bytes");
    return index;
}

encoded_structure encode_predecessor(predecessor_set const& set) {
    binary_writer out;
    put_magic(out, structure_magic);
    out.put_u8(structure_file_version);
    out.put_u8(static_cast<uint8_t>(backend_tag::predecessor));
    {
        component_scope scope(out, "params");
        out.put_words(std::vector<uint64_t>{set.universe(), set.size(), set.params().base_width,
                                            set.params().leaf_capacity});
    }
    {
        component_scope scope(out, "structure");
        set.serialize(out);
    }
    encoded_structure e;
    e.components = out.components();
    e.payload_bits = out.payload_bits();
    e.bytes = out.release();
    return e;
}

predecessor_set decode_predecessor(std::span<const uint8_t> bytes) {
    structure_header const h = peek_structure(bytes);
    if (h.tag != backend_tag::predecessor) throw format_error("structure file does not hold a predecessor set");
    binary_reader in(bytes.subspan(header_bytes));
    auto p = in.get_words();
    if (p.size() != 4) throw format_error("predecessor: bad parameter block");
    predecessor_set set = predecessor_set::deserialize(in);
    if (set.universe() != p[0] || set.size() != p[1]) throw format_error("predecessor: header mismatch");
    if (!in.at_end()) throw format_error("structure file: trailing bytes");
    return set;
}

uint64_t structure_payload_bits(std::span<const uint8_t> bytes) {
    peek_structure(bytes);
    return walk_payload_bits(bytes.subspan(header_bytes));
}

}  // namespace succinct
