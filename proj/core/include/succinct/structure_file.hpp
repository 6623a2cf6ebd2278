#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "succinct/alphabet_partition.hpp"
#include "succinct/golynski.hpp"
#include "succinct/predecessor.hpp"
#include "succinct/sequence.hpp"
#include "succinct/wavelet.hpp"

namespace succinct {

/*
    Sequence file:
        "SSEQ1\0" | version u8 = 1 | flags u8 = 0 | n u64 | sigma u64 |
        n fields of ceil(lg sigma) bits holding S[i]-1, LSB first, in
        little-endian 64-bit words, zero padded.

    Structure file:
        "SSDS1\0" | version u8 = 1 | backend tag u8 | parameter block | arrays
    The parameter block and every component are length-prefixed word arrays
    (u64 count, then words), written by each backend's serialize().
*/

inline constexpr uint8_t sequence_file_version = 1;
inline constexpr uint8_t structure_file_version = 1;

std::vector<uint8_t> encode_sequence(sequence const& seq);
sequence decode_sequence(std::span<const uint8_t> bytes);

std::vector<uint8_t> read_file(std::filesystem::path const& path);
void write_file(std::filesystem::path const& path, std::span<const uint8_t> bytes);

backend_tag parse_backend(std::string_view name);

struct build_options {
    wavelet_params wavelet;
    golynski_params golynski;
    predecessor_params predecessor;
    alphabet_partition_params apcompress;
};

std::unique_ptr<sequence_index> build_index(backend_tag tag, sequence const& seq,
                                            build_options const& options = {});

// Serialized structure plus the per-component bit tally of its payload.
struct encoded_structure {
    std::vector<uint8_t> bytes;
    std::vector<space_component> components;
    uint64_t payload_bits = 0;
};

encoded_structure encode_structure(sequence_index const& index);
std::unique_ptr<sequence_index> decode_structure(std::span<const uint8_t> bytes);

encoded_structure encode_predecessor(predecessor_set const& set);
predecessor_set decode_predecessor(std::span<const uint8_t> bytes);

struct structure_header {
    uint8_t version = 0;
    backend_tag tag = backend_tag::wavelet;
};

// Validates magic, version and tag.
structure_header peek_structure(std::span<const uint8_t> bytes);

// Payload bits of a structure file: the sum of all its array payloads.
uint64_t structure_payload_bits(std::span<const uint8_t> bytes);

}  // namespace succinct
