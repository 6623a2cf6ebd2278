#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "succinct/sequence.hpp"

namespace succinct {

// Deterministic corpora. The same (n, sigma, seed) always yields the same
// sequence on every platform: only mt19937_64 output is consumed, never a
// library distribution.

// Uniform integer in [0, bound) by multiply-high.
uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound);

sequence generate_uniform(uint64_t n, uint64_t sigma, uint64_t seed);

// Symbol k drawn with probability proportional to k^{-s}; s = 0 is uniform.
sequence generate_zipf(uint64_t n, uint64_t sigma, double s, uint64_t seed);

// Bytes mapped to symbols 1..256.
sequence sequence_from_bytes(std::span<const uint8_t> bytes);

}  // namespace succinct
