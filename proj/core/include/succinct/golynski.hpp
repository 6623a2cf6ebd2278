#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "succinct/bit_vector.hpp"
#include "succinct/permutation.hpp"
#include "succinct/predecessor.hpp"
#include "succinct/sequence.hpp"

namespace succinct {

class binary_writer;
class binary_reader;

enum class golynski_mode : uint8_t {
    constant_select = 0,  // pi stored, pi^{-1} through shortcuts
    constant_access = 1,  // pi^{-1} stored, pi through shortcuts
};

struct golynski_params {
    golynski_mode mode = golynski_mode::constant_select;
    unsigned f = 4;               // shortcut period and sampling exponent
    uint64_t sampling_sigma = 0;  // alphabet size used for the sample step; 0 means sigma
};

/*
    Chunked representation for large alphabets.

    S is cut into chunks of sigma positions (one chunk when sigma > n). A
    bitmap A lists, symbol by symbol, the occurrences per chunk in unary;
    it turns a global rank or select into a chunk-local one.

    Inside a chunk, X = 1^{n_1} 0 1^{n_2} 0 ... 1^{n_sigma} 0 and pi lists
    the positions of symbol 1 left to right, then symbol 2, and so on:

        select_a(j) = pi(select0(X, a-1) - (a-1) + j)
        access(i)   = 1 + rank0(X, select1(X, pi^{-1}(i)))

    For rank, every step-th occurrence of each symbol is sampled; a
    predecessor search over the samples leaves a window of fewer than step
    occurrences, finished by binary search through pi.

    All chunks share global arrays: X and the sample bitmap are
    concatenations, and pi is one shortcut_permutation with block = chunk.
*/
class golynski_sequence final : public sequence_index {
public:
    static constexpr uint64_t small_sample_set = 64;

    // Step between sampled occurrences for the given mode and parameters.
    static uint64_t sample_step(golynski_mode mode, unsigned f, uint64_t sampling_sigma);

    struct rank_trace {
        uint64_t window = 0;         // occurrences left after the predecessor search
        unsigned max_pi_steps = 0;   // most pi evaluations behind one inverse
    };

    golynski_sequence() = default;
    explicit golynski_sequence(sequence const& seq, golynski_params params = {});

    uint64_t size() const override { return n_; }
    uint64_t sigma() const override { return sigma_; }
    uint64_t access(uint64_t i) const override;
    uint64_t rank(uint64_t a, uint64_t i) const override { return rank(a, i, nullptr); }
    uint64_t rank(uint64_t a, uint64_t i, rank_trace* trace) const;
    uint64_t select(uint64_t a, uint64_t j) const override;
    backend_tag tag() const override { return backend_tag::golynski; }
    std::string params() const override;
    void serialize(binary_writer& out) const override;
    static golynski_sequence deserialize(binary_reader& in);

    golynski_mode mode() const { return mode_; }
    unsigned f() const { return f_; }
    uint64_t step() const { return step_; }
    uint64_t chunk_length() const { return chunk_; }
    uint64_t chunks() const { return chunks_; }

    // pi and pi^{-1} of chunk k (0-based), local 1-based arguments.
    uint64_t pi(uint64_t k, uint64_t t, unsigned* steps = nullptr) const;
    uint64_t pi_inverse(uint64_t k, uint64_t i, unsigned* steps = nullptr) const;
    bit_vector const& x_bitmap() const { return x_; }
    shortcut_permutation const& permutation() const { return perm_; }

private:
    uint64_t chunk_len(uint64_t k) const { return std::min(chunk_, n_ - k * chunk_); }
    uint64_t x_zeros_before(uint64_t z) const { return z == 0 ? 0 : x_.select0(z); }
    uint64_t a_zeros_before(uint64_t z) const { return z == 0 ? 0 : a_.select0(z); }
    uint64_t sample_zeros_before(uint64_t z) const { return z == 0 ? 0 : samples_.select0(z); }
    // Occurrences of a in chunks [0, k).
    uint64_t chunk_prefix(uint64_t a, uint64_t k) const;
    unsigned key_width() const { return bits_for(chunk_ - 1); }

    uint64_t n_ = 0;
    uint64_t sigma_ = 0;
    golynski_mode mode_ = golynski_mode::constant_select;
    unsigned f_ = 4;
    uint64_t sampling_sigma_ = 0;
    uint64_t step_ = 1;
    uint64_t chunk_ = 1;
    uint64_t chunks_ = 1;

    bit_vector a_;  // empty with a single chunk
    bit_vector x_;
    shortcut_permutation perm_;
    bit_vector samples_;               // 1^{floor(n_a/step)} 0 per chunk and symbol
    std::vector<uint64_t> keys_;       // sampled local positions, packed with separators
    std::vector<uint64_t> big_ids_;    // chunk * sigma + a - 1 of sets with many samples
    std::vector<predecessor_set> big_sets_;
};

}  // namespace succinct
