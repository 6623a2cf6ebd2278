#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "succinct/errors.hpp"

namespace succinct {

class binary_writer;

/*
    Conventions shared by every representation in this library.

    Positions are 1-based. For a sequence S[1,n] over [1,sigma]:
      access(i)    = S[i]                                   1 <= i <= n
      rank(a, i)   = |{ k <= i : S[k] = a }|                0 <= i <= n
      select(a, j) = position of the j-th occurrence of a   1 <= j <= rank(a, n)

    Out-of-domain positions or symbols raise range_error (rank with i > n is
    an error, not clamped). select past the last occurrence raises
    not_found_error.
*/

// A plain sequence over [1, sigma]. Immutable once constructed.
class sequence {
public:
    sequence() = default;
    sequence(std::vector<uint64_t> symbols, uint64_t sigma);

    uint64_t size() const { return symbols_.size(); }
    uint64_t sigma() const { return sigma_; }
    bool empty() const { return symbols_.empty(); }

    // 1-based, unchecked.
    uint64_t operator[](uint64_t i) const { return symbols_[i - 1]; }

    std::span<const uint64_t> symbols() const { return symbols_; }

    // Occurrence count of every symbol; index 0 unused.
    std::vector<uint64_t> histogram() const;

private:
    std::vector<uint64_t> symbols_;
    uint64_t sigma_ = 0;
};

// Reference answers by direct lookup and linear scan. Every structure in the
// library is tested against these.
uint64_t oracle_access(sequence const& seq, uint64_t i);
uint64_t oracle_rank(sequence const& seq, uint64_t a, uint64_t i);
uint64_t oracle_select(sequence const& seq, uint64_t a, uint64_t j);

// H_0(S) = sum_a (n_a/n) lg(n/n_a), in bits per symbol.
double zeroth_order_entropy(sequence const& seq);

// Argument checks shared by all backends.
namespace detail {
void check_access(uint64_t n, uint64_t i);
void check_rank(uint64_t n, uint64_t sigma, uint64_t a, uint64_t i);
void check_select_symbol(uint64_t sigma, uint64_t a);
[[noreturn]] void throw_not_found(uint64_t a, uint64_t j);
}  // namespace detail

enum class backend_tag : uint8_t {
    wavelet = 1,
    golynski = 2,
    rankreduce = 3,
    apcompress = 4,
    predecessor = 5,
};

std::string to_string(backend_tag tag);

// Named group of serialized words, as reported by `info`.
struct space_component {
    std::string name;
    uint64_t bits = 0;
};

// Common query surface of the sequence representations.
class sequence_index {
public:
    virtual ~sequence_index() = default;

    virtual uint64_t size() const = 0;
    virtual uint64_t sigma() const = 0;

    virtual uint64_t access(uint64_t i) const = 0;
    virtual uint64_t rank(uint64_t a, uint64_t i) const = 0;
    virtual uint64_t select(uint64_t a, uint64_t j) const = 0;

    virtual backend_tag tag() const = 0;
    // Human-readable parameter summary, e.g. "ell=4;block=512".
    virtual std::string params() const = 0;

    // Writes the parameter block and the component arrays.
    virtual void serialize(binary_writer& out) const = 0;
};

}  // namespace succinct
