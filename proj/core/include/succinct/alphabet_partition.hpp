#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "succinct/golynski.hpp"
#include "succinct/huffman_wavelet.hpp"
#include "succinct/sequence.hpp"
#include "succinct/wavelet.hpp"

namespace succinct {

class binary_writer;
class binary_reader;

struct alphabet_partition_params {
    uint64_t golynski_threshold = 64;  // local alphabets at least this large use golynski
    uint64_t max_classes = 16;         // rarest classes are merged beyond this count
    wavelet_params wavelet = {};
    golynski_params golynski = {};
};

/*
    Zeroth-order compression by alphabet partitioning.

    Symbol a with n_a occurrences goes to class ceil(lg(n/n_a)), so the
    frequencies inside a class differ by less than a factor two. The string
    is split into the class sequence K[i] = class(S[i]) and, per class c, the
    subsequence of S at the positions where K = c, rewritten over the class's
    local alphabet. K is stored in a Huffman-shaped wavelet tree, so it costs
    about n H_0(K) bits rather than n lg(classes). Then

        access(i)    = symbol(c, members[c].access(rank_c(K, i))),  c = K[i]
        rank_a(i)    = members[c].rank(local(a), rank_c(K, i)),      c = class(a)
        select_a(j)  = select_c(K, members[c].select(local(a), j))

    The symbol -> class map is itself a sequence M over the alphabet, so
    local(a) = rank_c(M, a) and symbol(c, j) = select_c(M, j).
*/
class alphabet_partition final : public sequence_index {
public:
    alphabet_partition();
    ~alphabet_partition() override;
    alphabet_partition(alphabet_partition&&) noexcept;
    alphabet_partition& operator=(alphabet_partition&&) noexcept;

    explicit alphabet_partition(sequence const& seq, alphabet_partition_params params = {});

    uint64_t size() const override { return n_; }
    uint64_t sigma() const override { return sigma_; }
    uint64_t access(uint64_t i) const override;
    uint64_t rank(uint64_t a, uint64_t i) const override;
    uint64_t select(uint64_t a, uint64_t j) const override;
    backend_tag tag() const override { return backend_tag::apcompress; }
    std::string params() const override;
    void serialize(binary_writer& out) const override;
    static alphabet_partition deserialize(binary_reader& in);

    uint64_t classes() const { return classes_; }
    // Dense class id of a (1-based), or 0 when a does not occur.
    uint64_t class_of(uint64_t a) const;
    uint64_t class_size(uint64_t c) const { return class_sizes_[c - 1]; }
    uint64_t class_length(uint64_t c) const;
    // Class value ceil(lg(n/n_a)) before merging.
    static uint64_t class_value(uint64_t n, uint64_t count);
    // Backend used for class c, or nullopt for a single-symbol class.
    std::optional<backend_tag> member_backend(uint64_t c) const;

private:
    uint64_t class_rank(uint64_t c, uint64_t i) const;

    uint64_t n_ = 0;
    uint64_t sigma_ = 0;
    uint64_t classes_ = 0;
    alphabet_partition_params params_;
    std::vector<uint64_t> class_sizes_;  // local alphabet size per class
    wavelet_sequence map_;               // class of every symbol; classes_+1 for absent symbols
    std::unique_ptr<huffman_sequence> class_seq_;  // null with one class
    std::vector<std::unique_ptr<sequence_index>> members_;  // null for single-symbol classes
};

}  // namespace succinct
