#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "succinct/sequence.hpp"

namespace succinct::cli {

// Oracle backed by per-symbol occurrence lists: same answers and errors as
// oracle_rank/oracle_select, in logarithmic time.
class occurrence_oracle {
public:
    explicit occurrence_oracle(sequence const& seq);

    uint64_t size() const { return seq_->size(); }
    uint64_t sigma() const { return seq_->sigma(); }
    uint64_t count(uint64_t a) const { return offsets_[a] - offsets_[a - 1]; }

    uint64_t access(uint64_t i) const;
    uint64_t rank(uint64_t a, uint64_t i) const;
    uint64_t select(uint64_t a, uint64_t j) const;

private:
    sequence const* seq_;
    std::vector<uint64_t> offsets_;  // occurrences of a are positions_[offsets_[a-1], offsets_[a])
    std::vector<uint64_t> positions_;
};

struct verify_report {
    uint64_t queries = 0;
    uint64_t mismatches = 0;
    std::string first_mismatch;  // full query context of the first mismatch
    bool exhaustive = false;

    bool ok() const { return mismatches == 0; }
};

// Random access/rank/select queries (queries of each kind) plus, when
// n <= exhaustive_limit, every valid argument and the first invalid select
// per symbol. Exceptions other than the expected ones count as mismatches.
verify_report verify_index(sequence const& seq, sequence_index const& index, uint64_t queries, uint64_t seed,
                           uint64_t exhaustive_limit = 512);

}  // namespace succinct::cli
