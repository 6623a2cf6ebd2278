#include "succinct_cli/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "succinct/corpus.hpp"
#include "succinct/errors.hpp"

namespace succinct::cli {

occurrence_oracle::occurrence_oracle(sequence const& seq) : seq_(&seq) {
    offsets_.assign(seq.sigma() + 1, 0);
    for (uint64_t s : seq.symbols()) ++offsets_[s];
    for (uint64_t a = 1; a <= seq.sigma(); ++a) offsets_[a] += offsets_[a - 1];
    positions_.resize(seq.size());
    std::vector<uint64_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (uint64_t i = 1; i <= seq.size(); ++i) positions_[fill[seq[i] - 1]++] = i;
}

uint64_t occurrence_oracle::access(uint64_t i) const {
    detail::check_access(size(), i);
    return (*seq_)[i];
}

uint64_t occurrence_oracle::rank(uint64_t a, uint64_t i) const {
    detail::check_rank(size(), sigma(), a, i);
    auto const begin = positions_.begin() + static_cast<std::ptrdiff_t>(offsets_[a - 1]);
    auto const end = positions_.begin() + static_cast<std::ptrdiff_t>(offsets_[a]);
    return static_cast<uint64_t>(std::upper_bound(begin, end, i) - begin);
}

uint64_t occurrence_oracle::select(uint64_t a, uint64_t j) const {
    detail::check_select_symbol(sigma(), a);
    if (j == 0 || j > count(a)) detail::throw_not_found(a, j);
    return positions_[offsets_[a - 1] + j - 1];
}

namespace {

// Outcome of one query: a value or the kind of error raised.
struct outcome {
    uint64_t value = 0;
    std::string error;

    bool operator==(outcome const&) const = default;
    std::string str() const { return error.empty() ? std::to_string(value) : error; }
};

template <typename F>
outcome run(F&& f) {
    try {
        return {f(), {}};
    } catch (range_error const&) {
        return {0, "range_error"};
    } catch (not_found_error const&) {
        return {0, "not_found_error"};
    } catch (std::exception const& e) {
        return {0, std::string("unexpected exception: ") + e.what()};
    }
}

class checker {
public:
    checker(occurrence_oracle const& oracle, sequence_index const& index, verify_report& report)
        : oracle_(oracle), index_(index), report_(report) {}

    void access(uint64_t i) {
        compare("access(" + std::to_string(i) + ")", run([&] { return oracle_.access(i); }),
                run([&] { return index_.access(i); }));
    }
    void rank(uint64_t a, uint64_t i) {
        compare("rank(a=" + std::to_string(a) + ", i=" + std::to_string(i) + ")",
                run([&] { return oracle_.rank(a, i); }), run([&] { return index_.rank(a, i); }));
    }
    void select(uint64_t a, uint64_t j) {
        compare("select(a=" + std::to_string(a) + ", j=" + std::to_string(j) + ")",
                run([&] { return oracle_.select(a, j); }), run([&] { return index_.select(a, j); }));
    }

private:
    void compare(std::string const& query, outcome const& expected, outcome const& got) {
        ++report_.queries;
        if (expected == got) return;
        if (report_.mismatches++ == 0) {
            std::ostringstream os;
            os << to_string(index_.tag()) << " [" << index_.params() << "] n=" << oracle_.size()
               << " sigma=" << oracle_.sigma() << ": " << query << " expected " << expected.str() << ", got "
               << got.str();
            report_.first_mismatch = os.str();
        }
    }

    occurrence_oracle const& oracle_;
    sequence_index const& index_;
    verify_report& report_;
};

uint64_t below(std::mt19937_64& rng, uint64_t bound) { return uniform_below(rng, bound); }

}  // namespace

verify_report verify_index(sequence const& seq, sequence_index const& index, uint64_t queries, uint64_t seed,
                           uint64_t exhaustive_limit) {
    verify_report report;
    occurrence_oracle oracle(seq);
    checker check(oracle, index, report);
    uint64_t const n = seq.size();
    uint64_t const sigma = seq.sigma();

    if (index.size() != n || index.sigma() != sigma) {
        report.mismatches = 1;
        report.first_mismatch = "shape mismatch: index has n=" + std::to_string(index.size()) +
                                " sigma=" + std::to_string(index.sigma()) + ", sequence has n=" +
                                std::to_string(n) + " sigma=" + std::to_string(sigma);
        return report;
    }

    if (n <= exhaustive_limit) {
        report.exhaustive = true;
        for (uint64_t i = 1; i <= n; ++i) check.access(i);
        for (uint64_t a = 1; a <= sigma; ++a) {
            for (uint64_t i = 0; i <= n; ++i) check.rank(a, i);
            for (uint64_t j = 1; j <= oracle.count(a) + 1; ++j) check.select(a, j);
        }
    }

    if (n == 0) return report;
    std::mt19937_64 rng(seed);
    for (uint64_t q = 0; q < queries; ++q) {
        check.access(below(rng, n) + 1);

        // half the symbols are drawn from the text so they occur
        uint64_t const a = (rng() & 1) ? seq[below(rng, n) + 1] : below(rng, sigma) + 1;
        check.rank(a, below(rng, n + 1));

        uint64_t const b = seq[below(rng, n) + 1];
        uint64_t const c = oracle.count(b);
        uint64_t const j = (q % 64 == 63) ? c + 1 : below(rng, c) + 1;
        check.select(b, j);
    }
    return report;
}

}  // namespace succinct::cli
