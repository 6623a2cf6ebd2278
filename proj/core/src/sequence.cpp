#include "succinct/sequence.hpp"

#include <cmath>
#include <string>

namespace succinct {

sequence::sequence(std::vector<uint64_t> symbols, uint64_t sigma)
    : symbols_(std::move(symbols)), sigma_(sigma) {
    if (sigma_ == 0) throw validation_error("sequence: sigma must be at least 1");
    for (uint64_t k = 0; k < symbols_.size(); ++k) {
        if (symbols_[k] < 1 || symbols_[k] > sigma_) {
            throw validation_error("sequence: symbol " + std::to_string(symbols_[k]) +
                                   " at position " + std::to_string(k + 1) +
                                   " outside [1," + std::to_string(sigma_) + "]");
        }
    }
}

std::vector<uint64_t> sequence::histogram() const {
    std::vector<uint64_t> counts(sigma_ + 1, 0);
    for (uint64_t s : symbols_) ++counts[s];
    return counts;
}

uint64_t oracle_access(sequence const& seq, uint64_t i) {
    detail::check_access(seq.size(), i);
    return seq[i];
}

uint64_t oracle_rank(sequence const& seq, uint64_t a, uint64_t i) {
    detail::check_rank(seq.size(), seq.sigma(), a, i);
    uint64_t count = 0;
    for (uint64_t k = 1; k <= i; ++k) count += (seq[k] == a);
    return count;
}

uint64_t oracle_select(sequence const& seq, uint64_t a, uint64_t j) {
    detail::check_select_symbol(seq.sigma(), a);
    if (j == 0) detail::throw_not_found(a, j);
    uint64_t seen = 0;
    for (uint64_t k = 1; k <= seq.size(); ++k) {
        if (seq[k] == a && ++seen == j) return k;
    }
    detail::throw_not_found(a, j);
}

double zeroth_order_entropy(sequence const& seq) {
    if (seq.empty()) throw undefined_input_error("zeroth_order_entropy: empty sequence");
    auto counts = seq.histogram();
    double const n = static_cast<double>(seq.size());
    double h = 0.0;
    for (uint64_t a = 1; a < counts.size(); ++a) {
        if (counts[a] == 0) continue;
        double const na = static_cast<double>(counts[a]);
        h += na / n * std::log2(n / na);
    }
    return h;
}

namespace detail {

void check_access(uint64_t n, uint64_t i) {
    if (i < 1 || i > n) {
        throw range_error("access: position " + std::to_string(i) + " outside [1," +
                          std::to_string(n) + "]");
    }
}

void check_rank(uint64_t n, uint64_t sigma, uint64_t a, uint64_t i) {
    if (a < 1 || a > sigma) {
        throw range_error("rank: symbol " + std::to_string(a) + " outside [1," +
                          std::to_string(sigma) + "]");
    }
    if (i > n) {
        throw range_error("rank: position " + std::to_string(i) + " exceeds length " +
                          std::to_string(n));
    }
}

void check_select_symbol(uint64_t sigma, uint64_t a) {
    if (a < 1 || a > sigma) {
        throw range_error("select: symbol " + std::to_string(a) + " outside [1," +
                          std::to_string(sigma) + "]");
    }
}

void throw_not_found(uint64_t a, uint64_t j) {
    throw not_found_error("select: symbol " + std::to_string(a) + " has no occurrence number " +
                          std::to_string(j));
}

}  // namespace detail

std::string to_string(backend_tag tag) {
    switch (tag) {
        case backend_tag::wavelet: return "wavelet";
        case backend_tag::golynski: return "golynski";
        case backend_tag::rankreduce: return "rankreduce";
        case backend_tag::apcompress: return "apcompress";
        case backend_tag::predecessor: return "predecessor";
    }
    return "unknown";
}

}  // namespace succinct
