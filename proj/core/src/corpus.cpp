#include "succinct/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "succinct/errors.hpp"

namespace succinct {

namespace {

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check(uint64_t n, uint64_t sigma) {
    if (n < 1) throw validation_error("corpus: n must be at least 1");
    if (sigma < 2) throw validation_error("corpus: sigma must be at least 2");
}

}  // namespace

uint64_t uniform_below(std::mt19937_64& rng, uint64_t bound) {
    __extension__ using u128 = unsigned __int128;
    return static_cast<uint64_t>((static_cast<u128>(rng()) * bound) >> 64);
}

sequence generate_uniform(uint64_t n, uint64_t sigma, uint64_t seed) {
    check(n, sigma);
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> s(n);
    for (auto& v : s) v = uniform_below(rng, sigma) + 1;
    return sequence(std::move(s), sigma);
}

sequence generate_zipf(uint64_t n, uint64_t sigma, double s, uint64_t seed) {
    check(n, sigma);
    if (s == 0.0) return generate_uniform(n, sigma, seed);
    if (!(s > 0.0)) throw validation_error("corpus: zipf exponent must be non-negative");
    std::vector<double> cdf(sigma);
    double total = 0.0;
    for (uint64_t k = 0; k < sigma; ++k) {
        total += std::pow(static_cast<double>(k + 1), -s);
        cdf[k] = total;
    }
    std::mt19937_64 rng(seed);
    std::vector<uint64_t> out(n);
    for (auto& v : out) {
        double const u = unit(rng) * total;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        v = std::min<uint64_t>(static_cast<uint64_t>(it - cdf.begin()), sigma - 1) + 1;
    }
    return sequence(std::move(out), sigma);
}

sequence sequence_from_bytes(std::span<const uint8_t> bytes) {
    std::vector<uint64_t> s(bytes.size());
    for (std::size_t k = 0; k < bytes.size(); ++k) s[k] = uint64_t{bytes[k]} + 1;
    return sequence(std::move(s), 256);
}

}  // namespace succinct
