#include "succinct/golynski.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "succinct/broadword.hpp"
#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

namespace {

constexpr double lg_w = 6.0;

}  // namespace

uint64_t golynski_sequence::sample_step(golynski_mode mode, unsigned f, uint64_t sampling_sigma) {
    double const ratio = std::log2(static_cast<double>(std::max<uint64_t>(2, sampling_sigma))) / lg_w;
    double const step = mode == golynski_mode::constant_select ? std::ceil(ratio)
                                                               : std::ceil(std::pow(ratio, 1.0 / f));
    return std::max<uint64_t>(1, static_cast<uint64_t>(step));
}

golynski_sequence::golynski_sequence(sequence const& seq, golynski_params params)
    : n_(seq.size()), sigma_(seq.sigma()), mode_(params.mode), f_(params.f),
      sampling_sigma_(params.sampling_sigma == 0 ? seq.sigma() : params.sampling_sigma) {
    if (n_ == 0) throw validation_error("golynski: empty sequence");
    if (f_ == 0) throw validation_error("golynski: f must be at least 1");
    step_ = sample_step(mode_, f_, sampling_sigma_);
    chunk_ = sigma_ <= n_ ? sigma_ : n_;
    chunks_ = (n_ + chunk_ - 1) / chunk_;
    auto const symbols = seq.symbols();

    std::vector<uint64_t> counts(chunks_ * sigma_, 0);  // [chunk * sigma + a - 1]
    std::vector<uint64_t> perm(n_);
    std::vector<uint64_t> start(sigma_ + 1);
    std::vector<uint64_t> all_keys;
    bit_vector_builder x_bits;
    bit_vector_builder sample_bits;
    for (uint64_t k = 0; k < chunks_; ++k) {
        uint64_t const base = k * chunk_;
        uint64_t const len = chunk_len(k);
        uint64_t* cnt = counts.data() + k * sigma_;
        for (uint64_t c = base; c < base + len; ++c) ++cnt[symbols[c] - 1];
        start[0] = 0;
        for (uint64_t a = 0; a < sigma_; ++a) {
            start[a + 1] = start[a] + cnt[a];
            x_bits.append(true, cnt[a]);
            x_bits.push_back(false);
        }
        // pi lists positions grouped by symbol, each group left to right
        std::vector<uint64_t> fill(start.begin(), start.end() - 1);
        std::vector<uint64_t> pi(len);
        for (uint64_t c = 0; c < len; ++c) pi[fill[symbols[base + c] - 1]++] = c;
        for (uint64_t t = 0; t < len; ++t) {
            if (mode_ == golynski_mode::constant_select) {
                perm[base + t] = pi[t];
            } else {
                perm[base + pi[t]] = t;
            }
        }
        std::vector<uint64_t> set_keys;
        for (uint64_t a = 0; a < sigma_; ++a) {
            uint64_t const m = cnt[a] / step_;
            sample_bits.append(true, m);
            sample_bits.push_back(false);
            set_keys.clear();
            for (uint64_t h = 1; h <= m; ++h) set_keys.push_back(pi[start[a] + h * step_ - 1]);
            all_keys.insert(all_keys.end(), set_keys.begin(), set_keys.end());
            if (m > small_sample_set) {
                for (auto& key : set_keys) ++key;
                big_ids_.push_back(k * sigma_ + a);
                big_sets_.emplace_back(set_keys, chunk_);
            }
        }
    }
    x_ = std::move(x_bits).build();
    samples_ = std::move(sample_bits).build();
    perm_ = shortcut_permutation(perm, chunk_, f_);
    broadword::packed_append(keys_, 0, key_width(), all_keys);

    if (chunks_ > 1) {
        bit_vector_builder a_bits;
        for (uint64_t a = 0; a < sigma_; ++a) {
            for (uint64_t k = 0; k < chunks_; ++k) {
                a_bits.append(true, counts[k * sigma_ + a]);
                a_bits.push_back(false);
            }
        }
        a_ = std::move(a_bits).build();
    }
}

uint64_t golynski_sequence::pi(uint64_t k, uint64_t t, unsigned* steps) const {
    uint64_t const g = k * chunk_ + t - 1;
    if (steps != nullptr) *steps = 0;
    if (mode_ == golynski_mode::constant_select) return perm_.apply(g) + 1;
    return perm_.inverse(g, steps) + 1;
}

uint64_t golynski_sequence::pi_inverse(uint64_t k, uint64_t i, unsigned* steps) const {
    uint64_t const g = k * chunk_ + i - 1;
    if (steps != nullptr) *steps = 0;
    if (mode_ == golynski_mode::constant_access) return perm_.apply(g) + 1;
    return perm_.inverse(g, steps) + 1;
}

uint64_t golynski_sequence::chunk_prefix(uint64_t a, uint64_t k) const {
    if (chunks_ == 1) return 0;
    uint64_t const z0 = (a - 1) * chunks_;
    return (a_zeros_before(z0 + k) - (z0 + k)) - (a_zeros_before(z0) - z0);
}

uint64_t golynski_sequence::access(uint64_t i) const {
    detail::check_access(n_, i);
    uint64_t const k = (i - 1) / chunk_;
    uint64_t const u = pi_inverse(k, i - k * chunk_);
    return x_.rank0(x_.select1(k * chunk_ + u)) - k * sigma_ + 1;
}

uint64_t golynski_sequence::select(uint64_t a, uint64_t j) const {
    detail::check_select_symbol(sigma_, a);
    if (j == 0) detail::throw_not_found(a, j);
    uint64_t k = 0;
    uint64_t local = j;
    if (chunks_ == 1) {
        uint64_t const count = x_zeros_before(a) - x_zeros_before(a - 1) - 1;
        if (j > count) detail::throw_not_found(a, j);
    } else {
        uint64_t const z0 = (a - 1) * chunks_;
        uint64_t const row_start = a_zeros_before(z0);
        uint64_t const before = row_start - z0;
        uint64_t const count = a_.select0(z0 + chunks_) - row_start - chunks_;
        if (j > count) detail::throw_not_found(a, j);
        k = a_.rank0(a_.select1(before + j)) - z0;
        local = j - ((a_zeros_before(z0 + k) - (z0 + k)) - before);
    }
    uint64_t const zk = k * sigma_ + a - 1;
    uint64_t const t = x_zeros_before(zk) - zk - k * chunk_ + local;
    return k * chunk_ + pi(k, t);
}

uint64_t golynski_sequence::rank(uint64_t a, uint64_t i, rank_trace* trace) const {
    detail::check_rank(n_, sigma_, a, i);
    if (i == 0) return 0;
    uint64_t const k = (i - 1) / chunk_;
    uint64_t const q = i - k * chunk_;
    uint64_t const prefix = chunk_prefix(a, k);

    uint64_t const zk = k * sigma_ + a - 1;
    uint64_t const xs = x_zeros_before(zk);
    uint64_t const count = x_.select0(zk + 1) - xs - 1;
    if (count == 0) return prefix;
    uint64_t const t0 = xs - zk - k * chunk_;

    uint64_t const m = count / step_;
    uint64_t sampled = 0;
    if (m > small_sample_set) {
        auto const it = std::lower_bound(big_ids_.begin(), big_ids_.end(), zk);
        sampled = big_sets_[static_cast<std::size_t>(it - big_ids_.begin())].query(q).rank;
    } else if (m > 0) {
        uint64_t const offset = sample_zeros_before(zk) - zk;
        sampled = broadword::packed_rank(keys_, offset, m, key_width(), q - 1);
    }

    uint64_t lo = sampled * step_;
    uint64_t hi = std::min(count, (sampled + 1) * step_ - 1);
    if (trace != nullptr) {
        trace->window = hi - lo;
        trace->max_pi_steps = 0;
    }
    while (lo < hi) {
        uint64_t const mid = (lo + hi + 1) / 2;
        unsigned steps = 0;
        uint64_t const pos = pi(k, t0 + mid, &steps);
        if (trace != nullptr) trace->max_pi_steps = std::max(trace->max_pi_steps, steps);
        if (pos <= q) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    return prefix + lo;
}

std::string golynski_sequence::params() const {
    return std::string("mode=") + (mode_ == golynski_mode::constant_select ? "select" : "access") +
           ";f=" + std::to_string(f_) + ";step=" + std::to_string(step_);
}

void golynski_sequence::serialize(binary_writer& out) const {
    {
        component_scope scope(out, "params");
        out.put_words(std::vector<uint64_t>{n_, sigma_, static_cast<uint64_t>(mode_), f_, sampling_sigma_,
                                            step_, chunk_, chunks_});
    }
    {
        component_scope scope(out, "chunk_bitmap");
        a_.serialize(out);
    }
    {
        component_scope scope(out, "x");
        x_.serialize(out);
    }
    {
        component_scope scope(out, "permutation");
        perm_.serialize(out);
    }
    {
        component_scope scope(out, "samples");
        samples_.serialize(out);
        out.put_words(keys_);
        out.put_words(big_ids_);
        for (auto const& s : big_sets_) s.serialize(out);
    }
}

golynski_sequence golynski_sequence::deserialize(binary_reader& in) {
    auto p = in.get_words();
    if (p.size() != 8) throw format_error("golynski: bad parameter block");
    golynski_sequence g;
    g.n_ = p[0];
    g.sigma_ = p[1];
    if (p[2] > 1) throw format_error("golynski: unknown mode");
    g.mode_ = static_cast<golynski_mode>(p[2]);
    g.f_ = static_cast<unsigned>(p[3]);
    g.sampling_sigma_ = p[4];
    g.step_ = p[5];
    g.chunk_ = p[6];
    g.chunks_ = p[7];
    if (g.n_ == 0 || g.sigma_ == 0 || g.f_ == 0 || g.chunk_ != std::min(g.sigma_, g.n_) ||
        g.chunks_ != (g.n_ + g.chunk_ - 1) / g.chunk_ ||
        g.step_ != sample_step(g.mode_, g.f_, g.sampling_sigma_)) {
        throw format_error("golynski: bad parameters");
    }
    g.a_ = bit_vector::deserialize(in);
    g.x_ = bit_vector::deserialize(in);
    g.perm_ = shortcut_permutation::deserialize(in);
    g.samples_ = bit_vector::deserialize(in);
    g.keys_ = in.get_words();
    g.big_ids_ = in.get_words();
    g.big_sets_.reserve(g.big_ids_.size());
    for (std::size_t k = 0; k < g.big_ids_.size(); ++k) g.big_sets_.push_back(predecessor_set::deserialize(in));

    uint64_t const zeros = g.chunks_ * g.sigma_;
    bool const ok =
        (g.chunks_ == 1 ? g.a_.size() == 0 : g.a_.ones() == g.n_ && g.a_.zeros() == zeros) &&
        g.x_.ones() == g.n_ && g.x_.zeros() == zeros && g.perm_.size() == g.n_ &&
        g.perm_.block_size() == g.chunk_ && g.perm_.period() == g.f_ && g.samples_.zeros() == zeros &&
        g.keys_.size() == (g.samples_.ones() * (g.key_width() + 1) + 63) / 64 &&
        std::is_sorted(g.big_ids_.begin(), g.big_ids_.end());
    if (!ok) throw format_error("golynski: inconsistent component sizes");
    return g;
}

}  // namespace succinct
