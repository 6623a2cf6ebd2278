#include "succinct/rank_reduce.hpp"

#include <algorithm>
#include <string>

#include "succinct/broadword.hpp"
#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

rank_reduce_sequence::rank_reduce_sequence(sequence const& seq, predecessor_params pred)
    : n_(seq.size()), sigma_(seq.sigma()) {
    if (n_ == 0) throw validation_error("rankreduce: empty sequence");
    auto const symbols = seq.symbols();

    std::vector<uint64_t> row(n_);
    if (sigma_ > n_) {
        auto hist = seq.histogram();
        for (uint64_t a = 1; a <= sigma_; ++a) {
            if (hist[a] != 0) alphabet_.push_back(a);
        }
        for (uint64_t c = 0; c < n_; ++c) {
            row[c] = static_cast<uint64_t>(std::lower_bound(alphabet_.begin(), alphabet_.end(), symbols[c]) -
                                           alphabet_.begin()) + 1;
        }
        rows_ = alphabet_.size();
    } else {
        std::copy(symbols.begin(), symbols.end(), row.begin());
        rows_ = sigma_;
    }
    chunks_ = (n_ + rows_ - 1) / rows_;

    // counting sort positions by row
    std::vector<uint64_t> start(rows_ + 2, 0);
    for (uint64_t c = 0; c < n_; ++c) ++start[row[c] + 1];
    for (uint64_t r = 1; r <= rows_; ++r) start[r + 1] += start[r];
    std::vector<uint64_t> by_row(n_);
    {
        std::vector<uint64_t> fill(start.begin(), start.end());
        for (uint64_t c = 0; c < n_; ++c) by_row[fill[row[c]]++] = c;
    }

    unsigned const b = std::max(1u, ceil_log2(rows_));
    std::vector<uint64_t> keys(n_), pairs(n_), columns(n_);
    std::vector<uint64_t> per_chunk;
    bit_vector_builder a_bits;
    for (uint64_t r = 1; r <= rows_; ++r) {
        per_chunk.assign(chunks_, 0);
        for (uint64_t p = start[r]; p < start[r + 1]; ++p) {
            uint64_t const c = by_row[p];  // 0-based column
            uint64_t const k = c / rows_;
            ++per_chunk[k];
            keys[p] = (r - 1) * n_ + c + 1;
            pairs[p] = ((r - 1) << b) | (per_chunk[k] - 1);
            columns[p] = c % rows_;
        }
        for (uint64_t k = 0; k < chunks_; ++k) {
            a_bits.append(true, per_chunk[k]);
            a_bits.push_back(false);
        }
    }
    points_ = predecessor_set(keys, n_ * rows_, pred);
    pairs_ = packed_sequence::from_values(pairs, 2 * b);
    a_ = std::move(a_bits).build();
    columns_ = packed_sequence::from_values(columns, b);

    std::vector<uint64_t> plain(n_);
    for (uint64_t c = 0; c < n_; ++c) plain[c] = symbols[c] - 1;
    plain_ = packed_sequence::from_values(plain, bits_for(sigma_ - 1));
}

uint64_t rank_reduce_sequence::row_of(uint64_t a) const {
    if (alphabet_.empty()) return a;
    auto it = std::lower_bound(alphabet_.begin(), alphabet_.end(), a);
    if (it == alphabet_.end() || *it != a) return 0;
    return static_cast<uint64_t>(it - alphabet_.begin()) + 1;
}

uint64_t rank_reduce_sequence::chunk_prefix(uint64_t r, uint64_t k) const {
    uint64_t const p0 = (r - 1) * chunks_;
    uint64_t const p1 = p0 + k;
    return zeros_before(p1) - zeros_before(p0) - (p1 - p0);
}

std::pair<uint64_t, uint64_t> rank_reduce_sequence::pair(uint64_t p) const {
    unsigned const b = pairs_.width() / 2;
    uint64_t const v = pairs_.get(p - 1);
    return {(v >> b) + 1, (v & broadword::low_ones(b)) + 1};
}

std::pair<uint64_t, uint64_t> rank_reduce_sequence::full_pair(uint64_t p) const {
    auto const [r, v] = pair(p);
    uint64_t const k = a_.rank0(a_.select1(p)) - (r - 1) * chunks_;
    return {r, v + chunk_prefix(r, k)};
}

uint64_t rank_reduce_sequence::access(uint64_t i) const {
    detail::check_access(n_, i);
    return plain_.get(i - 1) + 1;
}

uint64_t rank_reduce_sequence::rank(uint64_t a, uint64_t i) const {
    detail::check_rank(n_, sigma_, a, i);
    if (i == 0) return 0;
    uint64_t const r = row_of(a);
    if (r == 0) return 0;
    pred_result const q = points_.query((r - 1) * n_ + i);
    if (q.rank == 0) return 0;
    auto const [row, v] = pair(q.rank);
    if (row != r) return 0;
    uint64_t const column = q.value - (r - 1) * n_;  // 1-based
    return chunk_prefix(r, (column - 1) / rows_) + v;
}

uint64_t rank_reduce_sequence::select(uint64_t a, uint64_t j) const {
    detail::check_select_symbol(sigma_, a);
    uint64_t const r = row_of(a);
    if (r == 0 || j == 0) detail::throw_not_found(a, j);
    uint64_t const z0 = (r - 1) * chunks_;
    uint64_t const row_start = zeros_before(z0);
    uint64_t const before = row_start - z0;
    uint64_t const count = zeros_before(z0 + chunks_) - row_start - chunks_;
    if (j > count) detail::throw_not_found(a, j);
    uint64_t const p = before + j;
    uint64_t const k = a_.rank0(a_.select1(p)) - z0;
    return k * rows_ + columns_.get(p - 1) + 1;
}

std::string rank_reduce_sequence::params() const {
    return "base=" + std::to_string(points_.params().base_width) +
           ";leaf=" + std::to_string(points_.params().leaf_capacity);
}

void rank_reduce_sequence::serialize(binary_writer& out) const {
    {
        component_scope scope(out, "params");
        out.put_words(std::vector<uint64_t>{n_, sigma_, rows_, chunks_});
    }
    {
        component_scope scope(out, "alphabet");
        out.put_words(alphabet_);
    }
    {
        component_scope scope(out, "predecessor");
        points_.serialize(out);
    }
    {
        component_scope scope(out, "pairs");
        pairs_.serialize(out);
    }
    {
        component_scope scope(out, "chunk_bitmap");
        a_.serialize(out);
    }
    {
        component_scope scope(out, "columns");
        columns_.serialize(out);
    }
    {
        component_scope scope(out, "plain");
        plain_.serialize(out);
    }
}

rank_reduce_sequence rank_reduce_sequence::deserialize(binary_reader& in) {
    auto p = in.get_words();
    if (p.size() != 4) throw format_error("rankreduce: bad parameter block");
    rank_reduce_sequence s;
    s.n_ = p[0];
    s.sigma_ = p[1];
    s.rows_ = p[2];
    s.chunks_ = p[3];
    if (s.n_ == 0 || s.rows_ == 0 || s.rows_ > s.sigma_ || s.rows_ > s.n_ ||
        s.chunks_ != (s.n_ + s.rows_ - 1) / s.rows_) {
        throw format_error("rankreduce: bad parameters");
    }
    s.alphabet_ = in.get_words();
    s.points_ = predecessor_set::deserialize(in);
    s.pairs_ = packed_sequence::deserialize(in);
    s.a_ = bit_vector::deserialize(in);
    s.columns_ = packed_sequence::deserialize(in);
    s.plain_ = packed_sequence::deserialize(in);
    unsigned const b = std::max(1u, ceil_log2(s.rows_));
    bool const remapped = s.sigma_ > s.n_;
    if ((remapped ? s.alphabet_.size() != s.rows_ : !s.alphabet_.empty()) ||
        s.points_.size() != s.n_ || s.points_.universe() != s.n_ * s.rows_ || s.pairs_.size() != s.n_ ||
        s.pairs_.width() != 2 * b || s.a_.ones() != s.n_ || s.a_.zeros() != s.rows_ * s.chunks_ ||
        s.columns_.size() != s.n_ || s.columns_.width() != b || s.plain_.size() != s.n_ ||
        s.plain_.width() != bits_for(s.sigma_ - 1)) {
        throw format_error("rankreduce: inconsistent component sizes");
    }
    return s;
}

}  // namespace succinct
