#include "succinct/wavelet.hpp"

#include <algorithm>
#include <string>

#include "succinct/broadword.hpp"
#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

namespace {

constexpr uint64_t sparse_flag = uint64_t{1} << 63;

}  // namespace

uint64_t wavelet_sequence::default_block(unsigned ell) {
    uint64_t const group = 64 / ell;
    return (512 + group - 1) / group * group;
}

wavelet_sequence::wavelet_sequence(sequence const& seq, wavelet_params params)
    : n_(seq.size()), sigma_(seq.sigma()), ell_(params.ell) {
    if (ell_ < 2 || ell_ > 8) throw validation_error("wavelet: ell must be in [2,8]");
    if (sigma_ < 1) throw validation_error("wavelet: sigma must be at least 1");
    block_ = params.block == 0 ? default_block(ell_) : params.block;
    if (block_ % (64 / ell_) != 0 || block_ > 65536) {
        throw validation_error("wavelet: block must be a multiple of floor(64/ell) and at most 2^16");
    }

    total_bits_ = std::max(1u, ceil_log2(sigma_));
    unsigned const h = (total_bits_ + ell_ - 1) / ell_;
    unsigned const first = total_bits_ - (h - 1) * ell_;

    std::vector<uint64_t> order(n_);
    for (uint64_t k = 0; k < n_; ++k) order[k] = k;
    std::vector<uint64_t> next(n_);
    std::vector<uint64_t> values(n_);
    auto const symbols = seq.symbols();

    std::vector<uint64_t> starts{0, n_};
    unsigned consumed = 0;
    levels_.resize(h);
    for (unsigned l = 0; l < h; ++l) {
        level& lv = levels_[l];
        unsigned const width = l == 0 ? first : ell_;
        consumed += width;
        lv.shift = total_bits_ - consumed;
        uint64_t const mask = broadword::low_ones(width);
        for (uint64_t k = 0; k < n_; ++k) values[k] = ((symbols[order[k]] - 1) >> lv.shift) & mask;
        lv.digits = packed_sequence::from_values(values, width);
        lv.starts = packed_sequence::from_values(starts, bits_for(n_));
        build_rank_directory(lv);
        build_select_directory(lv);

        if (l + 1 == h) break;
        // stable counting sort by the prefix through this level
        uint64_t const buckets = uint64_t{1} << consumed;
        std::vector<uint64_t> count(buckets + 1, 0);
        for (uint64_t k = 0; k < n_; ++k) ++count[((symbols[order[k]] - 1) >> lv.shift) + 1];
        for (uint64_t b = 0; b < buckets; ++b) count[b + 1] += count[b];
        starts = count;
        for (uint64_t k = 0; k < n_; ++k) {
            uint64_t const p = (symbols[order[k]] - 1) >> lv.shift;
            next[count[p]++] = order[k];
        }
        order.swap(next);
    }
}

void wavelet_sequence::build_rank_directory(level& lv) const {
    uint64_t const r = uint64_t{1} << lv.digits.width();
    uint64_t const sb = superblock_size();
    uint64_t const nblocks = n_ / block_ + 1;
    lv.super.assign((n_ / sb + 1) * r, 0);
    lv.blocks.assign(nblocks * r, 0);
    std::vector<uint64_t> running(r, 0);
    std::vector<uint64_t> base(r, 0);
    for (uint64_t b = 0; b < nblocks; ++b) {
        uint64_t const pos = b * block_;
        if (pos % sb == 0) {
            for (uint64_t d = 0; d < r; ++d) lv.super[(pos / sb) * r + d] = running[d];
            base = running;
        }
        for (uint64_t d = 0; d < r; ++d) lv.blocks[b * r + d] = static_cast<uint16_t>(running[d] - base[d]);
        uint64_t const end = std::min(pos + block_, n_);
        for (uint64_t k = pos; k < end; ++k) ++running[lv.digits.get(k)];
    }
}

void wavelet_sequence::build_select_directory(level& lv) const {
    uint64_t const r = uint64_t{1} << lv.digits.width();
    std::vector<std::vector<uint64_t>> occ(r);
    for (uint64_t k = 0; k < n_; ++k) occ[lv.digits.get(k)].push_back(k);

    unsigned const pos_bits = bits_for(n_);
    std::vector<uint64_t> super_pos, sparse_super, block_start, sparse_block;
    bit_vector_builder block_sparse;
    lv.super_begin.assign(r + 1, 0);
    lv.super_ref.clear();
    for (uint64_t d = 0; d < r; ++d) {
        auto const& o = occ[d];
        lv.super_begin[d] = super_pos.size();
        for (uint64_t s = 0; s < o.size(); s += select_super) {
            uint64_t const e = std::min<uint64_t>(s + select_super, o.size());
            super_pos.push_back(o[s]);
            if (o[e - 1] - o[s] > sparse_super_span) {
                lv.super_ref.push_back(sparse_flag | sparse_super.size());
                sparse_super.insert(sparse_super.end(), o.begin() + s, o.begin() + e);
                continue;
            }
            lv.super_ref.push_back(block_start.size());
            for (uint64_t b = s; b < e; b += select_block) {
                uint64_t const be = std::min<uint64_t>(b + select_block, e);
                block_start.push_back(o[b] - o[s]);
                bool const sparse = o[be - 1] - o[b] > sparse_block_span;
                block_sparse.push_back(sparse);
                if (sparse) {
                    for (uint64_t k = b + 1; k < b + select_block; ++k) {
                        sparse_block.push_back(k < be ? o[k] - o[s] : 0);
                    }
                }
            }
        }
    }
    lv.super_begin[r] = super_pos.size();
    lv.super_pos = packed_sequence::from_values(super_pos, pos_bits);
    lv.sparse_super_pos = packed_sequence::from_values(sparse_super, pos_bits);
    lv.block_start = packed_sequence::from_values(block_start, relative_bits);
    lv.block_sparse = std::move(block_sparse).build();
    lv.sparse_block_pos = packed_sequence::from_values(sparse_block, relative_bits);
}

uint64_t wavelet_sequence::digit_rank(unsigned l, uint64_t d, uint64_t j) const {
    level const& lv = levels_[l - 1];
    unsigned const width = lv.digits.width();
    uint64_t const r = uint64_t{1} << width;
    uint64_t const b = j / block_;
    uint64_t const begin = b * block_;
    uint64_t count = lv.super[(j / superblock_size()) * r + d] + lv.blocks[b * r + d];
    if (j > begin) {
        broadword::field_block const fb{lv.digits.words(), begin * width, width, j - begin};
        count += broadword::count_equal(fb, d);
    }
    return count;
}

uint64_t wavelet_sequence::digit_select(unsigned l, uint64_t d, uint64_t j) const {
    level const& lv = levels_[l - 1];
    uint64_t const k = j - 1;
    uint64_t const si = lv.super_begin[d] + k / select_super;
    uint64_t const ref = lv.super_ref[si];
    uint64_t const in_super = k % select_super;
    if (ref & sparse_flag) return lv.sparse_super_pos.get((ref & ~sparse_flag) + in_super);

    uint64_t const base = lv.super_pos.get(si);
    uint64_t const bi = ref + in_super / select_block;
    uint64_t const start = base + lv.block_start.get(bi);
    uint64_t const in_block = in_super % select_block;
    if (in_block == 0) return start;
    if (lv.block_sparse[bi + 1]) {
        return base + lv.sparse_block_pos.get(lv.block_sparse.rank1(bi) * (select_block - 1) + in_block - 1);
    }
    unsigned const width = lv.digits.width();
    uint64_t const span = std::min(sparse_block_span, n_ - start - 1);
    broadword::field_block const fb{lv.digits.words(), (start + 1) * width, width, span};
    uint64_t const at = broadword::select_equal(fb, d, in_block);
    if (at == 0) throw contract_violation("wavelet: select directory inconsistent with level data");
    return start + at;
}

uint64_t wavelet_sequence::access(uint64_t i) const {
    detail::check_access(n_, i);
    uint64_t pos = i - 1;
    uint64_t prefix = 0;
    for (unsigned l = 1; l <= levels_.size(); ++l) {
        level const& lv = levels_[l - 1];
        uint64_t const d = lv.digits.get(pos);
        uint64_t const child = (prefix << lv.digits.width()) | d;
        if (l < levels_.size()) {
            uint64_t const begin = lv.starts.get(prefix);
            pos = node_begin(l + 1, child) + digit_rank(l, d, pos) - digit_rank(l, d, begin);
        }
        prefix = child;
    }
    return prefix + 1;
}

uint64_t wavelet_sequence::rank(uint64_t a, uint64_t i) const {
    detail::check_rank(n_, sigma_, a, i);
    uint64_t const v = a - 1;
    uint64_t k = i;
    uint64_t prefix = 0;
    for (unsigned l = 1; l <= levels_.size() && k != 0; ++l) {
        level const& lv = levels_[l - 1];
        uint64_t const d = (v >> lv.shift) & broadword::low_ones(lv.digits.width());
        uint64_t const begin = lv.starts.get(prefix);
        k = digit_rank(l, d, begin + k) - digit_rank(l, d, begin);
        prefix = (prefix << lv.digits.width()) | d;
    }
    return k;
}

uint64_t wavelet_sequence::select(uint64_t a, uint64_t j) const {
    detail::check_select_symbol(sigma_, a);
    uint64_t const v = a - 1;
    unsigned const h = height();
    std::vector<uint64_t> begin(h + 1);
    std::vector<uint64_t> before(h + 1);
    uint64_t prefix = 0;
    uint64_t count = n_;
    for (unsigned l = 1; l <= h; ++l) {
        level const& lv = levels_[l - 1];
        uint64_t const d = (v >> lv.shift) & broadword::low_ones(lv.digits.width());
        begin[l] = lv.starts.get(prefix);
        before[l] = digit_rank(l, d, begin[l]);
        count = digit_rank(l, d, begin[l] + count) - before[l];
        prefix = (prefix << lv.digits.width()) | d;
        if (count == 0) break;
    }
    if (j < 1 || j > count) detail::throw_not_found(a, j);

    uint64_t k = j;
    for (unsigned l = h; l >= 1; --l) {
        level const& lv = levels_[l - 1];
        uint64_t const d = (v >> lv.shift) & broadword::low_ones(lv.digits.width());
        k = digit_select(l, d, before[l] + k) - begin[l] + 1;
    }
    return k;
}

std::string wavelet_sequence::params() const {
    return "ell=" + std::to_string(ell_) + ";block=" + std::to_string(block_);
}

uint64_t wavelet_sequence::level_bits() const {
    uint64_t bits = 0;
    for (auto const& lv : levels_) bits += lv.digits.bits();
    return bits;
}

uint64_t wavelet_sequence::rank_directory_bits() const {
    uint64_t bits = 0;
    for (auto const& lv : levels_) bits += 64 * lv.super.size() + 16 * lv.blocks.size();
    return bits;
}

uint64_t wavelet_sequence::select_directory_bits() const {
    uint64_t bits = 0;
    for (auto const& lv : levels_) {
        bits += 64 * lv.super_begin.size() + lv.super_pos.bits() + 64 * lv.super_ref.size() +
                lv.sparse_super_pos.bits() + lv.block_start.bits() + lv.block_sparse.payload_bits() +
                lv.block_sparse.directory_bits() + lv.sparse_block_pos.bits();
    }
    return bits;
}

uint64_t wavelet_sequence::node_bits() const {
    uint64_t bits = 0;
    for (auto const& lv : levels_) bits += lv.starts.bits();
    return bits;
}

void wavelet_sequence::serialize(binary_writer& out) const {
    {
        component_scope scope(out, "params");
        out.put_words(std::vector<uint64_t>{n_, sigma_, ell_, block_, select_super, select_block,
                                            sparse_super_span, sparse_block_span, relative_bits});
    }
    {
        component_scope scope(out, "levels");
        for (auto const& lv : levels_) lv.digits.serialize(out);
    }
    {
        component_scope scope(out, "nodes");
        for (auto const& lv : levels_) lv.starts.serialize(out);
    }
    {
        component_scope scope(out, "rank_directory");
        for (auto const& lv : levels_) {
            out.put_words(lv.super);
            out.put_array(lv.blocks);
        }
    }
    {
        component_scope scope(out, "select_directory");
        for (auto const& lv : levels_) {
            out.put_words(lv.super_begin);
            lv.super_pos.serialize(out);
            out.put_words(lv.super_ref);
            lv.sparse_super_pos.serialize(out);
            lv.block_start.serialize(out);
            lv.block_sparse.serialize(out);
            lv.sparse_block_pos.serialize(out);
        }
    }
}

wavelet_sequence wavelet_sequence::deserialize(binary_reader& in) {
    auto p = in.get_words();
    if (p.size() != 9) throw format_error("wavelet: bad parameter block");
    if (p[4] != select_super || p[5] != select_block || p[6] != sparse_super_span ||
        p[7] != sparse_block_span || p[8] != relative_bits) {
        throw format_error("wavelet: unsupported select directory constants");
    }
    wavelet_sequence w;
    w.n_ = p[0];
    w.sigma_ = p[1];
    w.ell_ = static_cast<unsigned>(p[2]);
    w.block_ = p[3];
    if (w.sigma_ < 1 || w.ell_ < 2 || w.ell_ > 8 || w.block_ == 0 || w.block_ % (64 / w.ell_) != 0 ||
        w.block_ > 65536) {
        throw format_error("wavelet: bad parameters");
    }
    w.total_bits_ = std::max(1u, ceil_log2(w.sigma_));
    unsigned const h = (w.total_bits_ + w.ell_ - 1) / w.ell_;
    unsigned const first = w.total_bits_ - (h - 1) * w.ell_;
    w.levels_.resize(h);

    unsigned consumed = 0;
    for (unsigned l = 0; l < h; ++l) {
        level& lv = w.levels_[l];
        lv.digits = packed_sequence::deserialize(in);
        unsigned const width = l == 0 ? first : w.ell_;
        if (lv.digits.width() != width || lv.digits.size() != w.n_) {
            throw format_error("wavelet: level " + std::to_string(l + 1) + " has the wrong shape");
        }
        lv.shift = w.total_bits_ - consumed - width;
        consumed += width;
    }
    consumed = 0;
    for (unsigned l = 0; l < h; ++l) {
        level& lv = w.levels_[l];
        lv.starts = packed_sequence::deserialize(in);
        if (lv.starts.size() != (uint64_t{1} << consumed) + 1) throw format_error("wavelet: bad node offsets");
        for (uint64_t k = 0; k < lv.starts.size(); ++k) {
            if (lv.starts.get(k) > w.n_ || (k > 0 && lv.starts.get(k) < lv.starts.get(k - 1))) {
                throw format_error("wavelet: node offsets out of order");
            }
        }
        consumed += lv.digits.width();
    }
    uint64_t const sb = w.superblock_size();
    for (auto& lv : w.levels_) {
        uint64_t const r = uint64_t{1} << lv.digits.width();
        lv.super = in.get_words();
        lv.blocks = in.get_array<uint16_t>();
        if (lv.super.size() != (w.n_ / sb + 1) * r || lv.blocks.size() != (w.n_ / w.block_ + 1) * r) {
            throw format_error("wavelet: rank directory has the wrong size");
        }
    }
    for (unsigned l = 1; l <= h; ++l) {
        level& lv = w.levels_[l - 1];
        uint64_t const r = uint64_t{1} << lv.digits.width();
        lv.super_begin = in.get_words();
        lv.super_pos = packed_sequence::deserialize(in);
        lv.super_ref = in.get_words();
        lv.sparse_super_pos = packed_sequence::deserialize(in);
        lv.block_start = packed_sequence::deserialize(in);
        lv.block_sparse = bit_vector::deserialize(in);
        lv.sparse_block_pos = packed_sequence::deserialize(in);
        if (lv.super_begin.size() != r + 1 || lv.super_begin.back() != lv.super_pos.size() ||
            lv.super_ref.size() != lv.super_pos.size()) {
            throw format_error("wavelet: select superblock tables have the wrong size");
        }
        if (lv.block_sparse.size() != lv.block_start.size() ||
            lv.sparse_block_pos.size() != lv.block_sparse.ones() * (select_block - 1)) {
            throw format_error("wavelet: select block tables have the wrong size");
        }
        for (uint64_t d = 0; d < r; ++d) {
            uint64_t const total = w.digit_rank(l, d, w.n_);
            if (lv.super_begin[d] > lv.super_begin[d + 1] ||
                lv.super_begin[d + 1] - lv.super_begin[d] != (total + select_super - 1) / select_super) {
                throw format_error("wavelet: select directory disagrees with digit counts");
            }
        }
        for (uint64_t ref : lv.super_ref) {
            bool const ok = (ref & sparse_flag) ? (ref & ~sparse_flag) < lv.sparse_super_pos.size()
                                                : ref < lv.block_start.size();
            if (!ok) throw format_error("wavelet: select superblock reference out of range");
        }
    }
    return w;
}

}  // namespace succinct
