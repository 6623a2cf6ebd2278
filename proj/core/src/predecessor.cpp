#include "succinct/predecessor.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <string>

#include "succinct/broadword.hpp"
#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

namespace {

constexpr uint64_t no_child = std::numeric_limits<uint64_t>::max();
constexpr unsigned key_unit = 5;  // lg w - 1
constexpr uint64_t leaf_words = 4;  // sets this small stay packed at any key length

unsigned key_length_for(unsigned bits) {
    unsigned ell = key_unit;
    while (ell < bits) ell *= 2;
    return ell;
}

uint64_t hash_slot(uint64_t key, uint64_t capacity) {
    unsigned const lg = static_cast<unsigned>(std::countr_zero(capacity));
    if (lg == 0) return 0;
    return (key * 0x9E3779B97F4A7C15ULL) >> (64 - lg);
}

}  // namespace

namespace {

std::vector<packed_sequence> to_columns(std::vector<std::array<uint64_t, 5>> const& records) {
    std::vector<packed_sequence> cols;
    for (std::size_t f = 0; f < 5; ++f) {
        std::vector<uint64_t> values(records.size());
        uint64_t top = 0;
        for (std::size_t k = 0; k < records.size(); ++k) {
            values[k] = records[k][f];
            top = std::max(top, values[k]);
        }
        cols.push_back(packed_sequence::from_values(values, bits_for(top)));
    }
    return cols;
}

}  // namespace

struct predecessor_set::builder {
    predecessor_set& set;
    std::vector<std::array<uint64_t, 5>> nodes;
    std::vector<std::array<uint64_t, 5>> slots;
    std::vector<uint64_t> slot_child;
    uint64_t leaf_end = 0;  // bits used in set.leaf_bits_

    uint64_t build(std::span<const uint64_t> keys, unsigned width) {
        uint64_t const index = nodes.size();
        nodes.push_back({});
        fill(index, keys, width);
        return index;
    }

    void fill(uint64_t index, std::span<const uint64_t> keys, unsigned width) {
        if (set.leaf_shape(keys.size(), width)) {
            broadword::packed_write_at_bit(set.leaf_bits_, leaf_end, width, keys);
            nodes[index] = {width, 1, leaf_end, keys.size(), 0};
            leaf_end += keys.size() * (uint64_t{width} + 1);
            return;
        }

        unsigned const half = width / 2;
        uint64_t const low_mask = broadword::low_ones(half);

        // buckets by high half
        std::vector<uint64_t> highs;
        std::vector<uint64_t> starts;
        for (uint64_t k = 0; k < keys.size(); ++k) {
            uint64_t const h = keys[k] >> half;
            if (highs.empty() || highs.back() != h) {
                highs.push_back(h);
                starts.push_back(k);
            }
        }
        starts.push_back(keys.size());

        uint64_t capacity = 2;
        while (2 * capacity < 3 * highs.size()) capacity *= 2;
        uint64_t const first_slot = slots.size();
        slots.resize(first_slot + capacity, {0, 0, 0, 0, 0});
        slot_child.resize(first_slot + capacity, no_child);

        std::vector<uint64_t> inner;
        for (uint64_t b = 0; b < highs.size(); ++b) {
            uint64_t const lo = starts[b];
            uint64_t const hi = starts[b + 1] - 1;
            uint64_t s = hash_slot(highs[b], capacity);
            while (slots[first_slot + s][0] != 0) s = (s + 1) & (capacity - 1);
            slots[first_slot + s] = {highs[b] + 1, keys[lo] & low_mask, lo + 1, keys[hi] & low_mask, hi + 1};
            if (hi > lo + 1) {
                inner.clear();
                for (uint64_t k = lo + 1; k < hi; ++k) inner.push_back(keys[k] & low_mask);
                uint64_t const child = build(inner, half);
                slot_child[first_slot + s] = child;
            }
        }
        uint64_t const summary = build(highs, half);
        nodes[index] = {width, 0, first_slot, capacity, summary};
    }
};

predecessor_set::predecessor_set(std::span<const uint64_t> sorted_keys, uint64_t universe,
                                 predecessor_params params)
    : params_(params), universe_(universe), n_(sorted_keys.size()) {
    if (universe == 0) throw validation_error("predecessor_set: universe must be at least 1");
    if (params_.base_width < key_unit || params_.base_width > 63) {
        throw validation_error("predecessor_set: base_width must be in [5,63]");
    }
    for (uint64_t k = 0; k < n_; ++k) {
        if (sorted_keys[k] < 1 || sorted_keys[k] > universe) {
            throw validation_error("predecessor_set: key " + std::to_string(sorted_keys[k]) +
                                   " outside [1," + std::to_string(universe) + "]");
        }
        if (k > 0 && sorted_keys[k] <= sorted_keys[k - 1]) {
            throw validation_error("predecessor_set: keys must be strictly increasing");
        }
    }

    // keys are stored as key - 1 < u
    key_bits_ = static_cast<unsigned>(std::bit_width(universe - 1));
    part_bits_ = n_ == 0 ? 0 : static_cast<unsigned>(std::bit_width(n_) - 1);
    part_bits_ = std::min(part_bits_, key_bits_);
    low_bits_ = key_bits_ - part_bits_;
    uint64_t const partitions = uint64_t{1} << part_bits_;
    uint64_t const low_mask = broadword::low_ones(low_bits_);

    std::vector<uint64_t> low(n_);
    for (uint64_t k = 0; k < n_; ++k) low[k] = (sorted_keys[k] - 1) & low_mask;
    broadword::packed_write_at_bit(low_keys_, 0, std::max(low_bits_, 1u), low);

    // partition boundaries
    std::vector<uint64_t> begin_of(partitions + 1, 0);
    for (uint64_t k = 0; k < n_; ++k) ++begin_of[((sorted_keys[k] - 1) >> low_bits_) + 1];
    for (uint64_t p = 0; p < partitions; ++p) begin_of[p + 1] += begin_of[p];

    bit_vector_builder sizes;
    bit_vector_builder internal;
    std::vector<uint64_t> roots;
    for (uint64_t p = 0; p < partitions; ++p) {
        uint64_t const c = begin_of[p + 1] - begin_of[p];
        sizes.append(true, c);
        sizes.push_back(false);
        bool const inner = c != 0 && !leaf_shape(c, root_width());
        internal.push_back(inner);
        if (inner) roots.push_back(p);
    }
    sizes_ = std::move(sizes).build();
    internal_ = std::move(internal).build();

    // internal roots occupy node indices [0, roots) in partition order
    builder b{*this, {}, {}, {}, 0};
    b.nodes.resize(roots.size());
    for (uint64_t r = 0; r < roots.size(); ++r) {
        uint64_t const p = roots[r];
        b.fill(r, std::span(low).subspan(begin_of[p], begin_of[p + 1] - begin_of[p]), root_width());
    }
    nodes_ = to_columns(b.nodes);
    slots_ = to_columns(b.slots);

    bit_vector_builder has_child;
    std::vector<uint64_t> children;
    for (uint64_t c : b.slot_child) {
        has_child.push_back(c != no_child);
        if (c != no_child) children.push_back(c);
    }
    has_child_ = std::move(has_child).build();
    children_ = packed_sequence::from_values(children, bits_for(b.nodes.size()));
}

bool predecessor_set::leaf_shape(uint64_t count, unsigned width) const {
    bool const small = count * (uint64_t{width} + 1) <= 64 * leaf_words;
    bool const base = width <= params_.base_width && (count <= params_.leaf_capacity || width <= key_unit);
    return base || small;
}

unsigned predecessor_set::root_width() const { return key_length_for(std::max(low_bits_, 1u)); }

uint64_t predecessor_set::low_key(uint64_t rank) const {
    unsigned const w = std::max(low_bits_, 1u);
    return broadword::packed_key_at_bit(low_keys_, 0, w, rank - 1);
}

predecessor_set::node predecessor_set::node_at(uint64_t index) const {
    return {nodes_[0].get(index), nodes_[1].get(index), nodes_[2].get(index), nodes_[3].get(index),
            nodes_[4].get(index)};
}

predecessor_set::slot predecessor_set::slot_at(uint64_t index, unsigned half) const {
    uint64_t const key = slots_[0].get(index);
    uint64_t const high = (key - 1) << half;
    return {key, high | slots_[1].get(index), slots_[2].get(index), high | slots_[3].get(index),
            slots_[4].get(index)};
}

uint64_t predecessor_set::find(node const& nd, uint64_t high) const {
    uint64_t s = hash_slot(high, nd.count);
    for (uint64_t probes = 0; probes < nd.count; ++probes) {
        uint64_t const key = slots_[0].get(nd.begin + s);
        if (key == 0) break;
        if (key == high + 1) return nd.begin + s;
        s = (s + 1) & (nd.count - 1);
    }
    return nd.begin + nd.count;
}

pred_result predecessor_set::query_node(uint64_t index, uint64_t x) const {
    node const nd = node_at(index);
    auto const width = static_cast<unsigned>(nd.width);
    if (nd.leaf) {
        uint64_t const r = broadword::packed_rank_at_bit(leaf_bits_, nd.begin, nd.count, width, x);
        if (r == 0) return {};
        return {broadword::packed_key_at_bit(leaf_bits_, nd.begin, width, r - 1), r};
    }

    unsigned const half = width / 2;
    uint64_t const high = x >> half;
    uint64_t const at = find(nd, high);
    if (at != nd.begin + nd.count) {
        slot const hit = slot_at(at, half);
        if (x >= hit.min) {
            if (x == hit.min) return {hit.min, hit.min_rank};
            if (x >= hit.max) return {hit.max, hit.max_rank};
            if (!has_child_[at + 1]) return {hit.min, hit.min_rank};
            uint64_t const child = children_.get(has_child_.rank1(at));
            pred_result const r = query_node(child, x & broadword::low_ones(half));
            if (r.rank == 0) return {hit.min, hit.min_rank};
            return {(high << half) | r.value, hit.min_rank + r.rank};
        }
    }

    // no key of this bucket is <= x: answer is the max of the previous bucket
    if (high == 0) return {};
    pred_result const prev = query_node(nd.summary, high - 1);
    if (prev.rank == 0) return {};
    slot const before = slot_at(find(nd, prev.value), half);
    return {before.max, before.max_rank};
}

pred_result predecessor_set::query(uint64_t x) const {
    if (x < 1 || x > universe_) {
        throw range_error("predecessor_set::query: key " + std::to_string(x) + " outside [1," +
                          std::to_string(universe_) + "]");
    }
    if (n_ == 0) return {};
    uint64_t const y = x - 1;
    uint64_t const p = y >> low_bits_;
    uint64_t const xl = y & broadword::low_ones(low_bits_);
    uint64_t const before = p == 0 ? 0 : sizes_.select0(p) - p;
    uint64_t r = 0;
    if (internal_[p + 1]) {
        r = query_node(internal_.rank1(p), xl).rank;
    } else {
        uint64_t const count = sizes_.select0(p + 1) - (p + 1) - before;
        unsigned const w = std::max(low_bits_, 1u);
        r = broadword::packed_rank_at_bit(low_keys_, before * (w + 1), count, w, xl);
    }
    uint64_t const rank = before + r;
    if (rank == 0) return {};
    uint64_t const q = r != 0 ? p : sizes_.select1(rank) - rank;
    return {((q << low_bits_) | low_key(rank)) + 1, rank};
}

uint64_t predecessor_set::size_in_bits() const {
    uint64_t bits = sizes_.payload_bits() + sizes_.directory_bits() + internal_.payload_bits() +
                    internal_.directory_bits() + has_child_.payload_bits() + has_child_.directory_bits() +
                    children_.bits() + 64 * (low_keys_.size() + leaf_bits_.size());
    for (auto const& c : nodes_) bits += c.bits();
    for (auto const& c : slots_) bits += c.bits();
    return bits;
}

void predecessor_set::serialize(binary_writer& out) const {
    out.put_words(std::vector<uint64_t>{universe_, n_, key_bits_, part_bits_, low_bits_,
                                        params_.base_width, params_.leaf_capacity});
    sizes_.serialize(out);
    internal_.serialize(out);
    out.put_words(low_keys_);
    for (auto const& c : nodes_) c.serialize(out);
    for (auto const& c : slots_) c.serialize(out);
    has_child_.serialize(out);
    children_.serialize(out);
    out.put_words(leaf_bits_);
}

predecessor_set predecessor_set::deserialize(binary_reader& in) {
    auto h = in.get_words();
    if (h.size() != 7 || h[2] > 64 || h[3] > h[2] || h[4] != h[2] - h[3] || h[5] < key_unit ||
        h[5] > 63 || h[0] == 0 || h[2] != static_cast<uint64_t>(std::bit_width(h[0] - 1))) {
        throw format_error("predecessor_set: bad header");
    }
    predecessor_set s;
    s.universe_ = h[0];
    s.n_ = h[1];
    s.key_bits_ = static_cast<unsigned>(h[2]);
    s.part_bits_ = static_cast<unsigned>(h[3]);
    s.low_bits_ = static_cast<unsigned>(h[4]);
    s.params_.base_width = static_cast<unsigned>(h[5]);
    s.params_.leaf_capacity = h[6];
    s.sizes_ = bit_vector::deserialize(in);
    s.internal_ = bit_vector::deserialize(in);
    s.low_keys_ = in.get_words();
    for (auto& c : s.nodes_) c = packed_sequence::deserialize(in);
    for (auto& c : s.slots_) c = packed_sequence::deserialize(in);
    s.has_child_ = bit_vector::deserialize(in);
    s.children_ = packed_sequence::deserialize(in);
    s.leaf_bits_ = in.get_words();

    uint64_t const partitions = uint64_t{1} << s.part_bits_;
    uint64_t const nodes = s.nodes_[0].size();
    uint64_t const slots = s.slots_[0].size();
    unsigned const w = std::max(s.low_bits_, 1u);
    bool ok = s.internal_.size() == partitions && s.sizes_.size() == partitions + s.n_ &&
              s.sizes_.ones() == s.n_ && s.low_keys_.size() == (s.n_ * (w + 1) + 63) / 64 &&
              s.has_child_.size() == slots && s.has_child_.ones() == s.children_.size() &&
              s.internal_.ones() <= nodes;
    for (auto const& c : s.nodes_) ok = ok && c.size() == nodes;
    for (auto const& c : s.slots_) ok = ok && c.size() == slots;
    if (!ok) throw format_error("predecessor_set: inconsistent component sizes");

    // a partition's root kind follows from its size
    uint64_t prev_zero = 0;
    for (uint64_t p = 0; p < partitions; ++p) {
        uint64_t const z = s.sizes_.select0(p + 1);
        uint64_t const c = z - prev_zero - 1;
        prev_zero = z;
        if (s.internal_[p + 1] != (c != 0 && !s.leaf_shape(c, s.root_width()))) {
            throw format_error("predecessor_set: partition root kind mismatch");
        }
    }
    for (uint64_t k = 0; k < nodes; ++k) {
        node const nd = s.node_at(k);
        bool good = nd.width >= 1 && nd.width <= 80 && nd.leaf <= 1;
        if (nd.leaf) {
            good = good && nd.width <= 63 && nd.begin + nd.count * (nd.width + 1) <= 64 * s.leaf_bits_.size();
        } else {
            good = good && std::has_single_bit(nd.count) && nd.begin + nd.count <= slots && nd.summary < nodes;
        }
        if (!good) throw format_error("predecessor_set: malformed node");
    }
    for (uint64_t k = 0; k < s.children_.size(); ++k) {
        if (s.children_.get(k) >= nodes) throw format_error("predecessor_set: child index out of range");
    }
    return s;
}

}  // namespace succinct
