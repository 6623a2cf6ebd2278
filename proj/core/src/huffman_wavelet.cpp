#include "succinct/huffman_wavelet.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "succinct/errors.hpp"
#include "succinct/packed_sequence.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

namespace {

constexpr unsigned max_code_length = 64;

// Huffman code lengths; ties broken by creation order so the result is
// deterministic.
std::vector<uint8_t> code_lengths(std::vector<uint64_t> const& hist, uint64_t sigma) {
    using item = std::tuple<uint64_t, uint64_t, uint64_t>;  // weight, order, node
    std::priority_queue<item, std::vector<item>, std::greater<item>> heap;
    std::vector<uint64_t> parent;
    std::vector<uint64_t> leaf_node(sigma + 1, 0);
    for (uint64_t a = 1; a <= sigma; ++a) {
        if (hist[a] == 0) continue;
        leaf_node[a] = parent.size();
        heap.emplace(hist[a], parent.size(), parent.size());
        parent.push_back(0);
    }
    while (heap.size() > 1) {
        auto const [w1, o1, x] = heap.top();
        heap.pop();
        auto const [w2, o2, y] = heap.top();
        heap.pop();
        uint64_t const z = parent.size();
        parent.push_back(z);
        parent[x] = z;
        parent[y] = z;
        heap.emplace(w1 + w2, z, z);
    }
    std::vector<uint64_t> depth(parent.size(), 0);
    for (uint64_t v = parent.size(); v-- > 0;) {
        if (parent[v] != v) depth[v] = depth[parent[v]] + 1;
    }
    std::vector<uint8_t> lengths(sigma, 0);
    for (uint64_t a = 1; a <= sigma; ++a) {
        if (hist[a] == 0) continue;
        uint64_t const d = depth[leaf_node[a]];
        if (d > max_code_length) throw contract_violation("huffman_sequence: code longer than a word");
        lengths[a - 1] = static_cast<uint8_t>(d);
    }
    return lengths;
}

}  // namespace

huffman_sequence::huffman_sequence(sequence const& seq) : n_(seq.size()), sigma_(seq.sigma()) {
    if (n_ == 0) throw validation_error("huffman_sequence: empty sequence");
    auto const hist = seq.histogram();
    lengths_ = code_lengths(hist, sigma_);
    for (uint64_t a = 1; a <= sigma_; ++a) {
        if (hist[a] != 0) only_ = only_ == 0 ? a : ~uint64_t{0};
    }
    if (only_ == ~uint64_t{0}) only_ = 0;
    build_tree();

    std::vector<bit_vector_builder> builders(child_.size() / 2);
    for (uint64_t a : seq.symbols()) {
        uint64_t node = 0;
        for (unsigned d = 0; d < lengths_[a - 1]; ++d) {
            int const b = bit_of(a, d);
            builders[node].push_back(b != 0);
            node = static_cast<uint64_t>(child_[2 * node + static_cast<uint64_t>(b)]);
        }
    }
    bits_.reserve(builders.size());
    for (auto& b : builders) bits_.push_back(std::move(b).build());
}

void huffman_sequence::build_tree() {
    std::vector<uint64_t> order(sigma_);
    std::iota(order.begin(), order.end(), uint64_t{1});
    std::stable_sort(order.begin(), order.end(),
                     [&](uint64_t x, uint64_t y) { return lengths_[x - 1] < lengths_[y - 1]; });
    codes_.assign(sigma_, 0);
    child_.clear();
    uint64_t code = 0;
    unsigned prev = 0;
    bool first = true;
    for (uint64_t a : order) {
        unsigned const len = lengths_[a - 1];
        if (len == 0) continue;
        if (!first) ++code;
        first = false;
        code <<= (len - prev);
        prev = len;
        if (len < 64 && (code >> len) != 0) throw format_error("huffman_sequence: code lengths are not a prefix code");
        codes_[a - 1] = code;
        if (child_.empty()) child_.assign(2, 0);
        uint64_t node = 0;
        for (unsigned d = 0; d < len; ++d) {
            int64_t& slot = child_[2 * node + static_cast<uint64_t>(bit_of(a, d))];
            if (d + 1 == len) {
                if (slot != 0) throw format_error("huffman_sequence: code lengths are not a prefix code");
                slot = -static_cast<int64_t>(a);
                break;
            }
            if (slot < 0) throw format_error("huffman_sequence: code lengths are not a prefix code");
            if (slot == 0) {
                slot = static_cast<int64_t>(child_.size() / 2);
                child_.push_back(0);
                child_.push_back(0);
            }
            node = static_cast<uint64_t>(child_[2 * node + static_cast<uint64_t>(bit_of(a, d))]);
        }
    }
    if (std::find(child_.begin(), child_.end(), 0) != child_.end()) {
        throw format_error("huffman_sequence: code is not complete");
    }
}

uint64_t huffman_sequence::access(uint64_t i) const {
    detail::check_access(n_, i);
    if (single()) return only_;
    uint64_t node = 0;
    uint64_t pos = i;
    for (;;) {
        bit_vector const& bv = bits_[node];
        bool const b = bv[pos];
        pos = b ? bv.rank1(pos) : bv.rank0(pos);
        int64_t const next = child_[2 * node + b];
        if (next < 0) return static_cast<uint64_t>(-next);
        node = static_cast<uint64_t>(next);
    }
}

uint64_t huffman_sequence::rank(uint64_t a, uint64_t i) const {
    detail::check_rank(n_, sigma_, a, i);
    if (single()) return a == only_ ? i : 0;
    unsigned const len = lengths_[a - 1];
    if (len == 0) return 0;
    uint64_t node = 0;
    uint64_t pos = i;
    for (unsigned d = 0; d < len && pos != 0; ++d) {
        int const b = bit_of(a, d);
        pos = b ? bits_[node].rank1(pos) : bits_[node].rank0(pos);
        node = static_cast<uint64_t>(child_[2 * node + static_cast<uint64_t>(b)]);
    }
    return pos;
}

uint64_t huffman_sequence::select(uint64_t a, uint64_t j) const {
    detail::check_select_symbol(sigma_, a);
    if (single()) {
        if (a != only_ || j < 1 || j > n_) detail::throw_not_found(a, j);
        return j;
    }
    unsigned const len = lengths_[a - 1];
    if (len == 0 || j < 1) detail::throw_not_found(a, j);
    uint64_t path[max_code_length];
    uint64_t node = 0;
    uint64_t count = n_;
    for (unsigned d = 0; d < len; ++d) {
        path[d] = node;
        int const b = bit_of(a, d);
        count = b ? bits_[node].rank1(count) : bits_[node].rank0(count);
        if (d + 1 < len) node = static_cast<uint64_t>(child_[2 * node + static_cast<uint64_t>(b)]);
    }
    if (j > count) detail::throw_not_found(a, j);
    for (unsigned d = len; d-- > 0;) j = bits_[path[d]].select(bit_of(a, d) != 0, j);
    return j;
}

void huffman_sequence::serialize(binary_writer& out) const {
    {
        component_scope scope(out, "params");
        out.put_words(std::vector<uint64_t>{n_, sigma_, only_});
    }
    {
        component_scope scope(out, "code_lengths");
        std::vector<uint64_t> v(lengths_.begin(), lengths_.end());
        packed_sequence::from_values(v, bits_for(max_code_length)).serialize(out);
    }
    component_scope scope(out, "bitvectors");
    for (auto const& bv : bits_) bv.serialize(out);
}

huffman_sequence huffman_sequence::deserialize(binary_reader& in) {
    auto const p = in.get_words();
    if (p.size() != 3 || p[0] == 0 || p[1] == 0 || p[2] > p[1]) throw format_error("huffman_sequence: bad parameter block");
    huffman_sequence h;
    h.n_ = p[0];
    h.sigma_ = p[1];
    h.only_ = p[2];
    auto const lengths = packed_sequence::deserialize(in);
    if (lengths.size() != h.sigma_) throw format_error("huffman_sequence: code length table has the wrong size");
    h.lengths_.resize(h.sigma_);
    unsigned used = 0;
    for (uint64_t a = 0; a < h.sigma_; ++a) {
        uint64_t const len = lengths.get(a);
        if (len > max_code_length) throw format_error("huffman_sequence: code too long");
        h.lengths_[a] = static_cast<uint8_t>(len);
        used += len != 0;
    }
    if ((h.only_ != 0) != (used == 0)) throw format_error("huffman_sequence: inconsistent single-symbol flag");
    if (used == 1) throw format_error("huffman_sequence: a lone symbol must have an empty code");
    h.build_tree();
    uint64_t const nodes = h.child_.size() / 2;
    h.bits_.reserve(nodes);
    for (uint64_t k = 0; k < nodes; ++k) h.bits_.push_back(bit_vector::deserialize(in));
    // Node sizes follow from the root length and the bit counts of parents.
    std::vector<uint64_t> expected(nodes, 0);
    if (nodes > 0) expected[0] = h.n_;
    for (uint64_t k = 0; k < nodes; ++k) {
        if (h.bits_[k].size() != expected[k]) throw format_error("huffman_sequence: node length mismatch");
        for (int b = 0; b < 2; ++b) {
            int64_t const c = h.child_[2 * k + static_cast<uint64_t>(b)];
            uint64_t const len = b ? h.bits_[k].ones() : h.bits_[k].zeros();
            if (c > 0) {
                expected[static_cast<uint64_t>(c)] = len;
            } else if (len == 0) {
                throw format_error("huffman_sequence: symbol with a code but no occurrences");
            }
        }
    }
    return h;
}

}  // namespace succinct
