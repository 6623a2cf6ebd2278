#include "succinct/alphabet_partition.hpp"

#include <algorithm>
#include <string>

#include "succinct/errors.hpp"
#include "succinct/serialize.hpp"

namespace succinct {

namespace {

enum member_kind : uint64_t { trivial = 0, wavelet_member = 1, golynski_member = 2 };

}  // namespace

alphabet_partition::alphabet_partition() = default;
alphabet_partition::~alphabet_partition() = default;
alphabet_partition::alphabet_partition(alphabet_partition&&) noexcept = default;
alphabet_partition& alphabet_partition::operator=(alphabet_partition&&) noexcept = default;

uint64_t alphabet_partition::class_value(uint64_t n, uint64_t count) {
    uint64_t k = 0;
    while ((count << k) < n) ++k;
    return k;
}

alphabet_partition::alphabet_partition(sequence const& seq, alphabet_partition_params params)
    : n_(seq.size()), sigma_(seq.sigma()), params_(params) {
    if (n_ == 0) throw validation_error("apcompress: empty sequence");
    if (params_.max_classes == 0) throw validation_error("apcompress: max_classes must be positive");
    auto const hist = seq.histogram();

    std::vector<uint64_t> values;
    for (uint64_t a = 1; a <= sigma_; ++a) {
        if (hist[a] != 0) values.push_back(class_value(n_, hist[a]));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() > params_.max_classes) values.resize(params_.max_classes);
    classes_ = values.size();

    bool absent = false;
    std::vector<uint64_t> cls(sigma_ + 1, 0);
    class_sizes_.assign(classes_, 0);
    for (uint64_t a = 1; a <= sigma_; ++a) {
        if (hist[a] == 0) {
            cls[a] = classes_ + 1;
            absent = true;
            continue;
        }
        uint64_t const v = std::min(class_value(n_, hist[a]), values.back());
        cls[a] = static_cast<uint64_t>(std::lower_bound(values.begin(), values.end(), v) - values.begin()) + 1;
        ++class_sizes_[cls[a] - 1];
    }
    map_ = wavelet_sequence(sequence(std::vector<uint64_t>(cls.begin() + 1, cls.end()), classes_ + absent),
                            params_.wavelet);

    // local id: rank of the symbol among the symbols of its class
    std::vector<uint64_t> local(sigma_ + 1, 0);
    {
        std::vector<uint64_t> next(classes_ + 2, 0);
        for (uint64_t a = 1; a <= sigma_; ++a) local[a] = ++next[cls[a]];
    }

    auto const symbols = seq.symbols();
    std::vector<std::vector<uint64_t>> sub(classes_);
    std::vector<uint64_t> kseq(n_);
    for (uint64_t i = 0; i < n_; ++i) {
        uint64_t const c = cls[symbols[i]];
        kseq[i] = c;
        sub[c - 1].push_back(local[symbols[i]]);
    }
    if (classes_ > 1) class_seq_ = std::make_unique<huffman_sequence>(sequence(std::move(kseq), classes_));

    members_.resize(classes_);
    for (uint64_t c = 0; c < classes_; ++c) {
        uint64_t const s = class_sizes_[c];
        if (s == 1) continue;
        sequence part(std::move(sub[c]), s);
        if (s >= params_.golynski_threshold) {
            golynski_params gp = params_.golynski;
            gp.sampling_sigma = sigma_;
            members_[c] = std::make_unique<golynski_sequence>(part, gp);
        } else {
            members_[c] = std::make_unique<wavelet_sequence>(part, params_.wavelet);
        }
    }
}

uint64_t alphabet_partition::class_of(uint64_t a) const {
    uint64_t const c = map_.access(a);
    return c > classes_ ? 0 : c;
}

uint64_t alphabet_partition::class_rank(uint64_t c, uint64_t i) const {
    return class_seq_ ? class_seq_->rank(c, i) : i;
}

uint64_t alphabet_partition::class_length(uint64_t c) const { return class_rank(c, n_); }

std::optional<backend_tag> alphabet_partition::member_backend(uint64_t c) const {
    if (!members_[c - 1]) return std::nullopt;
    return members_[c - 1]->tag();
}

uint64_t alphabet_partition::access(uint64_t i) const {
    detail::check_access(n_, i);
    uint64_t const c = class_seq_ ? class_seq_->access(i) : 1;
    auto const& m = members_[c - 1];
    uint64_t const local = m ? m->access(class_rank(c, i)) : 1;
    return map_.select(c, local);
}

uint64_t alphabet_partition::rank(uint64_t a, uint64_t i) const {
    detail::check_rank(n_, sigma_, a, i);
    uint64_t const c = class_of(a);
    if (c == 0 || i == 0) return 0;
    uint64_t const k = class_rank(c, i);
    auto const& m = members_[c - 1];
    if (!m || k == 0) return k;
    return m->rank(map_.rank(c, a), k);
}

uint64_t alphabet_partition::select(uint64_t a, uint64_t j) const {
    detail::check_select_symbol(sigma_, a);
    uint64_t const c = class_of(a);
    if (c == 0 || j == 0) detail::throw_not_found(a, j);
    auto const& m = members_[c - 1];
    uint64_t p = j;
    if (m) {
        try {
            p = m->select(map_.rank(c, a), j);
        } catch (not_found_error const&) {
            detail::throw_not_found(a, j);
        }
    } else if (j > class_length(c)) {
        detail::throw_not_found(a, j);
    }
    return class_seq_ ? class_seq_->select(c, p) : p;
}

std::string alphabet_partition::params() const {
    return "classes=" + std::to_string(classes_) + ";threshold=" + std::to_string(params_.golynski_threshold) +
           ";ell=" + std::to_string(params_.wavelet.ell) + ";f=" + std::to_string(params_.golynski.f);
}

void alphabet_partition::serialize(binary_writer& out) const {
    {
        component_scope scope(out, "params");
        out.put_words(std::vector<uint64_t>{n_, sigma_, classes_, params_.golynski_threshold, params_.max_classes,
                                            params_.wavelet.ell, params_.wavelet.block,
                                            static_cast<uint64_t>(params_.golynski.mode), params_.golynski.f});
        out.put_words(class_sizes_);
    }
    {
        component_scope scope(out, "class_map");
        map_.serialize(out);
    }
    if (class_seq_) {
        component_scope scope(out, "class_sequence");
        class_seq_->serialize(out);
    }
    component_scope scope(out, "members");
    for (auto const& m : members_) {
        if (!m) {
            out.put_words(std::vector<uint64_t>{trivial});
            continue;
        }
        bool const is_wavelet = m->tag() == backend_tag::wavelet;
        out.put_words(std::vector<uint64_t>{is_wavelet ? wavelet_member : golynski_member});
        m->serialize(out);
    }
}

alphabet_partition alphabet_partition::deserialize(binary_reader& in) {
    auto p = in.get_words();
    if (p.size() != 9 || p[7] > 1) throw format_error("apcompress: bad parameter block");
    alphabet_partition s;
    s.n_ = p[0];
    s.sigma_ = p[1];
    s.classes_ = p[2];
    s.params_.golynski_threshold = p[3];
    s.params_.max_classes = p[4];
    s.params_.wavelet.ell = static_cast<unsigned>(p[5]);
    s.params_.wavelet.block = p[6];
    s.params_.golynski.mode = static_cast<golynski_mode>(p[7]);
    s.params_.golynski.f = static_cast<unsigned>(p[8]);
    s.class_sizes_ = in.get_words();
    if (s.n_ == 0 || s.classes_ == 0 || s.classes_ > s.params_.max_classes ||
        s.class_sizes_.size() != s.classes_) {
        throw format_error("apcompress: bad parameters");
    }
    s.map_ = wavelet_sequence::deserialize(in);
    if (s.map_.size() != s.sigma_ || s.map_.sigma() < s.classes_ || s.map_.sigma() > s.classes_ + 1) {
        throw format_error("apcompress: class map has the wrong shape");
    }
    if (s.classes_ > 1) {
        s.class_seq_ = std::make_unique<huffman_sequence>(huffman_sequence::deserialize(in));
        if (s.class_seq_->size() != s.n_ || s.class_seq_->sigma() != s.classes_) {
            throw format_error("apcompress: class sequence has the wrong shape");
        }
    }
    s.members_.resize(s.classes_);
    for (uint64_t c = 0; c < s.classes_; ++c) {
        auto kind = in.get_words();
        if (kind.size() != 1 || kind[0] > golynski_member) throw format_error("apcompress: bad member kind");
        if (kind[0] == wavelet_member) {
            s.members_[c] = std::make_unique<wavelet_sequence>(wavelet_sequence::deserialize(in));
        } else if (kind[0] == golynski_member) {
            s.members_[c] = std::make_unique<golynski_sequence>(golynski_sequence::deserialize(in));
        }
        bool const ok = s.members_[c] ? s.members_[c]->sigma() == s.class_sizes_[c] &&
                                            s.members_[c]->size() == s.class_length(c + 1)
                                      : s.class_sizes_[c] == 1;
        if (!ok) throw format_error("apcompress: member " + std::to_string(c + 1) + " has the wrong shape");
    }
    return s;
}

}  // namespace succinct
