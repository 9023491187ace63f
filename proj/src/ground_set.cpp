#include "syndet/ground_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace syndet {

namespace {

constexpr std::int64_t kWordBits = 64;

std::int64_t word_count_for(std::int64_t len) {
    return (len + kWordBits - 1) / kWordBits;
}

// Clears bits at positions >= len (0-based) in the last word.
void mask_tail(std::vector<std::uint64_t>& words, std::int64_t len) {
    if (words.empty()) return;
    const std::int64_t used = len % kWordBits;
    if (used != 0) {
        words.back() &= (std::uint64_t{1} << used) - 1;
    }
}

// Reads src as one long bit string and extracts the word starting at bit
// offset `from` (0-based). Bits past the end read as zero.
std::uint64_t word_at(std::span<const std::uint64_t> src, std::int64_t from) {
    const std::int64_t q = from / kWordBits;
    const std::int64_t r = from % kWordBits;
    const auto n = static_cast<std::int64_t>(src.size());
    if (q >= n) return 0;
    std::uint64_t w = src[q] >> r;
    if (r != 0 && q + 1 < n) {
        w |= src[q + 1] << (kWordBits - r);
    }
    return w;
}

}  // namespace

GroundSet::GroundSet(std::int64_t window_len) {
    if (window_len < 1) {
        throw std::invalid_argument("GroundSet: window_len must be >= 1");
    }
    len_ = window_len;
    words_.assign(word_count_for(window_len), 0);
}

GroundSet GroundSet::full(std::int64_t window_len) {
    GroundSet s(window_len);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    mask_tail(s.words_, window_len);
    return s;
}

GroundSet GroundSet::from_members(std::int64_t window_len,
                                  std::span<const std::int64_t> members) {
    GroundSet s(window_len);
    for (std::int64_t m : members) {
        if (m < 1 || m > window_len) {
            throw std::out_of_range("GroundSet: member " + std::to_string(m) +
                                    " outside window [1, " +
                                    std::to_string(window_len) + "]");
        }
        s.words_[(m - 1) / kWordBits] |= std::uint64_t{1} << ((m - 1) % kWordBits);
    }
    return s;
}

GroundSet GroundSet::from_members(std::int64_t window_len,
                                  std::initializer_list<std::int64_t> members) {
    return from_members(window_len,
                        std::span<const std::int64_t>(members.begin(), members.size()));
}

GroundSet GroundSet::from_bits(std::string_view bits) {
    if (bits.empty()) {
        throw std::invalid_argument("GroundSet: empty bit word");
    }
    GroundSet s(static_cast<std::int64_t>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            s.words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
        } else if (bits[i] != '0') {
            throw std::invalid_argument(std::string("GroundSet: bad bit character '") +
                                        bits[i] + "'");
        }
    }
    return s;
}

GroundSet GroundSet::from_words(std::int64_t window_len,
                                std::vector<std::uint64_t> words) {
    GroundSet s(window_len);
    words.resize(static_cast<std::size_t>(word_count_for(window_len)), 0);
    s.words_ = std::move(words);
    mask_tail(s.words_, window_len);
    return s;
}

bool GroundSet::test_bit(std::int64_t idx0) const {
    return (words_[idx0 / kWordBits] >> (idx0 % kWordBits)) & 1u;
}

bool GroundSet::contains(std::int64_t i) const {
    if (i < 1 || i > len_) {
        throw std::out_of_range("GroundSet: position " + std::to_string(i) +
                                " outside window [1, " + std::to_string(len_) + "]");
    }
    return test_bit(i - 1);
}

std::int64_t GroundSet::count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
}

std::int64_t GroundSet::count_range(std::int64_t lo, std::int64_t hi) const {
    lo = std::max<std::int64_t>(lo, 1);
    hi = std::min(hi, len_);
    if (lo > hi) return 0;
    const std::int64_t a = lo - 1, b = hi - 1;  // 0-based inclusive
    const std::int64_t wa = a / kWordBits, wb = b / kWordBits;
    auto masked = [&](std::int64_t w) {
        std::uint64_t v = words_[w];
        if (w == wa) v &= ~std::uint64_t{0} << (a % kWordBits);
        if (w == wb) {
            const std::int64_t used = b % kWordBits + 1;
            if (used != kWordBits) v &= (std::uint64_t{1} << used) - 1;
        }
        return v;
    };
    std::int64_t c = 0;
    for (std::int64_t w = wa; w <= wb; ++w) c += std::popcount(masked(w));
    return c;
}

std::vector<std::int64_t> GroundSet::members() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t v = words_[w];
        while (v != 0) {
            const int bit = std::countr_zero(v);
            out.push_back(static_cast<std::int64_t>(w) * kWordBits + bit + 1);
            v &= v - 1;
        }
    }
    return out;
}

std::optional<std::int64_t> GroundSet::min_member() const { return next_member(1); }

std::optional<std::int64_t> GroundSet::max_member() const {
    for (std::size_t w = words_.size(); w-- > 0;) {
        if (words_[w] != 0) {
            const int top = kWordBits - 1 - std::countl_zero(words_[w]);
            return static_cast<std::int64_t>(w) * kWordBits + top + 1;
        }
    }
    return std::nullopt;
}

std::optional<std::int64_t> GroundSet::next_member(std::int64_t i) const {
    if (i > len_) return std::nullopt;
    i = std::max<std::int64_t>(i, 1);
    std::int64_t w = (i - 1) / kWordBits;
    std::uint64_t v = words_[w] & (~std::uint64_t{0} << ((i - 1) % kWordBits));
    while (true) {
        if (v != 0) {
            return w * kWordBits + std::countr_zero(v) + 1;
        }
        if (++w >= static_cast<std::int64_t>(words_.size())) return std::nullopt;
        v = words_[w];
    }
}

std::vector<std::int64_t> GroundSet::indicator() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(len_), 0);
    for (std::int64_t i = 0; i < len_; ++i) out[i] = test_bit(i) ? 1 : 0;
    return out;
}

GroundSet GroundSet::truncate(std::int64_t new_len) const {
    if (new_len < 1 || new_len > len_) {
        throw std::out_of_range("truncate: new length " + std::to_string(new_len) +
                                " outside [1, " + std::to_string(len_) + "]");
    }
    std::vector<std::uint64_t> w(words_.begin(),
                                 words_.begin() + word_count_for(new_len));
    return from_words(new_len, std::move(w));
}

GroundSet shift(const GroundSet& a, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("shift: negative amount");
    if (n >= a.window_len()) {
        throw std::domain_error("shift: amount " + std::to_string(n) +
                                " leaves an empty window (window_len " +
                                std::to_string(a.window_len()) + ")");
    }
    const std::int64_t new_len = a.window_len() - n;
    std::vector<std::uint64_t> out(static_cast<std::size_t>(word_count_for(new_len)));
    for (std::size_t w = 0; w < out.size(); ++w) {
        out[w] = word_at(a.words(), static_cast<std::int64_t>(w) * kWordBits + n);
    }
    return GroundSet::from_words(new_len, std::move(out));
}

GroundSet boolean_combine(const GroundSet& a, const GroundSet& b, SetOp op) {
    if (op == SetOp::ComplementOfFirst) {
        std::vector<std::uint64_t> out(a.words().begin(), a.words().end());
        for (auto& w : out) w = ~w;
        return GroundSet::from_words(a.window_len(), std::move(out));
    }
    if (a.window_len() != b.window_len()) {
        throw std::invalid_argument(
            "boolean_combine: window lengths differ (" +
            std::to_string(a.window_len()) + " vs " + std::to_string(b.window_len()) + ")");
    }
    std::vector<std::uint64_t> out(a.words().begin(), a.words().end());
    const auto bw = b.words();
    for (std::size_t i = 0; i < out.size(); ++i) {
        switch (op) {
            case SetOp::Union: out[i] |= bw[i]; break;
            case SetOp::Intersect: out[i] &= bw[i]; break;
            case SetOp::SetMinus: out[i] &= ~bw[i]; break;
            case SetOp::ComplementOfFirst: break;  // handled above
        }
    }
    return GroundSet::from_words(a.window_len(), std::move(out));
}

GroundSet set_union(const GroundSet& a, const GroundSet& b) {
    return boolean_combine(a, b, SetOp::Union);
}
GroundSet set_intersect(const GroundSet& a, const GroundSet& b) {
    return boolean_combine(a, b, SetOp::Intersect);
}
GroundSet set_minus(const GroundSet& a, const GroundSet& b) {
    return boolean_combine(a, b, SetOp::SetMinus);
}
GroundSet set_complement(const GroundSet& a) {
    return boolean_combine(a, a, SetOp::ComplementOfFirst);
}

GroundSet difference_set(const GroundSet& a, const GroundSet& b) {
    if (a.window_len() != b.window_len()) {
        throw std::invalid_argument("difference_set: window lengths differ");
    }
    const std::int64_t len = a.window_len();
    std::vector<std::uint64_t> out(static_cast<std::size_t>(word_count_for(len)), 0);
    // a - b = k means k is a member of (A shifted down by b); accumulate over b.
    for (std::int64_t bm : b.members()) {
        for (std::size_t w = 0; w < out.size(); ++w) {
            out[w] |= word_at(a.words(), static_cast<std::int64_t>(w) * kWordBits + bm);
        }
    }
    return GroundSet::from_words(len, std::move(out));
}

GroundSet sumset(const GroundSet& a, const GroundSet& b, std::int64_t clip_len) {
    if (clip_len < 1) throw std::invalid_argument("sumset: clip_len must be >= 1");
    std::vector<std::uint64_t> out(static_cast<std::size_t>(word_count_for(clip_len)), 0);
    // Position a+b corresponds to shifting A's bits up by b.
    for (std::int64_t bm : b.members()) {
        if (bm >= clip_len) continue;  // even the smallest sum would overflow
        for (std::size_t w = out.size(); w-- > 0;) {
            const std::int64_t from = static_cast<std::int64_t>(w) * kWordBits - bm;
            if (from >= 0) {
                out[w] |= word_at(a.words(), from);
            } else if (from > -kWordBits) {
                out[w] |= word_at(a.words(), 0) << (-from);
            }
        }
    }
    return GroundSet::from_words(clip_len, std::move(out));
}

GroundSet finite_sums(std::span<const std::int64_t> seq, std::int64_t clip_len) {
    if (clip_len < 1) throw std::invalid_argument("finite_sums: clip_len must be >= 1");
    if (seq.empty()) throw std::invalid_argument("finite_sums: empty sequence");
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i] < 1) {
            throw std::invalid_argument("finite_sums: entries must be naturals >= 1");
        }
        if (i > 0 && seq[i] <= seq[i - 1]) {
            throw std::invalid_argument(
                "finite_sums: sequence not strictly increasing at index " +
                std::to_string(i + 1));
        }
    }
    GroundSet fs(clip_len);
    for (std::int64_t n : seq) {
        // FS(prefix + n) = FS(prefix) + (FS(prefix) shifted by n) + {n}, clipped.
        GroundSet shifted = n < clip_len ? sumset(fs, GroundSet::from_members(clip_len, {n}), clip_len)
                                         : GroundSet(clip_len);
        fs = set_union(fs, shifted);
        if (n <= clip_len) {
            fs = set_union(fs, GroundSet::from_members(clip_len, {n}));
        }
    }
    return fs;
}

GroundSet finite_sums(std::initializer_list<std::int64_t> seq, std::int64_t clip_len) {
    return finite_sums(std::span<const std::int64_t>(seq.begin(), seq.size()), clip_len);
}

std::string format_set(const GroundSet& a, SetForm form) {
    std::string out = "len=" + std::to_string(a.window_len()) + "\n";
    if (form == SetForm::Bits) {
        out += "bits=";
        std::string bits(static_cast<std::size_t>(a.window_len()), '0');
        for (std::int64_t m : a.members()) bits[static_cast<std::size_t>(m - 1)] = '1';
        out += bits;
    } else {
        out += "list=";
        bool first = true;
        for (std::int64_t m : a.members()) {
            if (!first) out += ',';
            out += std::to_string(m);
            first = false;
        }
    }
    out += '\n';
    return out;
}

namespace {

std::int64_t parse_int(std::string_view tok, std::string_view what) {
    std::int64_t v = 0;
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{} || p != end) {
        throw std::invalid_argument("parse_set: bad " + std::string(what) + " '" +
                                    std::string(tok) + "'");
    }
    return v;
}

}  // namespace

GroundSet parse_set(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        pos = nl + 1;
    }
    if (lines.size() != 2) {
        throw std::invalid_argument("parse_set: expected two lines (len= and bits=/list=)");
    }
    if (!lines[0].starts_with("len=")) {
        throw std::invalid_argument("parse_set: first line must start with len=");
    }
    const std::int64_t len = parse_int(lines[0].substr(4), "window length");
    if (len < 1) throw std::invalid_argument("parse_set: window length must be >= 1");

    if (lines[1].starts_with("bits=")) {
        std::string_view bits = lines[1].substr(5);
        if (static_cast<std::int64_t>(bits.size()) != len) {
            throw std::invalid_argument("parse_set: bit word length " +
                                        std::to_string(bits.size()) +
                                        " does not match len=" + std::to_string(len));
        }
        return GroundSet::from_bits(bits);
    }
    if (lines[1].starts_with("list=")) {
        std::string_view body = lines[1].substr(5);
        std::vector<std::int64_t> ms;
        std::size_t p = 0;
        while (p < body.size()) {
            std::size_t comma = body.find(',', p);
            if (comma == std::string_view::npos) comma = body.size();
            ms.push_back(parse_int(body.substr(p, comma - p), "member"));
            p = comma + 1;
        }
        for (std::size_t i = 1; i < ms.size(); ++i) {
            if (ms[i] == ms[i - 1]) {
                throw std::invalid_argument("parse_set: duplicate member " +
                                            std::to_string(ms[i]));
            }
        }
        std::vector<std::int64_t> sorted = ms;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("parse_set: duplicate member");
        }
        return GroundSet::from_members(len, sorted);
    }
    throw std::invalid_argument("parse_set: second line must start with bits= or list=");
}

}  // namespace syndet
