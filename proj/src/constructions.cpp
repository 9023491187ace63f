#include "syndet/constructions.hpp"

#include <stdexcept>
#include <vector>

namespace syndet {

namespace {

// Hard ceiling on materialized word length; keeps runaway depths from
// exhausting memory before the arithmetic even overflows.
constexpr std::int64_t kMaxWordLen = std::int64_t{1} << 31;

void check_spec(std::int64_t k, std::int64_t n) {
    if (k < 1) throw std::invalid_argument("fractal: k must be >= 1");
    if (n < 0) throw std::invalid_argument("fractal: depth must be >= 0");
}

// (k+1) * 2^n - 1 with an overflow guard.
std::int64_t word_length(std::int64_t k, std::int64_t n) {
    check_spec(k, n);
    std::int64_t len = k + 1;
    for (std::int64_t i = 0; i < n; ++i) {
        if (len > kMaxWordLen / 2) {
            throw std::overflow_error("fractal: word length for k=" +
                                      std::to_string(k) + ", n=" + std::to_string(n) +
                                      " exceeds the supported size");
        }
        len *= 2;
    }
    return len - 1;
}

std::string word_prefix(std::int64_t k, std::int64_t min_len) {
    std::string w(static_cast<std::size_t>(k), '1');
    while (static_cast<std::int64_t>(w.size()) < min_len) {
        if (static_cast<std::int64_t>(w.size()) > kMaxWordLen / 2) {
            throw std::overflow_error("fractal: requested prefix exceeds the supported size");
        }
        w += w;
        w += '0';
    }
    return w;
}

}  // namespace

std::string fractal_word(FractalSpec spec) {
    const std::int64_t len = word_length(spec.k, spec.n);
    std::string w(static_cast<std::size_t>(spec.k), '1');
    for (std::int64_t i = 0; i < spec.n; ++i) {
        w += w;
        w += '0';
    }
    if (static_cast<std::int64_t>(w.size()) != len) {
        throw std::logic_error("fractal_word: length mismatch");
    }
    return w;
}

GroundSet fractal_set(std::int64_t k, std::int64_t len) {
    check_spec(k, 0);
    if (len < 1) throw std::invalid_argument("fractal_set: len must be >= 1");
    if (len > kMaxWordLen) {
        throw std::overflow_error("fractal_set: len exceeds the supported size");
    }
    std::string w = word_prefix(k, len);
    w.resize(static_cast<std::size_t>(len));
    return GroundSet::from_bits(w);
}

FractalStats fractal_stats(FractalSpec spec) {
    FractalStats st;
    st.length = word_length(spec.k, spec.n);
    st.ones = (st.length + 1) / (spec.k + 1) * spec.k;  // k * 2^n
    st.trailing_zeros = spec.n;
    return st;
}

DensityBound verify_density_bound(std::int64_t k, std::int64_t len) {
    const GroundSet a = fractal_set(k, len);
    std::int64_t count = a.contains(1) ? 1 : 0;
    std::int64_t best_num = count, best_den = 1;
    std::int64_t best_n = 1;
    for (std::int64_t n = 2; n <= len; ++n) {
        if (a.contains(n)) ++count;
        // exact comparison count/n < best_num/best_den; strict, so ties keep
        // the smallest achieving N
        if (count * best_den < best_num * n) {
            best_num = count;
            best_den = n;
            best_n = n;
        }
    }
    return DensityBound{Rational(best_num, best_den), best_n};
}

GapStructure verify_gap_structure(std::int64_t k, std::int64_t n, std::int64_t len) {
    check_spec(k, n);
    if (n == 0) {
        // A zero-length run sits inside every window.
        return GapStructure{true, word_length(k, 0), std::nullopt};
    }
    const std::int64_t window = (word_length(k, n) - n) + 2 * n;
    if (len < window) {
        throw std::domain_error("verify_gap_structure: prefix length " +
                                std::to_string(len) + " shorter than the checked window " +
                                std::to_string(window));
    }
    if (len > kMaxWordLen) {
        throw std::overflow_error("verify_gap_structure: len exceeds the supported size");
    }
    std::string w = word_prefix(k, len);
    w.resize(static_cast<std::size_t>(len));

    // starts[s] = 1 when a zero-run of length >= n begins at position s+1.
    // Prefix sums make the per-window existence test O(1).
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(len) + 1, 0);
    std::int64_t zeros_ahead = 0;
    std::vector<std::int8_t> starts(static_cast<std::size_t>(len), 0);
    for (std::int64_t i = len; i >= 1; --i) {
        zeros_ahead = (w[static_cast<std::size_t>(i - 1)] == '0') ? zeros_ahead + 1 : 0;
        if (zeros_ahead >= n) starts[static_cast<std::size_t>(i - 1)] = 1;
    }
    for (std::int64_t i = 1; i <= len; ++i) {
        prefix[static_cast<std::size_t>(i)] =
            prefix[static_cast<std::size_t>(i - 1)] + starts[static_cast<std::size_t>(i - 1)];
    }
    for (std::int64_t m = 0; m + window <= len; ++m) {
        // A run inside [m+1, m+window] must start no later than position
        // m + window - n + 1.
        const std::int64_t lo = m + 1, hi = m + window - n + 1;
        if (prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo - 1)] == 0) {
            return GapStructure{false, window, m};
        }
    }
    return GapStructure{true, window, std::nullopt};
}

GroundSet fill_intervals(std::span<const Interval> intervals, std::int64_t k) {
    check_spec(k, 0);
    if (intervals.empty()) return GroundSet(1);
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const Interval& iv = intervals[i];
        if (iv.start < 0 || iv.length < 1) {
            throw std::invalid_argument("fill_intervals: malformed interval at index " +
                                        std::to_string(i + 1));
        }
        if (i > 0) {
            if (intervals[i - 1].last() >= iv.first()) {
                throw std::invalid_argument(
                    "fill_intervals: intervals overlap or are out of order at index " +
                    std::to_string(i + 1));
            }
            if (intervals[i - 1].length >= iv.length) {
                throw std::invalid_argument(
                    "fill_intervals: interval lengths must strictly increase at index " +
                    std::to_string(i + 1));
            }
        }
    }

    const std::int64_t total_len = intervals.back().last();
    // Depths are monotone in interval length, so the deepest word is enough;
    // every shallower word is one of its prefixes.
    std::int64_t max_depth = 0;
    std::vector<std::int64_t> depths;
    depths.reserve(intervals.size());
    for (const Interval& iv : intervals) {
        std::int64_t d = 0;
        while (word_length(k, d) < iv.length) ++d;
        depths.push_back(d);
        max_depth = std::max(max_depth, d);
    }
    const std::string word = fractal_word(FractalSpec{k, max_depth});

    std::vector<std::int64_t> members;
    for (std::size_t i = 0; i < intervals.size(); ++i) {
        const Interval& iv = intervals[i];
        const std::int64_t pad = depths[i];
        for (std::int64_t p = iv.first() + pad; p <= iv.last() - pad; ++p) {
            const std::int64_t word_pos = p - iv.start - pad;  // 1-based in the block
            if (word[static_cast<std::size_t>(word_pos - 1)] == '1') {
                members.push_back(p);
            }
        }
    }
    return GroundSet::from_members(total_len, members);
}

}  // namespace syndet
