#pragma once

#include <optional>
#include <span>
#include <string>

#include "syndet/ground_set.hpp"
#include "syndet/rational.hpp"

namespace syndet {

/// Word family over {0,1}: depth 0 is k ones, and each deeper word is two
/// copies of the previous one followed by a single zero. Every word is a
/// prefix of all deeper words, so the family has a well-defined limit bit
/// sequence; fractal_set materializes its prefixes.
struct FractalSpec {
    std::int64_t k = 1;  // ones in the depth-0 block, >= 1
    std::int64_t n = 0;  // recursion depth, >= 0
};

struct FractalStats {
    std::int64_t length = 0;          // (k+1) * 2^n - 1
    std::int64_t ones = 0;            // k * 2^n
    std::int64_t trailing_zeros = 0;  // exactly n
};

struct DensityBound {
    Rational min_density;    // min over N of |A intersect [1,N]| / N
    std::int64_t at_n = 0;   // smallest N achieving it
};

struct GapStructure {
    bool ok = false;
    /// Window length the claim was checked at: (2^n (k+1) - 1 - n) + 2n.
    std::int64_t window_checked = 0;
    /// Offset M of the first window [M+1, M+window] with no zero-run of
    /// length n, when the check fails.
    std::optional<std::int64_t> first_failure = std::nullopt;
};

std::string fractal_word(FractalSpec spec);

/// Length-len prefix of the limit word, as a set of the one-positions.
GroundSet fractal_set(std::int64_t k, std::int64_t len);

/// Closed-form length / ones / trailing-zero counts (no materialization).
FractalStats fractal_stats(FractalSpec spec);

/// Exact minimum prefix density of fractal_set(k, len) over N in [1, len].
DensityBound verify_density_bound(std::int64_t k, std::int64_t len);

/// Checks that every full window of the stated length inside the len-prefix
/// contains a run of at least n consecutive zeros. n = 0 is vacuously true.
GapStructure verify_gap_structure(std::int64_t k, std::int64_t n, std::int64_t len);

/// Union of fractal blocks laid into disjoint intervals of strictly growing
/// length, each padded by its block depth on both sides. The i-th interval
/// [M+1, M+N] receives the depth-n_i word (n_i minimal with word length >= N)
/// placed at offset M + n_i and clipped to [M+1+n_i, M+N-n_i].
GroundSet fill_intervals(std::span<const Interval> intervals, std::int64_t k);

}  // namespace syndet
