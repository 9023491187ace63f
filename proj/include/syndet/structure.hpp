#pragma once

#include <optional>

#include "syndet/ground_set.hpp"

namespace syndet {

struct SyndeticResult {
    bool syndetic = false;
    /// Leftmost full window of length d missing A entirely, when not syndetic.
    std::optional<Interval> empty_window;
};

struct ThickResult {
    bool thick = false;
    /// Leftmost run of the requested length inside A, when thick.
    std::optional<Interval> run;
};

struct PwsWitness {
    std::int64_t d = 0;
    Interval run;
};

struct PwsResult {
    bool piecewise_syndetic = false;
    std::optional<PwsWitness> witness;
};

struct CoverResult {
    bool covered = false;
    /// First position of [1, window_len - d] missed by every shift, when any.
    std::optional<std::int64_t> uncovered;
};

/// Syndetic-with-thick split: S is syndetic (gap bound reported), T is thick,
/// and S intersect T reproduces the input set bit for bit.
struct Decomposition {
    GroundSet s;
    GroundSet t;
    std::int64_t syndetic_gap = 0;
};

struct StructureReport {
    /// Longest run of consecutive absences measured from position 2 onward:
    /// interior runs and runs touching the right edge count in full, a gap
    /// starting at position 1 enters with that first position dropped. With
    /// this rule, cover_by_shifts(A, d) holds exactly when max_gap < d.
    std::int64_t max_gap = 0;
    /// Longest run of consecutive members anywhere in the window.
    std::int64_t longest_run = 0;
};

/// Every full window of length d inside [1, window_len] meets A.
/// Requires 1 <= d <= window_len.
SyndeticResult is_syndetic(const GroundSet& a, std::int64_t d);

/// Some full window of length n lies entirely inside A.
/// Requires 1 <= n <= window_len.
ThickResult is_thick(const GroundSet& a, std::int64_t n);

/// Union of the first d shifts, truncated to the common window
/// [1, window_len - d]: position j is present iff A meets [j+1, j+d].
/// Requires 1 <= d < window_len.
GroundSet union_of_shifts(const GroundSet& a, std::int64_t d);

/// The union of the first d shifts contains a run of length n.
/// Requires d >= 1, n >= 1, d + n <= window_len.
PwsResult is_piecewise_syndetic(const GroundSet& a, std::int64_t d, std::int64_t n);

/// union of shift(A, 1..d) covers every position of [1, window_len - d].
CoverResult cover_by_shifts(const GroundSet& a, std::int64_t d);

/// Splits a piecewise syndetic set as A = S intersect T with S syndetic and
/// T thick at n. Errors if is_piecewise_syndetic(a, d, n) is false.
Decomposition decompose_pws(const GroundSet& a, std::int64_t d, std::int64_t n);

StructureReport structure_report(const GroundSet& a);

}  // namespace syndet
