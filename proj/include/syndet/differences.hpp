#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "syndet/ground_set.hpp"
#include "syndet/rational.hpp"
#include "syndet/structure.hpp"

namespace syndet {

/// Shifts n_1 < ... < n_k of a base set whose translates are pairwise
/// disjoint on the trimmed window [1, verified_window].
struct ShiftFamily {
    std::vector<std::int64_t> shifts;
    std::int64_t shift_bound = 0;
    std::int64_t verified_window = 0;  // window_len - shift_bound
};

/// Greedy family: candidates 0..shift_bound in increasing order, each kept
/// when its translate stays disjoint from the union so far on the trimmed
/// window. The result is maximal: every rejected candidate conflicts with a
/// kept one. With exact = true (window_len <= 64 only) a branch-and-bound
/// search returns a maximum-cardinality family instead.
ShiftFamily max_disjoint_shift_family(const GroundSet& c, std::int64_t shift_bound,
                                      bool exact = false);

struct ShiftCoverReport {
    bool covered = false;
    std::optional<std::int64_t> uncovered_m;
    /// Positions 1..checked_upto were tested; the upper end backs away from
    /// the window edge by 2 * max shift + min(C) so that a miss is never a
    /// truncation artifact for the periodic sets this is meant for.
    std::int64_t checked_upto = 0;
};

/// Checks that every tested m has (C - m) meeting some (C - n_i) inside the
/// window, i.e. the family's translates of C - C cover the initial segment.
ShiftCoverReport shift_cover(const GroundSet& c, const ShiftFamily& family);

struct CoverWitnessPair {
    std::int64_t c = 0;       // member of C
    std::int64_t c_prime = 0; // member of C
    std::int64_t shift = 0;   // family member n_i with c - c_prime + n_i = m
};

/// Re-derives the witness pair behind a covered m, for spot verification.
std::optional<CoverWitnessPair> cover_witness(const GroundSet& c,
                                              const ShiftFamily& family,
                                              std::int64_t m);

struct SelfDifferenceReport {
    /// Least d <= d_max with C - C syndetic at gap d on the trimmed window
    /// [1, max(C) - min(C)]; absent when none qualifies or |C| < 2.
    std::optional<std::int64_t> syndetic_at;
    GroundSet diffs;  // C - C on the trimmed window (full window if |C| < 2)
};

SelfDifferenceReport self_difference_report(const GroundSet& c, std::int64_t d_max);

struct JinReport {
    bool found = false;
    std::optional<PwsWitness> witness;  // least d <= d_max with an n_req-run
    Rational density_a;
    Rational density_b;
    std::int64_t diag_window = 0;  // window length the densities were taken at
};

inline constexpr std::string_view kJinCaveat =
    "finite-window check: a hit exhibits structure inside this window only; "
    "it is evidence about the configured sets, never a proof about any "
    "infinite extension";

/// Looks for piecewise syndetic structure in A - B: the least d <= d_max
/// whose shift union contains a run of n_req, plus sup-density diagnostics
/// for both inputs. Empirical by design; see kJinCaveat.
JinReport jin_check(const GroundSet& a, const GroundSet& b, std::int64_t d_max,
                    std::int64_t n_req, std::int64_t diag_window = 0);

}  // namespace syndet
