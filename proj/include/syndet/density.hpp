#pragma once

#include <span>
#include <vector>

#include "syndet/ground_set.hpp"
#include "syndet/rational.hpp"

namespace syndet {

/// One exact density measurement: the value, the window that achieves it,
/// and the window length it was taken at.
struct DensityReport {
    Rational value;
    Interval witness;
    std::int64_t window_len_used = 0;

    bool operator==(const DensityReport&) const = default;
};

/// |A intersect [1, N]| / N. N must lie in [1, window_len].
Rational prefix_density(const GroundSet& a, std::int64_t n);

/// max over M in [0, window_len - N] of |A intersect [M+1, M+N]| / N,
/// computed with one sliding pass; ties break toward the smallest M.
DensityReport window_sup_density(const GroundSet& a, std::int64_t n);

/// window_sup_density for each requested N, in input order.
std::vector<DensityReport> density_profile(const GroundSet& a,
                                           std::span<const std::int64_t> ns);

/// Exact average of an integer sequence over a window. f is indexed from
/// position 1 (f[0] is position 1); w must lie inside [1, f.size()].
Rational window_average(std::span<const std::int64_t> f, Interval w);

}  // namespace syndet
