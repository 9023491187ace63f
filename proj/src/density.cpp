#include "syndet/density.hpp"

#include <stdexcept>

namespace syndet {

Rational prefix_density(const GroundSet& a, std::int64_t n) {
    if (n < 1 || n > a.window_len()) {
        throw std::out_of_range("prefix_density: N " + std::to_string(n) +
                                " outside [1, " + std::to_string(a.window_len()) + "]");
    }
    return Rational(a.count_range(1, n), n);
}

DensityReport window_sup_density(const GroundSet& a, std::int64_t n) {
    const std::int64_t len = a.window_len();
    if (n < 1 || n > len) {
        throw std::out_of_range("window_sup_density: N " + std::to_string(n) +
                                " outside [1, " + std::to_string(len) + "]");
    }
    std::int64_t cur = a.count_range(1, n);
    std::int64_t best = cur;
    std::int64_t best_m = 0;
    for (std::int64_t m = 1; m + n <= len; ++m) {
        // Window slides from [m, m+n-1] to [m+1, m+n].
        cur += (a.contains(m + n) ? 1 : 0) - (a.contains(m) ? 1 : 0);
        if (cur > best) {
            best = cur;
            best_m = m;
        }
    }
    return DensityReport{Rational(best, n), Interval{best_m, n}, n};
}

std::vector<DensityReport> density_profile(const GroundSet& a,
                                           std::span<const std::int64_t> ns) {
    std::vector<DensityReport> out;
    out.reserve(ns.size());
    for (std::int64_t n : ns) out.push_back(window_sup_density(a, n));
    return out;
}

Rational window_average(std::span<const std::int64_t> f, Interval w) {
    if (w.start < 0 || w.length < 1 ||
        w.last() > static_cast<std::int64_t>(f.size())) {
        throw std::out_of_range("window_average: window [" + std::to_string(w.first()) +
                                ", " + std::to_string(w.last()) +
                                "] outside sequence of length " +
                                std::to_string(f.size()));
    }
    std::int64_t sum = 0;
    for (std::int64_t i = w.first(); i <= w.last(); ++i) {
        sum += f[static_cast<std::size_t>(i - 1)];
    }
    return Rational(sum, w.length);
}

}  // namespace syndet
