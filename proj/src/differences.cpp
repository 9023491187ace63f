#include "syndet/differences.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "syndet/density.hpp"

namespace syndet {

namespace {

constexpr std::int64_t kWordBits = 64;

std::uint64_t word_from(std::span<const std::uint64_t> src, std::int64_t from) {
    const std::int64_t q = from / kWordBits;
    const std::int64_t r = from % kWordBits;
    const auto n = static_cast<std::int64_t>(src.size());
    if (q >= n) return 0;
    std::uint64_t w = src[q] >> r;
    if (r != 0 && q + 1 < n) w |= src[q + 1] << (kWordBits - r);
    return w;
}

// First k >= 1 with k + m in C and k + n in C, where both sums must stay
// inside the window; nullopt when the shifted copies never meet.
std::optional<std::int64_t> first_common_shifted(const GroundSet& c, std::int64_t m,
                                                 std::int64_t n) {
    const std::int64_t len = c.window_len() - std::max(m, n);
    if (len < 1) return std::nullopt;
    const auto words = c.words();
    const std::int64_t nwords = (len + kWordBits - 1) / kWordBits;
    for (std::int64_t w = 0; w < nwords; ++w) {
        std::uint64_t v = word_from(words, w * kWordBits + m) &
                          word_from(words, w * kWordBits + n);
        if (w == nwords - 1 && len % kWordBits != 0) {
            v &= (std::uint64_t{1} << (len % kWordBits)) - 1;
        }
        if (v != 0) {
            return w * kWordBits + std::countr_zero(v) + 1;
        }
    }
    return std::nullopt;
}

void check_family(const GroundSet& c, const ShiftFamily& family) {
    if (family.shifts.empty()) {
        throw std::invalid_argument("shift family: no shifts");
    }
    if (!std::is_sorted(family.shifts.begin(), family.shifts.end()) ||
        family.shifts.front() < 0 ||
        std::adjacent_find(family.shifts.begin(), family.shifts.end()) !=
            family.shifts.end()) {
        throw std::invalid_argument("shift family: shifts must be strictly increasing and >= 0");
    }
    if (family.shifts.back() >= c.window_len()) {
        throw std::invalid_argument("shift family: largest shift leaves an empty window");
    }
}

}  // namespace

ShiftFamily max_disjoint_shift_family(const GroundSet& c, std::int64_t shift_bound,
                                      bool exact) {
    if (shift_bound < 1 || shift_bound >= c.window_len()) {
        throw std::invalid_argument("max_disjoint_shift_family: shift_bound outside [1, window_len)");
    }
    const std::int64_t trimmed = c.window_len() - shift_bound;
    ShiftFamily fam;
    fam.shift_bound = shift_bound;
    fam.verified_window = trimmed;

    if (!exact) {
        GroundSet used(trimmed);
        for (std::int64_t n = 0; n <= shift_bound; ++n) {
            const GroundSet cand = shift(c, n).truncate(trimmed);
            if (set_intersect(cand, used).empty()) {
                fam.shifts.push_back(n);
                used = set_union(used, cand);
            }
        }
        return fam;
    }

    if (c.window_len() > kWordBits) {
        throw std::invalid_argument(
            "max_disjoint_shift_family: exact search supports window_len <= 64 only");
    }
    // Everything fits in single words; branch and bound over candidates in
    // increasing order so ties resolve toward lexicographically least.
    std::vector<std::uint64_t> cand(static_cast<std::size_t>(shift_bound) + 1);
    const std::uint64_t trim_mask =
        trimmed == kWordBits ? ~std::uint64_t{0} : (std::uint64_t{1} << trimmed) - 1;
    for (std::int64_t n = 0; n <= shift_bound; ++n) {
        cand[static_cast<std::size_t>(n)] = (c.words()[0] >> n) & trim_mask;
    }
    std::vector<std::int64_t> best, cur;
    auto rec = [&](auto&& self, std::size_t idx, std::uint64_t used) -> void {
        if (cur.size() + (cand.size() - idx) <= best.size()) return;  // bound
        if (idx == cand.size()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if ((cand[idx] & used) == 0) {
            cur.push_back(static_cast<std::int64_t>(idx));
            self(self, idx + 1, used | cand[idx]);
            cur.pop_back();
        }
        self(self, idx + 1, used);
    };
    rec(rec, 0, 0);
    fam.shifts = best;
    return fam;
}

ShiftCoverReport shift_cover(const GroundSet& c, const ShiftFamily& family) {
    check_family(c, family);
    const auto min_c = c.min_member();
    const std::int64_t max_shift = family.shifts.back();
    if (!min_c) {
        return ShiftCoverReport{false, 1, std::max<std::int64_t>(c.window_len() - max_shift, 1)};
    }
    const std::int64_t margin = max_shift + *min_c;
    const std::int64_t upto = c.window_len() - max_shift - margin;
    if (upto < 1) {
        throw std::invalid_argument("shift_cover: window too short for the trim margin");
    }
    for (std::int64_t m = 1; m <= upto; ++m) {
        bool hit = false;
        for (std::int64_t n : family.shifts) {
            if (first_common_shifted(c, m, n)) {
                hit = true;
                break;
            }
        }
        if (!hit) return ShiftCoverReport{false, m, upto};
    }
    return ShiftCoverReport{true, std::nullopt, upto};
}

std::optional<CoverWitnessPair> cover_witness(const GroundSet& c,
                                              const ShiftFamily& family,
                                              std::int64_t m) {
    check_family(c, family);
    if (m < 1) throw std::invalid_argument("cover_witness: m must be >= 1");
    for (std::int64_t n : family.shifts) {
        if (auto k = first_common_shifted(c, m, n)) {
            return CoverWitnessPair{*k + m, *k + n, n};
        }
    }
    return std::nullopt;
}

SelfDifferenceReport self_difference_report(const GroundSet& c, std::int64_t d_max) {
    if (d_max < 1) throw std::invalid_argument("self_difference_report: d_max must be >= 1");
    const GroundSet full_diffs = difference_set(c, c);
    const auto lo = c.min_member();
    const auto hi = c.max_member();
    if (!lo || *lo == *hi) {
        // Fewer than two members: no positive self-differences at all.
        return SelfDifferenceReport{std::nullopt, full_diffs};
    }
    const GroundSet diffs = full_diffs.truncate(*hi - *lo);
    for (std::int64_t d = 1; d <= std::min(d_max, diffs.window_len()); ++d) {
        if (is_syndetic(diffs, d).syndetic) {
            return SelfDifferenceReport{d, diffs};
        }
    }
    return SelfDifferenceReport{std::nullopt, diffs};
}

JinReport jin_check(const GroundSet& a, const GroundSet& b, std::int64_t d_max,
                    std::int64_t n_req, std::int64_t diag_window) {
    if (a.window_len() != b.window_len()) {
        throw std::invalid_argument("jin_check: window lengths differ");
    }
    if (d_max < 1 || n_req < 1 || d_max + n_req > a.window_len()) {
        throw std::invalid_argument("jin_check: need d_max, n_req >= 1 and d_max + n_req <= window_len");
    }
    if (diag_window == 0) {
        diag_window = std::min<std::int64_t>(a.window_len(), 1000);
    }
    if (diag_window < 1 || diag_window > a.window_len()) {
        throw std::out_of_range("jin_check: diag_window outside [1, window_len]");
    }
    JinReport rep;
    rep.diag_window = diag_window;
    rep.density_a = window_sup_density(a, diag_window).value;
    rep.density_b = window_sup_density(b, diag_window).value;

    const GroundSet diffs = difference_set(a, b);
    for (std::int64_t d = 1; d <= d_max; ++d) {
        const PwsResult r = is_piecewise_syndetic(diffs, d, n_req);
        if (r.piecewise_syndetic) {
            rep.found = true;
            rep.witness = r.witness;
            break;
        }
    }
    return rep;
}

}  // namespace syndet
