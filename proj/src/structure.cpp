#include "syndet/structure.hpp"

#include <stdexcept>

namespace syndet {

namespace {

constexpr std::int64_t kWordBits = 64;

bool bit_at(std::span<const std::uint64_t> words, std::int64_t idx0) {
    return (words[static_cast<std::size_t>(idx0 / kWordBits)] >>
            (idx0 % kWordBits)) & 1u;
}

std::uint64_t word_from(std::span<const std::uint64_t> src, std::int64_t from) {
    const std::int64_t q = from / kWordBits;
    const std::int64_t r = from % kWordBits;
    const auto n = static_cast<std::int64_t>(src.size());
    if (q >= n) return 0;
    std::uint64_t w = src[q] >> r;
    if (r != 0 && q + 1 < n) w |= src[q + 1] << (kWordBits - r);
    return w;
}

void check_param(std::int64_t v, std::int64_t lo, std::int64_t hi,
                 const char* what) {
    if (v < lo || v > hi) {
        throw std::out_of_range(std::string(what) + " " + std::to_string(v) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
    }
}

// Leftmost maximal run of present positions with length >= n, if any.
std::optional<Interval> find_run(const GroundSet& a, std::int64_t n) {
    const auto words = a.words();
    std::int64_t run_start = 0;  // 1-based start of current run, 0 = none
    for (std::int64_t i = 1; i <= a.window_len(); ++i) {
        if (bit_at(words, i - 1)) {
            if (run_start == 0) run_start = i;
            if (i - run_start + 1 >= n) return Interval{run_start - 1, n};
        } else {
            run_start = 0;
        }
    }
    return std::nullopt;
}

}  // namespace

SyndeticResult is_syndetic(const GroundSet& a, std::int64_t d) {
    check_param(d, 1, a.window_len(), "is_syndetic: d");
    const auto words = a.words();
    std::int64_t gap_start = 0;
    for (std::int64_t i = 1; i <= a.window_len(); ++i) {
        if (!bit_at(words, i - 1)) {
            if (gap_start == 0) gap_start = i;
            if (i - gap_start + 1 >= d) {
                return SyndeticResult{false, Interval{gap_start - 1, d}};
            }
        } else {
            gap_start = 0;
        }
    }
    return SyndeticResult{true, std::nullopt};
}

ThickResult is_thick(const GroundSet& a, std::int64_t n) {
    check_param(n, 1, a.window_len(), "is_thick: n");
    if (auto run = find_run(a, n)) return ThickResult{true, run};
    return ThickResult{false, std::nullopt};
}

GroundSet union_of_shifts(const GroundSet& a, std::int64_t d) {
    check_param(d, 1, a.window_len() - 1, "union_of_shifts: d");
    const std::int64_t new_len = a.window_len() - d;
    std::vector<std::uint64_t> out(
        static_cast<std::size_t>((new_len + kWordBits - 1) / kWordBits), 0);
    for (std::int64_t i = 1; i <= d; ++i) {
        for (std::size_t w = 0; w < out.size(); ++w) {
            out[w] |= word_from(a.words(), static_cast<std::int64_t>(w) * kWordBits + i);
        }
    }
    return GroundSet::from_words(new_len, std::move(out));
}

PwsResult is_piecewise_syndetic(const GroundSet& a, std::int64_t d,
                                std::int64_t n) {
    check_param(d, 1, a.window_len() - 1, "is_piecewise_syndetic: d");
    if (n < 1 || d + n > a.window_len()) {
        throw std::out_of_range("is_piecewise_syndetic: need 1 <= n and d + n <= window_len");
    }
    const GroundSet u = union_of_shifts(a, d);
    if (auto run = find_run(u, n)) {
        return PwsResult{true, PwsWitness{d, *run}};
    }
    return PwsResult{false, std::nullopt};
}

CoverResult cover_by_shifts(const GroundSet& a, std::int64_t d) {
    check_param(d, 1, a.window_len() - 1, "cover_by_shifts: d");
    const GroundSet u = union_of_shifts(a, d);
    for (std::int64_t j = 1; j <= u.window_len(); ++j) {
        if (!bit_at(u.words(), j - 1)) return CoverResult{false, j};
    }
    return CoverResult{true, std::nullopt};
}

Decomposition decompose_pws(const GroundSet& a, std::int64_t d, std::int64_t n) {
    const PwsResult pws = is_piecewise_syndetic(a, d, n);
    if (!pws.piecewise_syndetic) {
        throw std::domain_error("decompose_pws: set is not piecewise syndetic at d=" +
                                std::to_string(d) + ", n=" + std::to_string(n));
    }
    const std::int64_t len = a.window_len();
    // Every position j of the witness run has A meeting [j+1, j+d], so A has
    // no gap of length d inside the padded interval. Padding the run by d on
    // the right gives a solid interval I that stays inside the window.
    const Interval run = pws.witness->run;
    GroundSet interval(len);
    {
        std::vector<std::int64_t> ms;
        ms.reserve(static_cast<std::size_t>(run.length + d));
        for (std::int64_t p = run.first(); p <= run.last() + d; ++p) ms.push_back(p);
        interval = GroundSet::from_members(len, ms);
    }
    const GroundSet t = set_union(a, interval);
    const GroundSet s = set_union(a, set_complement(t));
    if (set_intersect(s, t) != a) {
        throw std::logic_error("decompose_pws: reconstruction mismatch");
    }
    // Least gap bound that makes S syndetic; bounded by d + n by construction.
    std::int64_t gap = 0;
    std::int64_t cur = 0;
    for (std::int64_t i = 1; i <= len; ++i) {
        cur = bit_at(s.words(), i - 1) ? 0 : cur + 1;
        gap = std::max(gap, cur);
    }
    return Decomposition{s, t, gap + 1};
}

StructureReport structure_report(const GroundSet& a) {
    StructureReport rep;
    const auto words = a.words();
    std::int64_t run = 0;
    std::int64_t gap = 0;
    for (std::int64_t i = 1; i <= a.window_len(); ++i) {
        if (bit_at(words, i - 1)) {
            run += 1;
            gap = 0;
        } else {
            run = 0;
            if (i > 1) gap += 1;  // a leading gap has no interior start
        }
        rep.longest_run = std::max(rep.longest_run, run);
        rep.max_gap = std::max(rep.max_gap, gap);
    }
    return rep;
}

}  // namespace syndet
