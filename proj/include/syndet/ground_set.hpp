#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace syndet {

/// Closed interval of naturals [start+1, start+length], described by its
/// offset `start` (M >= 0) and positive `length` (N >= 1).
struct Interval {
    std::int64_t start = 0;
    std::int64_t length = 1;

    std::int64_t first() const { return start + 1; }
    std::int64_t last() const { return start + length; }
    bool operator==(const Interval&) const = default;
};

/// Finite subset of {1, ..., window_len}, stored as a packed bit sequence.
/// Immutable after construction; every operation returns a new value.
class GroundSet {
public:
    /// Empty set on window [1, window_len]. window_len must be >= 1.
    explicit GroundSet(std::int64_t window_len);

    static GroundSet full(std::int64_t window_len);
    static GroundSet from_members(std::int64_t window_len,
                                  std::span<const std::int64_t> members);
    static GroundSet from_members(std::int64_t window_len,
                                  std::initializer_list<std::int64_t> members);
    /// Builds from a 0/1 word, leftmost character = position 1.
    static GroundSet from_bits(std::string_view bits);
    /// Low-level factory; bits beyond window_len are cleared.
    static GroundSet from_words(std::int64_t window_len,
                                std::vector<std::uint64_t> words);

    std::int64_t window_len() const { return len_; }
    bool contains(std::int64_t i) const;
    std::int64_t count() const;
    /// Number of members in [lo, hi] (clipped to the window; empty if lo > hi).
    std::int64_t count_range(std::int64_t lo, std::int64_t hi) const;
    bool empty() const { return count() == 0; }
    std::vector<std::int64_t> members() const;
    std::optional<std::int64_t> min_member() const;
    std::optional<std::int64_t> max_member() const;
    /// Smallest member >= i, if any.
    std::optional<std::int64_t> next_member(std::int64_t i) const;
    /// 0/1 sequence indexed by position-1, handy as an averaging input.
    std::vector<std::int64_t> indicator() const;

    /// Restriction to the prefix window [1, new_len]; new_len in [1, window_len].
    GroundSet truncate(std::int64_t new_len) const;

    std::span<const std::uint64_t> words() const { return words_; }

    bool operator==(const GroundSet&) const = default;

private:
    GroundSet() = default;
    bool test_bit(std::int64_t idx0) const;

    std::int64_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

enum class SetOp { Union, Intersect, ComplementOfFirst, SetMinus };

/// A - n = {k : k + n in A} on the shrunk window [1, window_len - n].
/// n = 0 copies; n >= window_len is an error (empty window).
GroundSet shift(const GroundSet& a, std::int64_t n);

/// Pointwise boolean combination; both operands must share a window length,
/// except ComplementOfFirst which only looks at `a`.
GroundSet boolean_combine(const GroundSet& a, const GroundSet& b, SetOp op);
GroundSet set_union(const GroundSet& a, const GroundSet& b);
GroundSet set_intersect(const GroundSet& a, const GroundSet& b);
GroundSet set_minus(const GroundSet& a, const GroundSet& b);
GroundSet set_complement(const GroundSet& a);

/// {a - b : a in A, b in B, a - b >= 1} on the same window. Zero and negative
/// differences are dropped: the ground universe starts at 1.
GroundSet difference_set(const GroundSet& a, const GroundSet& b);

/// {a + b : a in A, b in B, a + b <= clip_len} on window [1, clip_len].
GroundSet sumset(const GroundSet& a, const GroundSet& b, std::int64_t clip_len);

/// All sums over nonempty subsets of seq (strictly increasing naturals),
/// clipped to [1, clip_len].
GroundSet finite_sums(std::span<const std::int64_t> seq, std::int64_t clip_len);
GroundSet finite_sums(std::initializer_list<std::int64_t> seq,
                      std::int64_t clip_len);

enum class SetForm { Bits, List };

/// Two-line text form:
///   len=<L>
///   bits=<0/1 word>   or   list=<comma-separated members>
/// Round-trips bit-exactly through parse_set.
std::string format_set(const GroundSet& a, SetForm form = SetForm::Bits);
GroundSet parse_set(std::string_view text);

}  // namespace syndet
