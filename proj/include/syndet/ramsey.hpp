#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "syndet/ground_set.hpp"

namespace syndet {

/// Letter alphabet for coloring text forms; color i is the i-th letter.
inline constexpr std::string_view kColorLetters = "RBGYOPCMWK";

/// r-coloring of positions 1..length(); color values are 1..num_colors.
struct Coloring {
    std::int64_t num_colors = 1;
    std::vector<std::uint8_t> colors;

    std::int64_t length() const { return static_cast<std::int64_t>(colors.size()); }
    std::uint8_t at(std::int64_t pos) const {
        return colors[static_cast<std::size_t>(pos - 1)];
    }
};

/// Letter form, one character per position: color i maps to the i-th letter
/// of "RBGYOPCMWK" (at most 10 colors).
std::string format_coloring(const Coloring& c);
Coloring parse_coloring(std::string_view letters, std::int64_t num_colors);

/// Certificate file body: header line "r=<r> k=<k>", then the letter form.
std::string format_certificate(const Coloring& c, std::int64_t k);
/// Returns the coloring and the k it claims to avoid.
std::pair<Coloring, std::int64_t> parse_certificate(std::string_view text);

/// Arithmetic progression a, a+b, ..., a+(k-1)b with b >= 1.
struct APWitness {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t k = 0;
    bool operator==(const APWitness&) const = default;
};

/// Lexicographically least (a, b) such that the k positions a, a+b, ...,
/// a+(k-1)b all carry one color; absent when no such progression fits.
/// k = 1 reports (1, 1, 1) whenever the coloring is nonempty.
std::optional<APWitness> find_mono_ap(const Coloring& c, std::int64_t k);

/// True iff the coloring contains no monochromatic k-progression.
bool verify_certificate(const Coloring& c, std::int64_t k);

struct VdwStats {
    std::int64_t nodes = 0;      // color assignments attempted
    double seconds = 0.0;        // wall time; diagnostic only, not reported
};

struct VdwResult {
    enum class Outcome { Found, ExceededCap };
    Outcome outcome = Outcome::Found;
    /// Least window length forcing a monochromatic k-progression (Found only).
    std::int64_t w = 0;
    std::int64_t cap = 0;
    /// Found: a progression-free coloring of [1, w-1].
    /// ExceededCap: a progression-free coloring of [1, cap].
    Coloring certificate;
    VdwStats stats;
};

/// Depth-first search over r-colorings, left to right, colors ascending,
/// first position pinned to color 1 (color symmetry), pruning as soon as a
/// monochromatic k-progression ends at the newest position. Deterministic:
/// the certificate is the lexicographically least witness at its length.
VdwResult vdw_number(std::int64_t k, std::int64_t r, std::int64_t cap);

/// Transfers a monochromatic progression found among the position indices of
/// P back through the affine map j -> P.a + (j-1) P.b. `part` colors the
/// indices 1..P.k of P with 2 colors.
std::optional<APWitness> mono_ap_in_partition_of_ap(const APWitness& p,
                                                    const Coloring& part,
                                                    std::int64_t k);

/// Least increasing sequence n_1 < ... < n_m whose full finite-sums set is
/// monochromatic, with every subset sum <= min(sum_cap, coloring length).
std::optional<std::vector<std::int64_t>> find_mono_fs(const Coloring& c,
                                                      std::int64_t m,
                                                      std::int64_t sum_cap);

/// Least (a, b) with every term of the k-progression a member of the set.
std::optional<APWitness> find_ap_in_set(const GroundSet& a, std::int64_t k);

struct SyndeticApResult {
    APWitness ap;             // progression inside the set
    std::int64_t shift = 0;   // color index i whose class produced it
    std::int64_t w = 0;       // window length the coloring argument used
};

/// Syndetic sets contain progressions: colors each n in [1, W(k,d)] by the
/// least i in [1, d] with n + i in A, extracts a monochromatic progression,
/// and translates it into A by that shift. Errors when A is not syndetic at
/// gap d or when the window is too short for W(k, d) + d.
SyndeticApResult syndetic_implies_ap(const GroundSet& a, std::int64_t d,
                                     std::int64_t k);

}  // namespace syndet
