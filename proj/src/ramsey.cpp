#include "syndet/ramsey.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "syndet/structure.hpp"

namespace syndet {

namespace {

void check_colors(const Coloring& c) {
    if (c.num_colors < 1) throw std::invalid_argument("coloring: need >= 1 color");
    for (std::uint8_t v : c.colors) {
        if (v < 1 || v > c.num_colors) {
            throw std::invalid_argument("coloring: color value " + std::to_string(v) +
                                        " outside [1, " + std::to_string(c.num_colors) + "]");
        }
    }
}

}  // namespace

std::string format_coloring(const Coloring& c) {
    check_colors(c);
    if (c.num_colors > static_cast<std::int64_t>(kColorLetters.size())) {
        throw std::invalid_argument("format_coloring: letter form supports at most " +
                                    std::to_string(kColorLetters.size()) + " colors");
    }
    std::string out;
    out.reserve(c.colors.size());
    for (std::uint8_t v : c.colors) out += kColorLetters[v - 1];
    return out;
}

Coloring parse_coloring(std::string_view letters, std::int64_t num_colors) {
    if (num_colors < 1 ||
        num_colors > static_cast<std::int64_t>(kColorLetters.size())) {
        throw std::invalid_argument("parse_coloring: color count outside [1, " +
                                    std::to_string(kColorLetters.size()) + "]");
    }
    Coloring c;
    c.num_colors = num_colors;
    c.colors.reserve(letters.size());
    for (char ch : letters) {
        const std::size_t idx = kColorLetters.find(ch);
        if (idx == std::string_view::npos ||
            static_cast<std::int64_t>(idx) >= num_colors) {
            throw std::invalid_argument(std::string("parse_coloring: unexpected letter '") +
                                        ch + "'");
        }
        c.colors.push_back(static_cast<std::uint8_t>(idx + 1));
    }
    return c;
}

std::string format_certificate(const Coloring& c, std::int64_t k) {
    return "r=" + std::to_string(c.num_colors) + " k=" + std::to_string(k) + "\n" +
           format_coloring(c) + "\n";
}

std::pair<Coloring, std::int64_t> parse_certificate(std::string_view text) {
    const std::size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
        throw std::invalid_argument("parse_certificate: missing header line");
    }
    std::string_view header = text.substr(0, nl);
    std::int64_t r = 0, k = 0;
    if (std::sscanf(std::string(header).c_str(), "r=%ld k=%ld", &r, &k) != 2) {
        throw std::invalid_argument("parse_certificate: header must be 'r=<r> k=<k>'");
    }
    std::string_view body = text.substr(nl + 1);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) {
        body.remove_suffix(1);
    }
    return {parse_coloring(body, r), k};
}

std::optional<APWitness> find_mono_ap(const Coloring& c, std::int64_t k) {
    check_colors(c);
    if (k < 1) throw std::invalid_argument("find_mono_ap: k must be >= 1");
    const std::int64_t n = c.length();
    if (k == 1) {
        if (n >= 1) return APWitness{1, 1, 1};
        return std::nullopt;
    }
    for (std::int64_t a = 1; a <= n; ++a) {
        for (std::int64_t b = 1; a + (k - 1) * b <= n; ++b) {
            const std::uint8_t col = c.at(a);
            bool mono = true;
            for (std::int64_t j = 1; j < k; ++j) {
                if (c.at(a + j * b) != col) {
                    mono = false;
                    break;
                }
            }
            if (mono) return APWitness{a, b, k};
        }
    }
    return std::nullopt;
}

bool verify_certificate(const Coloring& c, std::int64_t k) {
    return !find_mono_ap(c, k).has_value();
}

namespace {

// True when a monochromatic k-progression ends at position p. Earlier
// positions were screened the same way, so checking the newest endpoint is
// complete and detects each progression exactly once.
bool mono_ap_ending_at(const std::vector<std::uint8_t>& colors, std::int64_t p,
                       std::int64_t k) {
    const std::uint8_t col = colors[static_cast<std::size_t>(p - 1)];
    if (k == 1) return true;
    for (std::int64_t b = 1; p - (k - 1) * b >= 1; ++b) {
        bool mono = true;
        for (std::int64_t j = 1; j < k; ++j) {
            if (colors[static_cast<std::size_t>(p - j * b - 1)] != col) {
                mono = false;
                break;
            }
        }
        if (mono) return true;
    }
    return false;
}

}  // namespace

VdwResult vdw_number(std::int64_t k, std::int64_t r, std::int64_t cap) {
    if (k < 1) throw std::invalid_argument("vdw_number: k must be >= 1");
    if (r < 1) throw std::invalid_argument("vdw_number: r must be >= 1");
    if (cap < 1) throw std::invalid_argument("vdw_number: cap must be >= 1");
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<std::uint8_t> colors(static_cast<std::size_t>(cap), 0);
    std::vector<std::uint8_t> best_cert;
    std::int64_t best = 0;
    std::int64_t nodes = 0;
    bool exceeded = false;

    // Iterative DFS: depth p is the position being assigned next.
    std::int64_t p = 1;
    colors[0] = 0;  // will be bumped to 1 below; position 1 is pinned
    while (p >= 1 && !exceeded) {
        const std::int64_t limit = (p == 1) ? 1 : r;  // color symmetry
        std::uint8_t& slot = colors[static_cast<std::size_t>(p - 1)];
        if (slot >= limit) {
            slot = 0;
            --p;  // exhausted this position, backtrack
            continue;
        }
        ++slot;
        ++nodes;
        if (mono_ap_ending_at(colors, p, k)) continue;  // try the next color here
        if (p > best) {
            best = p;
            best_cert.assign(colors.begin(), colors.begin() + p);
            if (best == cap) {
                exceeded = true;
                break;
            }
        }
        ++p;  // extend
    }

    VdwResult res;
    res.cap = cap;
    res.stats.nodes = nodes;
    res.stats.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    res.certificate.num_colors = r;
    res.certificate.colors = std::move(best_cert);
    if (exceeded) {
        res.outcome = VdwResult::Outcome::ExceededCap;
        res.w = 0;
    } else {
        res.outcome = VdwResult::Outcome::Found;
        res.w = best + 1;
    }
    return res;
}

std::optional<APWitness> mono_ap_in_partition_of_ap(const APWitness& p,
                                                    const Coloring& part,
                                                    std::int64_t k) {
    if (p.b < 1 || p.k < 1 || p.a < 1) {
        throw std::invalid_argument("mono_ap_in_partition_of_ap: malformed progression");
    }
    if (part.length() != p.k) {
        throw std::invalid_argument(
            "mono_ap_in_partition_of_ap: partition length must equal the progression length");
    }
    const auto hit = find_mono_ap(part, k);
    if (!hit) return std::nullopt;
    // Index j of P names the number P.a + (j-1) P.b; affine maps send
    // progressions to progressions in both directions.
    return APWitness{p.a + (hit->a - 1) * p.b, hit->b * p.b, k};
}

std::optional<std::vector<std::int64_t>> find_mono_fs(const Coloring& c,
                                                      std::int64_t m,
                                                      std::int64_t sum_cap) {
    check_colors(c);
    if (m < 1) throw std::invalid_argument("find_mono_fs: m must be >= 1");
    if (sum_cap < 1) throw std::invalid_argument("find_mono_fs: sum_cap must be >= 1");
    const std::int64_t cap = std::min(sum_cap, c.length());

    std::vector<std::int64_t> seq;
    std::vector<std::int64_t> sums;  // all nonempty subset sums so far

    // Depth-first over n_1 < n_2 < ...; the first completed sequence is the
    // lexicographically least one.
    auto rec = [&](auto&& self, std::uint8_t col) -> bool {
        if (static_cast<std::int64_t>(seq.size()) == m) {
            // Re-derive the finite-sums set through the set machinery and
            // re-check it; the incremental sums above must agree with it.
            const GroundSet fs = finite_sums(seq, cap);
            for (std::int64_t v : fs.members()) {
                if (c.at(v) != col) {
                    throw std::logic_error("find_mono_fs: cross-check failed");
                }
            }
            return true;
        }
        const std::int64_t lo = seq.empty() ? 1 : seq.back() + 1;
        for (std::int64_t n = lo; n <= cap; ++n) {
            if (seq.empty()) col = c.at(n);
            if (c.at(n) != col) continue;
            bool ok = true;
            for (std::int64_t s : sums) {
                if (s + n > cap || c.at(s + n) != col) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            const std::size_t rollback = sums.size();
            seq.push_back(n);
            for (std::size_t i = 0; i < rollback; ++i) sums.push_back(sums[i] + n);
            sums.push_back(n);
            if (self(self, col)) return true;
            seq.pop_back();
            sums.resize(rollback);
        }
        return false;
    };
    if (rec(rec, 0)) return seq;
    return std::nullopt;
}

std::optional<APWitness> find_ap_in_set(const GroundSet& a, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("find_ap_in_set: k must be >= 1");
    const std::int64_t len = a.window_len();
    if (k == 1) {
        if (auto m = a.min_member()) return APWitness{*m, 1, 1};
        return std::nullopt;
    }
    for (std::int64_t start = 1; start <= len; ++start) {
        if (!a.contains(start)) continue;
        for (std::int64_t b = 1; start + (k - 1) * b <= len; ++b) {
            bool all = true;
            for (std::int64_t j = 1; j < k; ++j) {
                if (!a.contains(start + j * b)) {
                    all = false;
                    break;
                }
            }
            if (all) return APWitness{start, b, k};
        }
    }
    return std::nullopt;
}

SyndeticApResult syndetic_implies_ap(const GroundSet& a, std::int64_t d,
                                     std::int64_t k) {
    if (k < 1) throw std::invalid_argument("syndetic_implies_ap: k must be >= 1");
    if (d < 1 || d >= a.window_len()) {
        throw std::invalid_argument("syndetic_implies_ap: gap d outside [1, window_len)");
    }
    if (!is_syndetic(a, d).syndetic) {
        throw std::domain_error("syndetic_implies_ap: set is not syndetic at gap " +
                                std::to_string(d));
    }
    const std::int64_t budget = a.window_len() - d;
    const VdwResult vdw = vdw_number(k, d, budget);
    if (vdw.outcome != VdwResult::Outcome::Found) {
        throw std::domain_error(
            "syndetic_implies_ap: window too short; the coloring bound exceeds " +
            std::to_string(budget));
    }
    const std::int64_t w = vdw.w;

    Coloring col;
    col.num_colors = d;
    col.colors.resize(static_cast<std::size_t>(w));
    for (std::int64_t n = 1; n <= w; ++n) {
        std::int64_t i = 0;
        for (std::int64_t cand = 1; cand <= d; ++cand) {
            if (a.contains(n + cand)) {
                i = cand;
                break;
            }
        }
        if (i == 0) throw std::logic_error("syndetic_implies_ap: gap despite syndeticity");
        col.colors[static_cast<std::size_t>(n - 1)] = static_cast<std::uint8_t>(i);
    }

    const auto hit = find_mono_ap(col, k);
    if (!hit) throw std::logic_error("syndetic_implies_ap: no progression at length W");
    const std::int64_t i = col.at(hit->a);
    const APWitness translated{hit->a + i, hit->b, k};
    for (std::int64_t j = 0; j < k; ++j) {
        if (!a.contains(translated.a + j * translated.b)) {
            throw std::logic_error("syndetic_implies_ap: translated progression left the set");
        }
    }
    return SyndeticApResult{translated, i, w};
}

}  // namespace syndet
