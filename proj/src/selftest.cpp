#include "syndet/selftest.hpp"

#include <random>

#include "syndet/constructions.hpp"
#include "syndet/density.hpp"
#include "syndet/differences.hpp"
#include "syndet/filter_lab.hpp"
#include "syndet/ground_set.hpp"
#include "syndet/ramsey.hpp"
#include "syndet/structure.hpp"

namespace syndet {

namespace {

GroundSet random_set(std::mt19937_64& rng, std::int64_t len, double p = 0.5) {
    std::bernoulli_distribution coin(p);
    std::vector<std::int64_t> ms;
    for (std::int64_t i = 1; i <= len; ++i) {
        if (coin(rng)) ms.push_back(i);
    }
    return GroundSet::from_members(len, ms);
}

bool check_shift_associativity(std::mt19937_64& rng) {
    for (int rep = 0; rep < 50; ++rep) {
        const GroundSet a = random_set(rng, 200);
        std::uniform_int_distribution<std::int64_t> pick(0, 60);
        const std::int64_t n = pick(rng), m = pick(rng);
        if (shift(shift(a, n), m) != shift(a, n + m)) return false;
    }
    return true;
}

bool check_shift_distributes(std::mt19937_64& rng, bool over_union) {
    for (int rep = 0; rep < 50; ++rep) {
        const GroundSet a = random_set(rng, 200);
        const GroundSet b = random_set(rng, 200);
        std::uniform_int_distribution<std::int64_t> pick(0, 120);
        const std::int64_t n = pick(rng);
        const GroundSet lhs = over_union ? shift(set_union(a, b), n)
                                         : shift(set_intersect(a, b), n);
        const GroundSet rhs = over_union ? set_union(shift(a, n), shift(b, n))
                                         : set_intersect(shift(a, n), shift(b, n));
        if (lhs != rhs) return false;
    }
    return true;
}

bool check_de_morgan(std::mt19937_64& rng) {
    for (int rep = 0; rep < 50; ++rep) {
        const GroundSet a = random_set(rng, 130);
        const GroundSet b = random_set(rng, 130);
        if (set_complement(set_union(a, b)) !=
            set_intersect(set_complement(a), set_complement(b))) {
            return false;
        }
        if (set_complement(set_intersect(a, b)) !=
            set_union(set_complement(a), set_complement(b))) {
            return false;
        }
    }
    return true;
}

bool check_difference_range(std::mt19937_64& rng) {
    for (int rep = 0; rep < 30; ++rep) {
        const GroundSet a = random_set(rng, 150, 0.3);
        if (a.count() < 2) continue;
        const GroundSet d = difference_set(a, a);
        const auto top = d.max_member();
        if (top && *top > *a.max_member() - *a.min_member()) return false;
    }
    return true;
}

bool check_fs_prefix_monotone(std::mt19937_64& rng) {
    for (int rep = 0; rep < 30; ++rep) {
        std::uniform_int_distribution<std::int64_t> step(1, 5);
        std::vector<std::int64_t> seq;
        std::int64_t v = 0;
        for (int i = 0; i < 5; ++i) {
            v += step(rng);
            seq.push_back(v);
        }
        GroundSet prev(64);
        for (std::size_t len = 1; len <= seq.size(); ++len) {
            const GroundSet cur =
                finite_sums(std::span<const std::int64_t>(seq.data(), len), 64);
            if (!set_minus(prev, cur).empty()) return false;  // prev not a subset
            prev = cur;
        }
    }
    return true;
}

bool check_average_normalization(std::mt19937_64& rng) {
    for (int rep = 0; rep < 30; ++rep) {
        const GroundSet a = random_set(rng, 120);
        const auto ind = a.indicator();
        for (std::int64_t n : {1, 7, 60, 120}) {
            const Rational avg = window_average(ind, Interval{0, n});
            if (avg != prefix_density(a, n)) return false;
            if (avg < Rational(0) || avg > Rational(1)) return false;
        }
    }
    return true;
}

bool check_density_subadditive(std::mt19937_64& rng) {
    for (int rep = 0; rep < 25; ++rep) {
        const GroundSet a = random_set(rng, 300, 0.4);
        const GroundSet b = random_set(rng, 300, 0.4);
        for (std::int64_t n : {10, 50}) {
            const Rational u = window_sup_density(set_union(a, b), n).value;
            if (u > window_sup_density(a, n).value + window_sup_density(b, n).value) {
                return false;
            }
        }
    }
    return true;
}

bool check_density_shift_bound(std::mt19937_64& rng) {
    for (int rep = 0; rep < 25; ++rep) {
        const GroundSet b = random_set(rng, 300);
        const GroundSet b1 = shift(b, 1);
        for (std::int64_t n : {10, 50}) {
            for (std::int64_t m = 0; m + n <= b1.window_len(); ++m) {
                const Rational da(b.count_range(m + 1, m + n), n);
                const Rational ds(b1.count_range(m + 1, m + n), n);
                const Rational diff = da > ds ? da - ds : ds - da;
                if (diff > Rational(2, n)) return false;
            }
        }
    }
    return true;
}

bool check_thick_shift_intersection(std::mt19937_64& rng) {
    for (int rep = 0; rep < 40; ++rep) {
        const GroundSet a = random_set(rng, 100, 0.8);
        std::uniform_int_distribution<std::int64_t> pick(1, 12);
        const std::int64_t n = pick(rng);
        GroundSet inter = a.truncate(a.window_len() - n + 1);
        for (std::int64_t i = 1; i < n; ++i) {
            inter = set_intersect(inter, shift(a, i).truncate(inter.window_len()));
        }
        if (is_thick(a, n).thick != !inter.empty()) return false;
    }
    return true;
}

bool check_syndetic_complement_thick(std::mt19937_64& rng) {
    for (int rep = 0; rep < 40; ++rep) {
        const GroundSet a = random_set(rng, 100);
        std::uniform_int_distribution<std::int64_t> pick(1, 12);
        const std::int64_t d = pick(rng);
        if (is_syndetic(a, d).syndetic != !is_thick(set_complement(a), d).thick) {
            return false;
        }
    }
    return true;
}

bool check_syndetic_shift_cover(std::mt19937_64& rng) {
    for (int rep = 0; rep < 40; ++rep) {
        const GroundSet a = random_set(rng, 100);
        std::uniform_int_distribution<std::int64_t> pick(1, 12);
        const std::int64_t d = pick(rng);
        // Same offsets on both sides: covering [1, L-d] is syndeticity of the
        // once-shifted set.
        if (cover_by_shifts(a, d).covered != is_syndetic(shift(a, 1), d).syndetic) {
            return false;
        }
        if (is_syndetic(a, d).syndetic && !cover_by_shifts(a, d).covered) return false;
    }
    return true;
}

bool check_pws_monotone(std::mt19937_64& rng) {
    for (int rep = 0; rep < 40; ++rep) {
        const GroundSet a = random_set(rng, 120, 0.35);
        std::uniform_int_distribution<std::int64_t> pickd(1, 8);
        std::uniform_int_distribution<std::int64_t> pickn(1, 10);
        const std::int64_t d = pickd(rng), n = pickn(rng);
        if (d + 1 + n > a.window_len()) continue;
        if (is_piecewise_syndetic(a, d, n).piecewise_syndetic &&
            !is_piecewise_syndetic(a, d + 1, n).piecewise_syndetic) {
            return false;
        }
    }
    return true;
}

bool check_fractal_closed_forms() {
    for (std::int64_t k = 1; k <= 3; ++k) {
        for (std::int64_t n = 0; n <= 8; ++n) {
            const std::string w = fractal_word(FractalSpec{k, n});
            const FractalStats st = fractal_stats(FractalSpec{k, n});
            if (st.length != static_cast<std::int64_t>(w.size())) return false;
            std::int64_t ones = 0, trailing = 0;
            for (char ch : w) ones += ch == '1';
            for (auto it = w.rbegin(); it != w.rend() && *it == '0'; ++it) ++trailing;
            if (st.ones != ones || st.trailing_zeros != trailing) return false;
        }
    }
    return true;
}

bool check_fractal_density_bound() {
    for (std::int64_t k = 1; k <= 3; ++k) {
        const DensityBound b = verify_density_bound(k, 2000);
        if (b.min_density < Rational(k, k + 1)) return false;
    }
    return true;
}

bool check_fractal_gap_structure() {
    for (std::int64_t n = 1; n <= 4; ++n) {
        if (!verify_gap_structure(1, n, 2000).ok) return false;
    }
    return true;
}

bool check_ramsey_small() {
    // Tiny independent enumeration: every 2-coloring of [1,9] has a mono
    // 3-progression, and some 2-coloring of [1,8] has none.
    auto has_ap = [](std::uint32_t bits, std::int64_t n) {
        for (std::int64_t a = 1; a <= n; ++a) {
            for (std::int64_t b = 1; a + 2 * b <= n; ++b) {
                const int c0 = (bits >> (a - 1)) & 1;
                const int c1 = (bits >> (a + b - 1)) & 1;
                const int c2 = (bits >> (a + 2 * b - 1)) & 1;
                if (c0 == c1 && c1 == c2) return true;
            }
        }
        return false;
    };
    for (std::uint32_t bits = 0; bits < (1u << 9); ++bits) {
        if (!has_ap(bits, 9)) return false;
    }
    bool some_free = false;
    for (std::uint32_t bits = 0; bits < (1u << 8); ++bits) {
        if (!has_ap(bits, 8)) {
            some_free = true;
            break;
        }
    }
    if (!some_free) return false;
    const VdwResult r = vdw_number(3, 2, 30);
    return r.outcome == VdwResult::Outcome::Found && r.w == 9 &&
           verify_certificate(r.certificate, 3) && r.certificate.length() == 8;
}

bool check_ramsey_pigeonhole() {
    for (std::int64_t r = 1; r <= 4; ++r) {
        const VdwResult res = vdw_number(2, r, r + 5);
        if (res.outcome != VdwResult::Outcome::Found || res.w != r + 1) return false;
    }
    return true;
}

bool check_differences_fixtures() {
    const std::int64_t len = 2000;
    auto residue_set = [&](std::int64_t mod, std::int64_t res) {
        std::vector<std::int64_t> ms;
        for (std::int64_t i = 1; i <= len; ++i) {
            if (i % mod == res % mod) ms.push_back(i);
        }
        return GroundSet::from_members(len, ms);
    };
    struct Case {
        GroundSet c;
        std::int64_t bound;
        std::size_t expect;
    };
    const Case cases[] = {
        {residue_set(3, 0), 3, 3},
        {residue_set(2, 0), 3, 2},
        {residue_set(4, 1), 3, 4},
    };
    for (const Case& cs : cases) {
        const ShiftFamily fam = max_disjoint_shift_family(cs.c, cs.bound);
        if (fam.shifts.size() != cs.expect) return false;
        const std::int64_t trimmed = fam.verified_window;
        const std::int64_t inside = cs.c.count_range(1, trimmed);
        const std::int64_t k = static_cast<std::int64_t>(fam.shifts.size());
        if (k * (inside - fam.shifts.back()) > trimmed) return false;
    }
    return true;
}

bool check_filterlab_principality() {
    using namespace filter_lab;
    const Universe u(3);
    for (std::uint32_t encoded = 0; encoded < (1u << 8); ++encoded) {
        std::vector<Mask> ms;
        for (Mask a = 0; a <= u.full(); ++a) {
            if (encoded & (1u << a)) ms.push_back(a);
        }
        const SetFamily fam(u, std::move(ms));
        if (!is_ultrafilter(fam).ok) continue;
        Mask core = u.full();
        for (Mask s : fam.members) core &= s;
        if (std::popcount(core) != 1) return false;
        if (fam.members != principal_filter(u, core).members) return false;
    }
    return true;
}

bool check_filterlab_worked_example() {
    using namespace filter_lab;
    const Universe u(4);
    const SetFamily start = principal_filter(u, mask_from_members(u, {{1, 2}}));
    const SetPredicate phi = pred_meets(u, mask_from_members(u, {{2, 3}}));
    const SetFamily out = extend_ultrafilter(start, phi);
    return out.members == principal_filter(u, mask_from_members(u, {{2}})).members;
}

bool check_filterlab_partition_regular(std::mt19937_64& rng) {
    using namespace filter_lab;
    const Universe u(4);
    std::uniform_int_distribution<int> family_size(1, 4);
    std::uniform_int_distribution<Mask> pick(1, u.full());
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<Mask> g;
        const int sz = family_size(rng);
        for (int i = 0; i < sz; ++i) g.push_back(pick(rng));
        const PartitionRegularity pr = partition_regular(u, g);
        if (pr.regular != has_singleton_member(g)) return false;
        if (pr.regular && !is_ultrafilter(*pr.witness).ok) return false;
    }
    return true;
}

}  // namespace

SelftestReport run_selftest(std::uint64_t seed) {
    SelftestReport rep;
    rep.seed = seed;
    int idx = 0;
    auto add = [&](const char* name, auto&& fn) {
        // Independent stream per check so one check's draws cannot disturb
        // another's.
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(idx++));
        bool pass = false;
        try {
            pass = fn(rng);
        } catch (...) {
            pass = false;
        }
        rep.checks.push_back(SelftestCheck{name, pass});
    };
    auto no_rng = [](auto&& fn) {
        return [fn](std::mt19937_64&) { return fn(); };
    };

    add("ground-set/shift-associativity", check_shift_associativity);
    add("ground-set/shift-distributes-over-union",
        [](std::mt19937_64& r) { return check_shift_distributes(r, true); });
    add("ground-set/shift-distributes-over-intersection",
        [](std::mt19937_64& r) { return check_shift_distributes(r, false); });
    add("ground-set/de-morgan", check_de_morgan);
    add("ground-set/difference-range", check_difference_range);
    add("ground-set/finite-sums-prefix-monotone", check_fs_prefix_monotone);
    add("density/average-normalization", check_average_normalization);
    add("density/subadditivity", check_density_subadditive);
    add("density/unit-shift-bound", check_density_shift_bound);
    add("structure/thick-shift-intersection", check_thick_shift_intersection);
    add("structure/syndetic-complement-thick", check_syndetic_complement_thick);
    add("structure/syndetic-shift-cover", check_syndetic_shift_cover);
    add("structure/pws-monotone-in-d", check_pws_monotone);
    add("constructions/closed-forms", no_rng(check_fractal_closed_forms));
    add("constructions/density-bound", no_rng(check_fractal_density_bound));
    add("constructions/gap-structure", no_rng(check_fractal_gap_structure));
    add("ramsey/small-window-oracle", no_rng(check_ramsey_small));
    add("ramsey/two-term-pigeonhole", no_rng(check_ramsey_pigeonhole));
    add("differences/fixture-families", no_rng(check_differences_fixtures));
    add("filterlab/ultrafilters-principal", no_rng(check_filterlab_principality));
    add("filterlab/extension-worked-example", no_rng(check_filterlab_worked_example));
    add("filterlab/partition-regular-criterion", check_filterlab_partition_regular);

    rep.all_pass = true;
    for (const SelftestCheck& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace syndet
