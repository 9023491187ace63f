#include "syndet/filter_lab.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace syndet {
namespace filter_lab {

namespace {

// Ascending enumeration of all supersets of a within full: seed with a,
// advance via s = (s + 1) | a, stop once s leaves the universe.
template <typename Fn>
void for_each_superset(Mask a, Mask full, Fn&& fn) {
    for (Mask s = a;; s = (s + 1) | a) {
        if (!fn(s)) return;
        if (s == full) return;
    }
}

int parse_small_int(std::string_view tok, const char* what) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
        throw std::invalid_argument(std::string("filter_lab: bad ") + what + " '" +
                                    std::string(tok) + "'");
    }
    return v;
}

std::vector<int> parse_member_csv(std::string_view body) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < body.size()) {
        std::size_t comma = body.find(',', pos);
        if (comma == std::string_view::npos) comma = body.size();
        out.push_back(parse_small_int(body.substr(pos, comma - pos), "element"));
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Universe::Universe(int m_) : m(m_) {
    if (m < 1 || m > 16) {
        throw std::invalid_argument("Universe: size " + std::to_string(m_) +
                                    " outside [1, 16]");
    }
}

std::vector<int> mask_members(Mask a) {
    std::vector<int> out;
    while (a != 0) {
        out.push_back(std::countr_zero(a) + 1);
        a &= a - 1;
    }
    return out;
}

Mask mask_from_members(Universe u, std::span<const int> members) {
    Mask a = 0;
    for (int e : members) {
        if (e < 1 || e > u.m) {
            throw std::out_of_range("filter_lab: element " + std::to_string(e) +
                                    " outside universe of size " + std::to_string(u.m));
        }
        a |= Mask{1} << (e - 1);
    }
    return a;
}

std::string mask_to_string(Mask a) {
    std::string out = "{";
    bool first = true;
    for (int e : mask_members(a)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

SetFamily::SetFamily(Universe u_, std::vector<Mask> members_)
    : u(u_), members(std::move(members_)) {
    for (Mask a : members) {
        if ((a & ~u.full()) != 0) {
            throw std::out_of_range("SetFamily: member " + mask_to_string(a) +
                                    " outside universe of size " + std::to_string(u.m));
        }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool SetFamily::contains(Mask a) const {
    return std::binary_search(members.begin(), members.end(), a);
}

SetFamily principal_filter(Universe u, Mask core) {
    if (core == 0) throw std::invalid_argument("principal_filter: empty core");
    if ((core & ~u.full()) != 0) {
        throw std::out_of_range("principal_filter: core outside universe");
    }
    std::vector<Mask> ms;
    for_each_superset(core, u.full(), [&](Mask s) {
        ms.push_back(s);
        return true;
    });
    return SetFamily(u, std::move(ms));
}

FilterVerdict is_filter(const SetFamily& f) {
    if (f.members.empty()) {
        return FilterVerdict{false, 0, std::nullopt, std::nullopt, "family is empty"};
    }
    if (f.contains(0)) {
        return FilterVerdict{false, 1, Mask{0}, std::nullopt,
                             "the empty set is a member"};
    }
    for (Mask a : f.members) {
        FilterVerdict bad;
        bool all_ok = true;
        for_each_superset(a, f.u.full(), [&](Mask s) {
            if (!f.contains(s)) {
                bad = FilterVerdict{false, 2, a, s,
                                    "superset " + mask_to_string(s) + " of member " +
                                        mask_to_string(a) + " is missing"};
                all_ok = false;
                return false;
            }
            return true;
        });
        if (!all_ok) return bad;
    }
    for (std::size_t i = 0; i < f.members.size(); ++i) {
        for (std::size_t j = i; j < f.members.size(); ++j) {
            const Mask t = f.members[i] & f.members[j];
            if (!f.contains(t)) {
                return FilterVerdict{false, 3, f.members[i], f.members[j],
                                     "intersection " + mask_to_string(t) +
                                         " is missing"};
            }
        }
    }
    return FilterVerdict{};
}

FilterVerdict is_ultrafilter(const SetFamily& f) {
    FilterVerdict base = is_filter(f);
    if (!base.ok) return base;
    const Mask full = f.u.full();
    for (Mask a = 0; a <= full; ++a) {
        if (!f.contains(a) && !f.contains(full ^ a)) {
            return FilterVerdict{false, 4, a, static_cast<Mask>(full ^ a),
                                 "neither " + mask_to_string(a) + " nor its complement"};
        }
    }
    return FilterVerdict{};
}

EmptyIntersectionError::EmptyIntersectionError(std::vector<Mask> culprits_)
    : std::invalid_argument([&] {
          std::string msg = "generate_filter: generators have empty intersection:";
          for (Mask c : culprits_) msg += " " + mask_to_string(c);
          return msg;
      }()),
      culprits(std::move(culprits_)) {}

SetFamily generate_filter(Universe u, std::span<const Mask> generators) {
    Mask total = u.full();
    for (Mask g : generators) {
        if ((g & ~u.full()) != 0) {
            throw std::out_of_range("generate_filter: generator outside universe");
        }
        total &= g;
    }
    if (total == 0) {
        // Shrink to an inclusion-minimal culpable subset: drop every
        // generator the emptiness does not depend on.
        std::vector<Mask> culprits(generators.begin(), generators.end());
        for (std::size_t i = 0; i < culprits.size();) {
            Mask rest = u.full();
            for (std::size_t j = 0; j < culprits.size(); ++j) {
                if (j != i) rest &= culprits[j];
            }
            if (rest == 0) {
                culprits.erase(culprits.begin() + static_cast<std::ptrdiff_t>(i));
            } else {
                ++i;
            }
        }
        throw EmptyIntersectionError(std::move(culprits));
    }
    return principal_filter(u, total);
}

SetPredicate pred_nonempty(Universe) {
    return SetPredicate{"nonempty", [](Mask a) { return a != 0; }};
}

SetPredicate pred_meets(Universe, Mask s) {
    return SetPredicate{"meets:" + mask_to_string(s),
                        [s](Mask a) { return (a & s) != 0; }};
}

SetPredicate pred_contains_some(Universe, std::vector<Mask> g) {
    std::string name = "contains-some:";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i != 0) name += ';';
        name += mask_to_string(g[i]);
    }
    return SetPredicate{std::move(name), [g = std::move(g)](Mask a) {
                            for (Mask s : g) {
                                if ((a & s) == s) return true;
                            }
                            return false;
                        }};
}

SetPredicate pred_min_size(Universe, int k) {
    return SetPredicate{"min-size:" + std::to_string(k), [k](Mask a) {
                            return std::popcount(a) >= k;
                        }};
}

SetPredicate parse_predicate(Universe u, std::string_view text) {
    if (text == "nonempty") return pred_nonempty(u);
    if (text.starts_with("meets:")) {
        const auto ms = parse_member_csv(text.substr(6));
        return pred_meets(u, mask_from_members(u, ms));
    }
    if (text.starts_with("contains-some:")) {
        std::string_view body = text.substr(14);
        std::vector<Mask> g;
        std::size_t pos = 0;
        while (pos <= body.size()) {
            std::size_t semi = body.find(';', pos);
            if (semi == std::string_view::npos) semi = body.size();
            const auto ms = parse_member_csv(body.substr(pos, semi - pos));
            g.push_back(mask_from_members(u, ms));
            pos = semi + 1;
            if (semi == body.size()) break;
        }
        return pred_contains_some(u, std::move(g));
    }
    if (text.starts_with("min-size:")) {
        return pred_min_size(u, parse_small_int(text.substr(9), "size"));
    }
    throw std::invalid_argument("filter_lab: unknown predicate '" + std::string(text) +
                                "'");
}

SuperfilterVerdict check_superfilter(const SetPredicate& phi, const SetFamily& f) {
    if (!is_filter(f).ok) {
        throw std::domain_error("check_superfilter: input is not a filter");
    }
    if (f.u.m > 12) {
        throw std::out_of_range("check_superfilter: stability scan supports m <= 12");
    }
    const Mask full = f.u.full();
    std::vector<char> table(static_cast<std::size_t>(full) + 2, 0);
    for (Mask a = 0; a <= full; ++a) table[a] = phi.fn(a) ? 1 : 0;

    for (Mask s : f.members) {
        if (!table[s]) {
            return SuperfilterVerdict{false, "holds-on-filter", s, std::nullopt};
        }
    }
    for (Mask b = 0; b <= full; ++b) {
        if (table[b]) continue;
        // Some subset with phi would violate monotonicity toward this b.
        for (Mask a = b;; a = (a - 1) & b) {
            if (table[a]) {
                return SuperfilterVerdict{false, "monotone", a, b};
            }
            if (a == 0) break;
        }
    }
    for (Mask a = 0; a <= full; ++a) {
        if (!table[a]) continue;
        for (Mask a1 = (a - 1) & a;; a1 = (a1 - 1) & a) {
            if (a1 == 0) break;
            const Mask a2 = a ^ a1;  // proper two-part split of a
            if (!table[a1] && !table[a2]) {
                return SuperfilterVerdict{false, "partition-stable", a, a1};
            }
        }
    }
    return SuperfilterVerdict{};
}

ExtendOutcome try_extend_ultrafilter(const SetFamily& f, const SetPredicate& phi) {
    const FilterVerdict fv = is_filter(f);
    if (!fv.ok) {
        throw std::domain_error("try_extend_ultrafilter: input is not a filter (axiom " +
                                std::to_string(fv.axiom) + ")");
    }
    const Mask full = f.u.full();
    Mask core = full;
    for (Mask s : f.members) core &= s;

    for (Mask a = 0; a <= full; ++a) {
        const Mask inside = core & a;
        if (inside == core || inside == 0) continue;  // already decided
        // Adjoining a set turns the core into its trace on the core; keep
        // the side that stays nonempty and phi-good.
        if (phi.fn(inside)) {
            core = inside;
        } else if (phi.fn(core ^ inside)) {
            core = core ^ inside;
        } else {
            return ExtendOutcome{false, std::nullopt, a};
        }
    }

    SetFamily family = principal_filter(f.u, core);
    for (Mask s : family.members) {
        if (!phi.fn(s)) {
            // Reachable only for predicates that are not monotone.
            return ExtendOutcome{false, std::nullopt, s};
        }
    }
    return ExtendOutcome{true, std::move(family), std::nullopt};
}

SetFamily extend_ultrafilter(const SetFamily& f, const SetPredicate& phi) {
    const SuperfilterVerdict sv = check_superfilter(phi, f);
    if (!sv.ok) {
        throw std::domain_error("extend_ultrafilter: predicate '" + phi.name +
                                "' fails the " + sv.condition + " condition");
    }
    ExtendOutcome out = try_extend_ultrafilter(f, phi);
    if (!out.success) {
        throw std::logic_error("extend_ultrafilter: construction stuck despite precondition");
    }
    const SetFamily& result = *out.family;
    if (!is_ultrafilter(result).ok) {
        throw std::logic_error("extend_ultrafilter: result is not an ultrafilter");
    }
    for (Mask s : f.members) {
        if (!result.contains(s)) {
            throw std::logic_error("extend_ultrafilter: input member lost");
        }
    }
    return result;
}

PartitionRegularity partition_regular(Universe u, std::span<const Mask> g) {
    if (g.empty()) throw std::invalid_argument("partition_regular: empty family");
    for (Mask s : g) {
        if (s == 0) {
            throw std::invalid_argument("partition_regular: the empty set is not a candidate");
        }
        if ((s & ~u.full()) != 0) {
            throw std::out_of_range("partition_regular: candidate outside universe");
        }
    }
    if (u.m > 12) {
        throw std::out_of_range("partition_regular: brute force supports m <= 12");
    }

    const int m = u.m;
    std::vector<int> label(static_cast<std::size_t>(m), 0);
    std::vector<Mask> parts;
    while (true) {
        parts.clear();
        for (int i = 0; i < m; ++i) {
            const int l = label[static_cast<std::size_t>(i)];
            if (static_cast<std::size_t>(l) == parts.size()) parts.push_back(0);
            parts[static_cast<std::size_t>(l)] |= Mask{1} << i;
        }
        bool some_part_hits = false;
        for (Mask p : parts) {
            for (Mask s : g) {
                if ((p & s) == s) {
                    some_part_hits = true;
                    break;
                }
            }
            if (some_part_hits) break;
        }
        if (!some_part_hits) {
            return PartitionRegularity{false, std::nullopt, parts};
        }

        // Next restricted growth string, lexicographically.
        int i = m - 1;
        for (; i >= 1; --i) {
            int prefix_max = 0;
            for (int j = 0; j < i; ++j) {
                prefix_max = std::max(prefix_max, label[static_cast<std::size_t>(j)]);
            }
            if (label[static_cast<std::size_t>(i)] <= prefix_max) {
                label[static_cast<std::size_t>(i)] += 1;
                std::fill(label.begin() + i + 1, label.end(), 0);
                break;
            }
        }
        if (i == 0) break;  // all strings exhausted
    }

    const SetFamily trivial(u, {u.full()});
    std::vector<Mask> gv(g.begin(), g.end());
    ExtendOutcome out = try_extend_ultrafilter(trivial, pred_contains_some(u, std::move(gv)));
    if (!out.success) {
        throw std::logic_error("partition_regular: extension failed on a regular family");
    }
    return PartitionRegularity{true, std::move(out.family), {}};
}

bool has_singleton_member(std::span<const Mask> g) {
    for (Mask s : g) {
        if (std::popcount(s) == 1) return true;
    }
    return false;
}

}  // namespace filter_lab
}  // namespace syndet
