#include "syndet/filter_lab.hpp"

#include <bit>
#include <random>
#include <stdexcept>

#include "doctest.h"

using namespace syndet::filter_lab;

namespace {

// Decodes a family from a bitmask over all subsets of {1..m}: subset s is a
// member iff bit s of the code is set. Covers every family on tiny universes.
SetFamily decode_family(Universe u, std::uint32_t code) {
    std::vector<Mask> ms;
    for (Mask s = 0; s <= u.full(); ++s) {
        if (code >> s & 1) ms.push_back(s);
    }
    return SetFamily(u, std::move(ms));
}

}  // namespace

TEST_SUITE("filter_lab") {

TEST_CASE("mask helpers") {
    const Universe u(3);
    CHECK(u.full() == 0b111);
    CHECK(mask_from_members(u, {{1, 3}}) == 0b101);
    CHECK(mask_members(0b101) == std::vector<int>{1, 3});
    CHECK(mask_members(0) == std::vector<int>{});
    CHECK(mask_to_string(0b101) == "{1,3}");
    CHECK(mask_to_string(0) == "{}");
    CHECK_THROWS_AS(mask_from_members(u, {{4}}), std::out_of_range);
    CHECK_THROWS_AS(mask_from_members(u, {{0}}), std::out_of_range);
    CHECK_THROWS_AS(Universe(0), std::invalid_argument);
    CHECK_THROWS_AS(Universe(17), std::invalid_argument);

    // Families normalize: sorted, duplicates dropped, members bounds-checked.
    const SetFamily f(u, {0b011, 0b001, 0b011});
    CHECK(f.members == std::vector<Mask>{0b001, 0b011});
    CHECK(f.contains(0b001));
    CHECK(!f.contains(0b111));
    CHECK_THROWS_AS(SetFamily(u, {0b1000}), std::out_of_range);
}

TEST_CASE("is_filter reports the first broken axiom with witnesses") {
    const Universe u(3);

    const SetFamily principal = principal_filter(u, 0b011);
    CHECK(principal.members == std::vector<Mask>{0b011, 0b111});
    CHECK(is_filter(principal).ok);

    const FilterVerdict empty_family = is_filter(SetFamily(u, {}));
    CHECK(!empty_family.ok);
    CHECK(empty_family.axiom == 0);

    const FilterVerdict has_empty = is_filter(SetFamily(u, {0, u.full()}));
    CHECK(!has_empty.ok);
    CHECK(has_empty.axiom == 1);
    CHECK(has_empty.a == Mask{0});

    // {1},{2},{1,2},{1,2,3}: both upward closure and intersection closure
    // fail; the checker reports the lowest-numbered axiom, scanning members
    // in ascending mask order, so the verdict is upward closure at {1} with
    // the least missing superset {1,3}.
    const FilterVerdict both = is_filter(SetFamily(u, {0b001, 0b010, 0b011, 0b111}));
    CHECK(!both.ok);
    CHECK(both.axiom == 2);
    CHECK(both.a == Mask{0b001});
    CHECK(both.b == Mask{0b101});

    // Upward-closed but not intersection-closed: {1,2}, {2,3} and all their
    // supersets, missing {2}.
    const FilterVerdict inter = is_filter(SetFamily(u, {0b011, 0b110, 0b111}));
    CHECK(!inter.ok);
    CHECK(inter.axiom == 3);
    CHECK(inter.a == Mask{0b011});
    CHECK(inter.b == Mask{0b110});

    CHECK_THROWS_AS(principal_filter(u, 0), std::invalid_argument);
    CHECK_THROWS_AS(principal_filter(u, 0b1001), std::out_of_range);
}

TEST_CASE("is_ultrafilter adds the dichotomy axiom") {
    const Universe u(3);
    CHECK(is_ultrafilter(principal_filter(u, 0b010)).ok);

    // A principal filter at a two-element core decides neither {1} nor {2,3}.
    const FilterVerdict v = is_ultrafilter(principal_filter(u, 0b011));
    CHECK(!v.ok);
    CHECK(v.axiom == 4);
    CHECK(v.a == Mask{0b001});
    CHECK(v.b == Mask{0b110});

    // Filter failures surface first, with their own axiom number.
    const FilterVerdict pw = is_ultrafilter(decode_family(u, 0xFFFF));
    CHECK(!pw.ok);
    CHECK(pw.axiom == 1);  // the full powerset includes the empty set
}

TEST_CASE("every ultrafilter on a tiny universe is principal") {
    for (int m = 1; m <= 4; ++m) {
        const Universe u(m);
        const std::uint32_t families = std::uint32_t{1}
                                       << ((std::uint32_t{1} << m));
        int accepted = 0;
        for (std::uint32_t code = 0; code < families; ++code) {
            const SetFamily f = decode_family(u, code);
            if (!is_ultrafilter(f).ok) continue;
            ++accepted;
            // The member intersection must be a singleton generating f.
            Mask core = u.full();
            for (Mask s : f.members) core &= s;
            CHECK(std::popcount(core) == 1);
            CHECK(f.members == principal_filter(u, core).members);
        }
        CHECK(accepted == m);  // exactly one ultrafilter per point
    }
}

TEST_CASE("accepted ultrafilters obey the boolean laws") {
    const Universe u(4);
    for (int point = 1; point <= 4; ++point) {
        const SetFamily f = principal_filter(u, Mask{1} << (point - 1));
        REQUIRE(is_ultrafilter(f).ok);
        for (Mask a = 0; a <= u.full(); ++a) {
            for (Mask b = 0; b <= u.full(); ++b) {
                CHECK(f.contains(a & b) == (f.contains(a) && f.contains(b)));
                CHECK(f.contains(a | b) == (f.contains(a) || f.contains(b)));
            }
        }
    }
}

TEST_CASE("generate_filter") {
    const Universe u(3);

    // Two generators meeting in {2}: the principal filter at the meet.
    const SetFamily g = generate_filter(u, {{Mask{0b011}, Mask{0b110}}});
    CHECK(g.members == principal_filter(u, 0b010).members);
    CHECK(g.members == std::vector<Mask>{0b010, 0b011, 0b110, 0b111});

    // A single generator on a larger universe keeps only its supersets.
    const Universe u4(4);
    const SetFamily one = generate_filter(u4, {{Mask{0b0111}}});
    CHECK(one.members == std::vector<Mask>{0b0111, 0b1111});

    // No generators: the trivial filter.
    const SetFamily none = generate_filter(u, {});
    CHECK(none.members == std::vector<Mask>{0b111});

    // Disjoint generators raise, carrying a minimal culpable subset.
    try {
        generate_filter(u, {{Mask{0b001}, Mask{0b111}, Mask{0b010}}});
        FAIL("expected EmptyIntersectionError");
    } catch (const EmptyIntersectionError& e) {
        // {1,2,3} is dropped: {1} and {2} already collide on their own.
        CHECK(e.culprits == std::vector<Mask>{0b001, 0b010});
        CHECK(std::string(e.what()).find("{1}") != std::string::npos);
    }
    CHECK_THROWS_AS(generate_filter(u, {{Mask{0b1000}}}), std::out_of_range);
}

TEST_CASE("predicate menu") {
    const Universe u(4);

    const SetPredicate ne = parse_predicate(u, "nonempty");
    CHECK(ne.name == "nonempty");
    CHECK(ne.fn(0b0001));
    CHECK(!ne.fn(0));

    const SetPredicate meets = parse_predicate(u, "meets:2,3");
    CHECK(meets.name == "meets:{2,3}");
    CHECK(meets.fn(0b0010));
    CHECK(meets.fn(0b1100));
    CHECK(!meets.fn(0b1001));

    const SetPredicate cs = parse_predicate(u, "contains-some:1;2,3");
    CHECK(cs.name == "contains-some:{1};{2,3}");
    CHECK(cs.fn(0b0001));
    CHECK(cs.fn(0b0110));
    CHECK(cs.fn(0b1110));
    CHECK(!cs.fn(0b0010));  // {2} alone contains neither {1} nor {2,3}

    const SetPredicate ms = parse_predicate(u, "min-size:2");
    CHECK(ms.name == "min-size:2");
    CHECK(ms.fn(0b0011));
    CHECK(!ms.fn(0b0010));

    CHECK_THROWS_AS(parse_predicate(u, "bogus"), std::invalid_argument);
    CHECK_THROWS_AS(parse_predicate(u, "meets:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_predicate(u, "meets:9"), std::out_of_range);
}

TEST_CASE("check_superfilter") {
    const Universe u(4);
    const SetFamily start = principal_filter(u, mask_from_members(u, {{1, 2}}));

    CHECK(check_superfilter(pred_nonempty(u), start).ok);
    CHECK(check_superfilter(pred_meets(u, mask_from_members(u, {{2, 3}})), start).ok);

    // meets:{3} is false on the filter member {1,2} itself.
    const SuperfilterVerdict h =
        check_superfilter(pred_meets(u, mask_from_members(u, {{3}})), start);
    CHECK(!h.ok);
    CHECK(h.condition == "holds-on-filter");
    CHECK(h.a == Mask{0b0011});

    // min-size:2 splits {1,2} into two bad singletons: not partition stable.
    const SuperfilterVerdict p = check_superfilter(pred_min_size(u, 2), start);
    CHECK(!p.ok);
    CHECK(p.condition == "partition-stable");
    CHECK(p.a == Mask{0b0011});

    // A predicate true on small sets only fails monotonicity.
    const SetPredicate shrinking{
        "at-most-one", [](Mask a) { return std::popcount(a) <= 1; }};
    const SetFamily trivial(u, {u.full()});
    const SuperfilterVerdict mono = check_superfilter(shrinking, trivial);
    CHECK(!mono.ok);
    CHECK(mono.condition == "holds-on-filter");  // already false at {1,2,3,4}

    const SetPredicate holey{
        "full-or-tiny", [u](Mask a) { return a == u.full() || std::popcount(a) <= 1; }};
    const SuperfilterVerdict mono2 = check_superfilter(holey, trivial);
    CHECK(!mono2.ok);
    CHECK(mono2.condition == "monotone");
    CHECK(mono2.b == Mask{0b0011});  // least phi-bad superset of a phi-good set
    CHECK(mono2.a == Mask{0b0010});  // subsets are scanned descending from b

    CHECK_THROWS_AS(check_superfilter(pred_nonempty(u), SetFamily(u, {})),
                    std::domain_error);
    const Universe big(13);
    CHECK_THROWS_AS(
        check_superfilter(pred_nonempty(big), SetFamily(big, {big.full()})),
        std::out_of_range);
}

TEST_CASE("worked extension: principal at {1,2} under meets {2,3}") {
    const Universe u(4);
    const SetFamily start = principal_filter(u, mask_from_members(u, {{1, 2}}));
    const SetPredicate phi = pred_meets(u, mask_from_members(u, {{2, 3}}));

    const SetFamily out = extend_ultrafilter(start, phi);
    CHECK(out.members == principal_filter(u, mask_from_members(u, {{2}})).members);
    CHECK(is_ultrafilter(out).ok);
    for (Mask s : start.members) CHECK(out.contains(s));
    for (Mask s : out.members) CHECK(phi.fn(s));

    // The unchecked form reports the same construction.
    const ExtendOutcome raw = try_extend_ultrafilter(start, phi);
    CHECK(raw.success);
    CHECK(raw.family->members == out.members);
    CHECK(!raw.stuck_at.has_value());
}

TEST_CASE("extension edge cases") {
    const Universe u(4);
    const SetFamily trivial(u, {u.full()});

    // The trivial filter under mere nonemptiness lands at the first point.
    const SetFamily first = extend_ultrafilter(trivial, pred_nonempty(u));
    CHECK(first.members == principal_filter(u, 0b0001).members);

    // Extending an ultrafilter returns it unchanged.
    const SetFamily at3 = principal_filter(u, 0b0100);
    CHECK(extend_ultrafilter(at3, pred_nonempty(u)).members == at3.members);

    // Bad predicates are rejected up front by the checked form...
    CHECK_THROWS_AS(extend_ultrafilter(trivial, pred_min_size(u, 2)),
                    std::domain_error);
    // ...while the raw form gets stuck at the first undecidable set.
    const SetPredicate only_full{"only-full",
                                 [u](Mask a) { return a == u.full(); }};
    const ExtendOutcome stuck = try_extend_ultrafilter(trivial, only_full);
    CHECK(!stuck.success);
    CHECK(stuck.stuck_at == Mask{0b0001});
    CHECK(!stuck.family.has_value());

    CHECK_THROWS_AS(try_extend_ultrafilter(SetFamily(u, {0b0011}), pred_nonempty(u)),
                    std::domain_error);  // not upward closed, hence no filter
}

TEST_CASE("extension postconditions on random principal filters") {
    std::mt19937_64 rng(7301);
    for (int rep = 0; rep < 120; ++rep) {
        const Universe u(2 + static_cast<int>(rng() % 3));
        const Mask core = 1 + static_cast<Mask>(rng() % u.full());
        const SetFamily f = principal_filter(u, core);
        const Mask probe = core;  // phi = meets the original core
        const SetFamily out = extend_ultrafilter(f, pred_meets(u, probe));
        CHECK(is_ultrafilter(out).ok);
        for (Mask s : f.members) CHECK(out.contains(s));
        for (Mask s : out.members) CHECK((s & probe) != 0);
    }
}

TEST_CASE("partition_regular") {
    const Universe u(4);

    // A singleton member makes the family regular; the witness ultrafilter
    // concentrates on that point and contains a candidate inside each member.
    const PartitionRegularity r = partition_regular(u, {{Mask{0b0010}}});
    CHECK(r.regular);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->members == principal_filter(u, 0b0010).members);
    CHECK(is_ultrafilter(*r.witness).ok);
    for (Mask s : r.witness->members) CHECK((s & 0b0010) == 0b0010);
    CHECK(r.refuting_partition.empty());

    // {1,2} and {3,4}: splitting along {1,3} | {2,4} kills both.
    const PartitionRegularity nr =
        partition_regular(u, {{Mask{0b0011}, Mask{0b1100}}});
    CHECK(!nr.regular);
    CHECK(!nr.witness.has_value());
    CHECK(nr.refuting_partition ==
          std::vector<Mask>{0b0101, 0b1010});
    // The refutation replays: no part contains either candidate.
    for (Mask part : nr.refuting_partition) {
        CHECK((part & 0b0011) != 0b0011);
        CHECK((part & 0b1100) != 0b1100);
    }

    // All singletons: trivially regular.
    const PartitionRegularity all = partition_regular(
        u, {{Mask{0b0001}, Mask{0b0010}, Mask{0b0100}, Mask{0b1000}}});
    CHECK(all.regular);

    CHECK_THROWS_AS(partition_regular(u, {}), std::invalid_argument);
    CHECK_THROWS_AS(partition_regular(u, {{Mask{0}}}), std::invalid_argument);
    CHECK_THROWS_AS(partition_regular(u, {{Mask{0b10000}}}), std::out_of_range);
    const Universe big(13);
    CHECK_THROWS_AS(partition_regular(big, {{Mask{1}}}), std::out_of_range);
}

TEST_CASE("brute force agrees with the singleton criterion") {
    std::mt19937_64 rng(7302);
    for (int rep = 0; rep < 200; ++rep) {
        const Universe u(2 + static_cast<int>(rng() % 4));
        std::vector<Mask> g;
        const int sz = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < sz; ++i) {
            g.push_back(1 + static_cast<Mask>(rng() % u.full()));
        }
        const PartitionRegularity pr = partition_regular(u, g);
        CHECK(pr.regular == has_singleton_member(g));
        if (pr.regular) {
            REQUIRE(pr.witness.has_value());
            CHECK(is_ultrafilter(*pr.witness).ok);
            for (Mask s : pr.witness->members) {
                bool contains_candidate = false;
                for (Mask cand : g) {
                    contains_candidate = contains_candidate || (s & cand) == cand;
                }
                CHECK(contains_candidate);
            }
        } else {
            // Refuting partitions really partition the universe.
            Mask seen = 0;
            for (Mask part : pr.refuting_partition) {
                CHECK(part != 0);
                CHECK((seen & part) == 0);
                seen |= part;
            }
            CHECK(seen == u.full());
        }
    }
}

}  // TEST_SUITE
