#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace syndet {
namespace filter_lab {

/// Subset of a universe {1..m}, element e stored as bit e-1.
using Mask = std::uint32_t;

struct Universe {
    int m;
    explicit Universe(int m_);
    Mask full() const { return (Mask{1} << m) - 1; }
};

std::vector<int> mask_members(Mask a);
Mask mask_from_members(Universe u, std::span<const int> members);
std::string mask_to_string(Mask a);  // "{1,3}" form, for messages

/// Family of subsets; members kept sorted, unique, inside the universe.
struct SetFamily {
    Universe u;
    std::vector<Mask> members;

    SetFamily(Universe u_, std::vector<Mask> members_);
    bool contains(Mask a) const;
};

/// All supersets of core (the principal filter at core). core must be nonempty.
SetFamily principal_filter(Universe u, Mask core);

/// Axiom indices reported by the checkers:
///   0 nonemptiness, 1 no empty member, 2 upward closure,
///   3 intersection closure, 4 ultrafilter dichotomy.
struct FilterVerdict {
    bool ok = true;
    int axiom = -1;
    std::optional<Mask> a;
    std::optional<Mask> b;
    std::string detail;
};

/// Checks the filter axioms in the fixed order above; within an axiom,
/// witnesses are scanned in ascending mask order. Returns the first failure.
FilterVerdict is_filter(const SetFamily& f);
FilterVerdict is_ultrafilter(const SetFamily& f);

/// Thrown by generate_filter when some generators have empty intersection;
/// carries an inclusion-minimal culpable subset of the generators.
struct EmptyIntersectionError : std::invalid_argument {
    std::vector<Mask> culprits;
    explicit EmptyIntersectionError(std::vector<Mask> culprits_);
};

/// Upward closure of all finite intersections of the generators (on a finite
/// universe: the principal filter at the total intersection). No generators
/// yields the trivial filter {universe}.
SetFamily generate_filter(Universe u, std::span<const Mask> generators);

/// Named predicate on subsets of a fixed universe.
struct SetPredicate {
    std::string name;
    std::function<bool(Mask)> fn;
};

SetPredicate pred_nonempty(Universe u);
SetPredicate pred_meets(Universe u, Mask s);
SetPredicate pred_contains_some(Universe u, std::vector<Mask> g);
SetPredicate pred_min_size(Universe u, int k);
/// Menu syntax: "nonempty" | "meets:1,3" | "contains-some:1;2,3" | "min-size:2".
SetPredicate parse_predicate(Universe u, std::string_view text);

struct SuperfilterVerdict {
    bool ok = true;
    /// One of "holds-on-filter", "monotone", "partition-stable" on failure.
    std::string condition;
    std::optional<Mask> a;
    std::optional<Mask> b;
};

/// Verifies that phi holds on the filter, is monotone over all subset pairs,
/// and is partition stable (phi(A) forces phi on a part of every 2-split).
/// The two scans are exponential; universes up to m = 12 are accepted.
SuperfilterVerdict check_superfilter(const SetPredicate& phi, const SetFamily& f);

struct ExtendOutcome {
    bool success = false;
    std::optional<SetFamily> family;
    /// On failure: the set where neither it nor its complement kept the
    /// extension both proper and phi-good.
    std::optional<Mask> stuck_at;
};

/// Greedy one-set-at-a-time extension, subsets in ascending mask order:
/// adjoin A when the generated extension stays free of the empty set and
/// phi-good, otherwise adjoin its complement; fails only when neither side
/// works (impossible once check_superfilter has passed). The finite-universe
/// invariant that every filter is principal keeps each step O(1).
ExtendOutcome try_extend_ultrafilter(const SetFamily& f, const SetPredicate& phi);

/// Checked form: enforces check_superfilter as a precondition, then runs the
/// greedy extension and asserts the postconditions (ultrafilter, contains
/// the input, phi everywhere).
SetFamily extend_ultrafilter(const SetFamily& f, const SetPredicate& phi);

struct PartitionRegularity {
    bool regular = false;
    /// On success: ultrafilter whose members all contain a member of G.
    std::optional<SetFamily> witness;
    /// On failure: parts of the first refuting partition, in first-appearance
    /// order of the partition labels.
    std::vector<Mask> refuting_partition;
};

/// Brute force over every partition of the universe into nonempty parts
/// (restricted-growth-string order). Regular means each partition has a part
/// containing some member of G. Universes up to m = 12 are accepted.
PartitionRegularity partition_regular(Universe u, std::span<const Mask> g);

/// Finite-universe criterion equivalent to partition regularity: G contains
/// a singleton. Kept separate so tests can confront the two routes.
bool has_singleton_member(std::span<const Mask> g);

}  // namespace filter_lab
}  // namespace syndet
