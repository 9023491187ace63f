#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace syndet {

struct SelftestCheck {
    std::string name;
    bool pass = false;
};

struct SelftestReport {
    std::uint64_t seed = 0;
    std::vector<SelftestCheck> checks;
    bool all_pass = false;
};

/// Cross-module invariant sweep at reduced sizes. Deterministic for a fixed
/// seed and safe to run repeatedly; every check is named so a regression
/// points at the invariant it broke.
SelftestReport run_selftest(std::uint64_t seed);

}  // namespace syndet
