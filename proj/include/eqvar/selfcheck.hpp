#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace eqvar {

struct CheckResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::string note;
};

// Invariant battery: skew-sum identity, pullback squares, filling vs grouping,
// discriminant extraction, and the two equation-vs-combinatorics comparisons.
std::vector<CheckResult> run_selfcheck(std::uint64_t seed);

} // namespace eqvar
