#pragma once

// Test-only reference implementations, kept independent of the library
// code paths they check.

#include "heesch/cnf.hpp"
#include "heesch/shape.hpp"

#include <cstdint>
#include <optional>

namespace heesch::oracle {

struct BruteForceResult {
    bool sat = false;
    std::uint64_t model_count = 0;
    Model first_model;  // empty when unsat
};

// Exhaustive 2^V evaluation, word-parallel over the low six variables.
// Supports up to 26 variables.
BruteForceResult brute_force(const CnfFormula& formula);

// Exhaustive backtracking search for nested corona structures built
// directly from the surroundability definition: placements tagged with
// layer 1..depth, every halo cell of each closed layer covered, layers
// touching their predecessor and nothing two or more layers down, the
// interior simply connected, and (for hole_free) the final packing
// simply connected.  depth is 1 or 2.
bool corona_exists(const Shape& shape, int depth, bool hole_free);

} // namespace heesch::oracle
