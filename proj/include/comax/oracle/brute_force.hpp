#pragma once

#include "comax/apps/spca.hpp"
#include "comax/framework/problem.hpp"

namespace comax {

// Exhaustive reference solver: every support within the cap (and every sign
// pattern under the two-sided regime) goes through the fixed-support oracle.
// Shares no candidate generation with the framework.
Solution brute_force_solve(const ProblemSpec& spec, const Budget& budget = {});

// Exhaustive reference for the disjoint-components variant: all capped
// assignments of columns to components.
DisjointResult disjoint_brute_force(const SpcaInstance& inst, const Budget& budget = {});

} // namespace comax
