#pragma once

#include "comax/framework/problem.hpp"

namespace comax {

// Generate candidates, drive the fixed-support oracle, keep the best
// attained solution. Deterministic for any thread count: results are
// reduced in candidate order.
SolveReport solve(const ProblemSpec& spec, int threads = 1, const Tolerances& tol = {},
                  const Budget& budget = {});

// Marks a quasi-convex objective as safe for the pipeline; requires the
// compact-image flag (the reduction fails on unbounded images).
ProblemSpec quasiconvex_adapter(const ProblemSpec& spec);

} // namespace comax
