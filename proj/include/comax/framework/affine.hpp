#pragma once

#include <functional>
#include <optional>
#include <utility>

#include "comax/framework/problem.hpp"

namespace comax {

// Per-cell feasibility pattern for binary standard comonotone S intersected
// with {Mx <= b}: coordinates forced on/off by the threshold, tie
// coordinates filled as an index-order prefix, and inequality rows with
// positive multiplier forced to equality.
struct AffinePattern {
    std::vector<int> ones;
    std::vector<int> zeros;
    std::vector<int> ties;           // ascending; feasible fills are prefixes
    std::vector<int> equality_rows;  // rows of (M, b) pinned to equality
};

// Returns the min-e'x and max-e'x feasible points for a pattern, or nothing.
using RepresentativeOracle =
    std::function<std::optional<std::pair<Solution, Solution>>(const AffinePattern&)>;

// Candidate solutions from the (c, lambda, gamma) arrangement; contains an
// optimum whenever conv(S & P) = conv(S) & P holds.
std::vector<Solution> affine_restricted_candidates(const ProblemSpec& spec,
                                                   const Eigen::MatrixXd& m,
                                                   const Eigen::VectorXd& b,
                                                   const RepresentativeOracle& oracle,
                                                   const Tolerances& tol = {},
                                                   const Budget& budget = {});

} // namespace comax
