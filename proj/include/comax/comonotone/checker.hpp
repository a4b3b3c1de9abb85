#pragma once

#include <Eigen/Dense>
#include <string>

#include "comax/comonotone/matroid.hpp"
#include "comax/comonotone/point_set.hpp"
#include "comax/tolerances.hpp"

namespace comax {

struct ComonotoneVerdict {
    bool yes = false;
    Eigen::VectorXd witness_v;  // set when no
    int i = -1, j = -1;         // violated coordinate pair
    std::string reason;
};

// Exact certification over the v-space arrangement (pairwise point planes
// plus coordinate-tie planes). n <= 5, |set| <= 64.
ComonotoneVerdict check_standard_comonotone(const FinitePointSet& set,
                                            const Tolerances& tol = {});

// Two-coordinate shortcut: check v in {e, -e} against both ordering cones.
ComonotoneVerdict check_comonotone_2d(const FinitePointSet& set);

// Harness: whenever psi is surjective over all n! permutations, the full
// checker must say yes. Returns whether the implication holds on this set.
bool check_surjective_psi_implies_standard(const FinitePointSet& set,
                                           const PermutationMapping& psi);

} // namespace comax
