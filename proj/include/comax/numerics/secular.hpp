#pragma once

#include <Eigen/Dense>

#include "comax/tolerances.hpp"

namespace comax {

// Root of phi(mu) = sum_i (b_i/2)^2 / (mu - lam_i)^2 = 1 on (lam_1, inf),
// lam given descending. Safeguarded Newton with bisection fallback.
// Throws HardCase when every b_i in the top eigenvalue group (relative
// tolerance tol.group_rel) vanishes and no root exists above lam_1.
double secular_root(const Eigen::VectorXd& lam, const Eigen::VectorXd& b,
                    const Tolerances& tol = {});

} // namespace comax
