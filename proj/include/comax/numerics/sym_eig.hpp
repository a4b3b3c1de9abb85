#pragma once

#include <Eigen/Dense>

#include "comax/tolerances.hpp"

namespace comax {

struct EigResult {
    Eigen::VectorXd values;   // descending
    Eigen::MatrixXd vectors;  // columns, orthonormal, aligned with values
};

// Cyclic Jacobi for symmetric matrices up to order 64. Deterministic sweep
// order, eigenvalues sorted descending, each eigenvector normalized with its
// largest-magnitude entry positive.
EigResult sym_eig(const Eigen::MatrixXd& m, const Tolerances& tol = {});

// Sum of the d largest eigenvalues.
double ky_fan(const Eigen::MatrixXd& m, int d, const Tolerances& tol = {});

} // namespace comax
