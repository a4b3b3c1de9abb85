#pragma once

#include <Eigen/Dense>
#include <vector>

#include "comax/tolerances.hpp"

namespace comax {

// One cell of the pairwise value arrangement in c-space: column values
// a_i'c grouped by equality, groups listed in descending value order with
// ascending indices inside each group.
struct OrderedPartition {
    std::vector<std::vector<int>> groups;
    std::vector<std::int8_t> column_sign;  // sign of a_i'c at the witness
    Eigen::VectorXd witness;
    int codim = 0;
};

// absolute = false: planes (a_i - a_j)'c = 0, grouping on values.
// absolute = true: planes (a_i -+ a_j)'c = 0, grouping on |values|
// (sign-invariant regime); group order is by |value|.
std::vector<OrderedPartition> value_partitions(const Eigen::MatrixXd& a, bool absolute,
                                               int max_codim, const Tolerances& tol = {},
                                               const Budget& budget = {});

} // namespace comax
