#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace comax {

struct FinitePointSet {
    std::vector<Eigen::VectorXd> points;  // deduplicated, same dimension
    int dim = 0;

    static FinitePointSet from_points(std::vector<Eigen::VectorXd> pts);
    static FinitePointSet from_csv(const std::string& path);
};

// All maximizers of v'x over the set, exact: comparisons run in rational
// arithmetic (doubles convert exactly).
std::vector<int> argmax_linear_indices(const FinitePointSet& set, const Eigen::VectorXd& v);
std::vector<Eigen::VectorXd> argmax_linear(const FinitePointSet& set, const Eigen::VectorXd& v);

} // namespace comax
