#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "comax/tolerances.hpp"

namespace comax {

struct Hyperplane {
    Eigen::VectorXd normal;  // nonzero
    double offset = 0.0;     // plane: normal'z = offset
};

// One relatively open cell: sign of (normal'w - offset) per input plane,
// a strictly interior witness point, and the cell dimension.
struct CellWitness {
    std::vector<std::int8_t> signs;  // -1 / 0 / +1, aligned with input planes
    Eigen::VectorXd witness;
    int dim = 0;
};

// All cells of codimension <= max_codim (max_codim < 0 means every
// codimension down to the lowest-dimensional flats). Coincident input planes
// are merged internally; output signs refer to the original plane list.
// Output is sorted lexicographically by sign vector.
std::vector<CellWitness> enumerate_cells(const std::vector<Hyperplane>& planes,
                                         int dim, int max_codim = -1,
                                         const Tolerances& tol = {},
                                         const Budget& budget = {});

// Parametrization of the flat cut out by the active planes, plus the induced
// arrangement of the remaining planes on it. Coincident induced planes are
// deduplicated; plane_map sends each original plane index to its induced
// index, -2 when the plane contains the flat, -3 when disjoint from it.
struct FlatRestriction {
    Eigen::VectorXd origin;
    Eigen::MatrixXd basis;             // columns orthonormal
    std::vector<Hyperplane> induced;
    std::vector<int> plane_map;
    std::vector<std::int8_t> constant_sign;  // for -3 planes: sign on the flat
};

FlatRestriction restrict_to_flat(const std::vector<Hyperplane>& planes, int dim,
                                 const std::vector<int>& active,
                                 const Tolerances& tol = {});

} // namespace comax
