#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "comax/comonotone/permutation.hpp"

namespace comax {

enum class MatroidKind { IndependentSets, Bases };

struct MatroidOracle {
    int n = 0;
    MatroidKind kind = MatroidKind::Bases;
    std::function<bool(const std::vector<int>&)> independent;  // sorted subset

    static MatroidOracle uniform(int s, int n, MatroidKind kind);
    // blocks[i] = block id of element i; caps per block.
    static MatroidOracle partition(std::vector<int> blocks, std::vector<int> caps,
                                   MatroidKind kind);
    // Elements are edges (u, v) of a graph; independent = forest.
    static MatroidOracle graphic(int num_vertices, std::vector<std::pair<int, int>> edges,
                                 MatroidKind kind);
};

// Sampled axiom validation (hereditary chains + exchange pairs); throws
// MatroidAxiomViolation on any counterexample.
void validate_matroid(const MatroidOracle& m, std::uint64_t seed = 1, int samples = 200);

struct PermutationMapping {
    std::function<Permutation(const Permutation&)> eval;
    std::string cost_label = "T2";
};

// Psi from the greedy run in order pi: selected elements first (in pi order),
// unselected after (in pi order).
PermutationMapping matroid_psi(const MatroidOracle& m);

// Companion greedy solver for max v'x over the matroid's feasible sets; for
// IndependentSets only strictly positive weights are picked up.
std::pair<std::vector<int>, double> matroid_argmax(const MatroidOracle& m,
                                                   const Eigen::VectorXd& v);

} // namespace comax
