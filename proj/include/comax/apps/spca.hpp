#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "comax/framework/solve.hpp"
#include "comax/tolerances.hpp"

namespace comax {

// Sparse principal component analysis family: one factor matrix, a sparsity
// budget, and the variant-specific extras.
struct SpcaInstance {
    Eigen::MatrixXd a;         // r x n factor of the covariance
    int s = 1;                 // support budget
    int d = 1;                 // component count (multi / disjoint variants)
    std::vector<int> s_vec;    // per-component budgets (disjoint variant)
    Eigen::VectorXd a_lin;     // linear term (sphere-with-linear-term variant)

    Eigen::MatrixXd sigma() const { return a.transpose() * a; }
    void validate() const;

    // Factor a covariance matrix down to its numerical rank.
    static SpcaInstance from_sigma(const Eigen::MatrixXd& sigma, double rank_tol = 1e-10);
};

struct DisjointAssignment {
    Eigen::MatrixXi z;  // n x (d+1); row sums 1, column j <= s_j for j < d
};

struct DisjointResult {
    DisjointAssignment assignment;
    double value = 0.0;
    long cell_count = 0;
};

// Fixed-support subproblems.
Solution spca_single_oracle(const SpcaInstance& inst, const std::vector<int>& support,
                            const Tolerances& tol = {});

struct NnOracleResult {
    std::optional<Solution> attained;  // strictly positive on the support
    Solution fallback;                 // always-feasible coordinate vector
};
NnOracleResult nn_spca_oracle(const SpcaInstance& inst, const std::vector<int>& support,
                              const Tolerances& tol = {});

// Sphere maximization of x'Sx + a'x on the support (trust-region form).
Solution tst_oracle(const SpcaInstance& inst, const std::vector<int>& support,
                    const Tolerances& tol = {});

// End-to-end solvers over the framework.
SolveReport spca_single_solve(const SpcaInstance& inst, int threads = 1,
                              const Tolerances& tol = {}, const Budget& budget = {});
SolveReport nn_spca_solve(const SpcaInstance& inst, int threads = 1,
                          const Tolerances& tol = {}, const Budget& budget = {});
SolveReport tst_solve(const SpcaInstance& inst, int threads = 1, const Tolerances& tol = {},
                      const Budget& budget = {});
SolveReport spca_multi_solve(const SpcaInstance& inst, int threads = 1,
                             const Tolerances& tol = {}, const Budget& budget = {});

// Disjoint-components variant: one representative assignment per parameter
// cell. Small instances only (r <= 2, d <= 2, n <= 6).
DisjointResult disjoint_spca_solve(const SpcaInstance& inst, const Tolerances& tol = {},
                                   const Budget& budget = {});

// Scaled symmetric vectorization: columns svec(a_i a_i') with off-diagonal
// entries times sqrt(2), so dot products match Frobenius products.
Eigen::MatrixXd lift_factor(const Eigen::MatrixXd& a);

} // namespace comax
