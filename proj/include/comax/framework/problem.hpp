#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "comax/comonotone/matroid.hpp"
#include "comax/tolerances.hpp"

namespace comax {

struct Solution {
    Eigen::VectorXd x;
    double value = 0.0;
};

struct SupportCandidate {
    std::vector<int> indices;          // sorted
    std::vector<std::int8_t> signs;    // aligned with indices; empty if none
    long cell_id = -1;
    int t1 = 0, t2 = 0;                // tie-block parameters
};

// Regimes select the candidate generator.
struct GeneralRegime {          // arbitrary comonotone X via a certified psi
    PermutationMapping psi;
};
struct StandardRegime {};       // standard comonotone X
struct NonnegRegime {};         // standard comonotone X subset of R^n_+
struct SignInvRegime {};        // sign-invariant standard comonotone X
using Regime = std::variant<GeneralRegime, StandardRegime, NonnegRegime, SignInvRegime>;

struct ProblemSpec {
    Eigen::MatrixXd a;  // r x n effective factor, full row rank after compression
    Regime regime = StandardRegime{};
    // Fixed-support subproblem: best feasible point with support inside the
    // candidate; empty optional when the restricted optimum is not attained.
    std::function<std::optional<Solution>(const SupportCandidate&)> fixed_support_oracle;
    std::optional<int> sparsity_cap;
    std::function<double(const Eigen::VectorXd&)> objective;      // f(y), y = Ax
    std::function<Eigen::VectorXd(const Eigen::VectorXd&)> subgradient;  // of f at y
    bool quasi_convex = false;
    bool image_compact = true;
};

struct GenerationResult {
    std::vector<SupportCandidate> candidates;  // deduplicated, sorted
    long cell_count = 0;
};

struct SolveReport {
    Solution best;
    std::vector<int> support;
    long cell_count = 0;
    long candidate_count = 0;
    long oracle_calls = 0;
    double wall_ms = 0.0;
    bool fallback_used = false;
};

// Orthonormal row basis of a (possibly row-deficient) factor; value
// orderings are invariant under this change of basis.
Eigen::MatrixXd row_compress(const Eigen::MatrixXd& a, double tol = 1e-10);

// Subgradient of f at the optimum maps the convex problem to its linear
// counterpart c = subgradient(A x_hat).
Eigen::VectorXd reduce_to_linear(const ProblemSpec& spec, const Eigen::VectorXd& x_hat);

} // namespace comax
