#pragma once

#include <Eigen/Dense>
#include <vector>

#include "comax/tolerances.hpp"

namespace comax {

// Dense LP, maximization:  max c'x  s.t.  A_le x <= b_le,  A_eq x = b_eq,
// x free. Bounds go in as explicit inequality rows.
struct LpProblem {
    Eigen::VectorXd objective;
    Eigen::MatrixXd a_le;  // may have 0 rows
    Eigen::VectorXd b_le;
    Eigen::MatrixXd a_eq;  // may have 0 rows
    Eigen::VectorXd b_eq;

    void add_le(const Eigen::VectorXd& row, double rhs);
    void add_eq(const Eigen::VectorXd& row, double rhs);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Eigen::VectorXd x;
    double value = 0.0;
    Eigen::VectorXd dual_le;  // >= 0 at optimum
    Eigen::VectorXd dual_eq;
    int pivots = 0;
};

// Two-phase primal simplex with Bland's rule. Throws SingularBasis when the
// final basis cannot be solved to tolerance (message carries pivot counts).
LpResult solve_lp(const LpProblem& prob, const Tolerances& tol = {});

// Stationarity residual of the dual certificate:
// || A_le' u + A_eq' v - c ||_inf plus complementary slackness slack.
double dual_residual(const LpProblem& prob, const LpResult& res);

} // namespace comax
