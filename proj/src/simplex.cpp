#include "comax/numerics/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "comax/errors.hpp"

namespace comax {

void LpProblem::add_le(const Eigen::VectorXd& row, double rhs) {
    a_le.conservativeResize(a_le.rows() + 1, row.size());
    a_le.row(a_le.rows() - 1) = row.transpose();
    b_le.conservativeResize(b_le.size() + 1);
    b_le[b_le.size() - 1] = rhs;
}

void LpProblem::add_eq(const Eigen::VectorXd& row, double rhs) {
    a_eq.conservativeResize(a_eq.rows() + 1, row.size());
    a_eq.row(a_eq.rows() - 1) = row.transpose();
    b_eq.conservativeResize(b_eq.size() + 1);
    b_eq[b_eq.size() - 1] = rhs;
}

namespace {

// Internal standard form: min f'v, Av = b, v >= 0.
// Columns: [x+ (n)] [x- (n)] [slack (m1)] [artificial (m)].
struct Tableau {
    Eigen::MatrixXd a;
    Eigen::VectorXd b;
    std::vector<int> basis;  // per row
    int pivots = 0;
};

// One pass of primal simplex (minimization) with Bland's rule on the columns
// in [0, ncols). Returns false on unboundedness.
bool run_simplex(Tableau& t, const Eigen::VectorXd& f, int ncols, double tol,
                 Eigen::VectorXd* reduced_out) {
    const int m = static_cast<int>(t.a.rows());
    const long iter_cap = 20000L + 200L * (m + ncols);
    for (long iter = 0;; ++iter) {
        if (iter > iter_cap) throw SingularBasis("simplex: iteration cap hit (pivots=" + std::to_string(t.pivots) + ")");
        // y solves B' y = f_B via the current row-reduced tableau: reduced
        // cost r_j = f_j - f_B' (B^-1 A_j); tableau already stores B^-1 A.
        Eigen::VectorXd fb(m);
        for (int i = 0; i < m; ++i) fb[i] = f[t.basis[i]];
        int enter = -1;
        Eigen::VectorXd reduced(ncols);
        for (int j = 0; j < ncols; ++j) {
            reduced[j] = f[j] - fb.dot(t.a.col(j));
            if (enter < 0 && reduced[j] < -tol) enter = j;  // Bland: first index
        }
        if (enter < 0) {
            if (reduced_out) *reduced_out = reduced;
            return true;
        }
        int leave = -1;
        double best = std::numeric_limits<double>::infinity();
        for (int i = 0; i < m; ++i) {
            if (t.a(i, enter) > tol) {
                double ratio = t.b[i] / t.a(i, enter);
                if (ratio < best - tol ||
                    (ratio < best + tol && (leave < 0 || t.basis[i] < t.basis[leave]))) {
                    best = ratio;
                    leave = i;
                }
            }
        }
        if (leave < 0) return false;
        double piv = t.a(leave, enter);
        t.a.row(leave) /= piv;
        t.b[leave] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == leave) continue;
            double factor = t.a(i, enter);
            if (factor == 0.0) continue;
            t.a.row(i) -= factor * t.a.row(leave);
            t.b[i] -= factor * t.b[leave];
        }
        t.basis[leave] = enter;
        ++t.pivots;
    }
}

} // namespace

LpResult solve_lp(const LpProblem& prob, const Tolerances& tol) {
    const int n = static_cast<int>(prob.objective.size());
    const int m1 = static_cast<int>(prob.a_le.rows());
    const int m2 = static_cast<int>(prob.a_eq.rows());
    const int m = m1 + m2;
    if (n == 0) throw InvalidInput("solve_lp: empty objective");

    const int ncols = 2 * n + m1;        // structural + slack
    const int total = ncols + m;         // + artificials
    Tableau t;
    t.a = Eigen::MatrixXd::Zero(m, total);
    t.b.resize(m);
    std::vector<double> row_sign(m, 1.0);

    for (int i = 0; i < m; ++i) {
        Eigen::VectorXd row = (i < m1) ? Eigen::VectorXd(prob.a_le.row(i))
                                       : Eigen::VectorXd(prob.a_eq.row(i - m1));
        double rhs = (i < m1) ? prob.b_le[i] : prob.b_eq[i - m1];
        double s = (rhs < 0) ? -1.0 : 1.0;
        row_sign[i] = s;
        t.a.block(i, 0, 1, n) = s * row.transpose();
        t.a.block(i, n, 1, n) = -s * row.transpose();
        if (i < m1) t.a(i, 2 * n + i) = s;
        t.a(i, ncols + i) = 1.0;
        t.b[i] = s * rhs;
    }
    t.basis.resize(m);
    for (int i = 0; i < m; ++i) t.basis[i] = ncols + i;

    LpResult res;
    const double tiny = tol.primal;

    // Phase 1.
    Eigen::VectorXd f1 = Eigen::VectorXd::Zero(total);
    for (int i = 0; i < m; ++i) f1[ncols + i] = 1.0;
    if (m > 0) {
        if (!run_simplex(t, f1, total, tiny, nullptr))
            throw SingularBasis("simplex: phase 1 unbounded");
        double art = 0.0;
        for (int i = 0; i < m; ++i)
            if (t.basis[i] >= ncols) art += t.b[i];
        if (art > tiny * std::max(1.0, t.b.cwiseAbs().maxCoeff())) {
            res.status = LpStatus::Infeasible;
            res.pivots = t.pivots;
            return res;
        }
        // Pivot leftover zero-level artificials out where possible.
        for (int i = 0; i < m; ++i) {
            if (t.basis[i] < ncols) continue;
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (std::abs(t.a(i, j)) > tiny) { enter = j; break; }
            if (enter < 0) continue;  // redundant row, artificial stays at 0
            double piv = t.a(i, enter);
            t.a.row(i) /= piv;
            t.b[i] /= piv;
            for (int k = 0; k < m; ++k) {
                if (k == i) continue;
                double factor = t.a(k, enter);
                if (factor == 0.0) continue;
                t.a.row(k) -= factor * t.a.row(i);
                t.b[k] -= factor * t.b[i];
            }
            t.basis[i] = enter;
            ++t.pivots;
        }
    }

    // Phase 2: min -(c'(x+ - x-)); artificials blocked by pricing over ncols
    // only (any still-basic artificial sits at level 0 in a redundant row).
    Eigen::VectorXd f2 = Eigen::VectorXd::Zero(total);
    f2.head(n) = -prob.objective;
    f2.segment(n, n) = prob.objective;
    Eigen::VectorXd reduced;
    if (!run_simplex(t, f2, ncols, tiny, &reduced)) {
        res.status = LpStatus::Unbounded;
        res.pivots = t.pivots;
        return res;
    }

    Eigen::VectorXd v = Eigen::VectorXd::Zero(total);
    for (int i = 0; i < m; ++i) v[t.basis[i]] = t.b[i];
    res.x = v.head(n) - v.segment(n, n);
    res.value = prob.objective.dot(res.x);
    res.status = LpStatus::Optimal;
    res.pivots = t.pivots;

    // Duals from the slack/artificial reduced costs: for internal row i,
    // lambda_i = f2_art_i - r_art_i = -r over the artificial column; map back
    // through the row sign flip. We recompute via B' y = f_B for robustness.
    if (m > 0) {
        Eigen::MatrixXd bmat(m, m);
        Eigen::VectorXd fb(m);
        // Original (unreduced) columns.
        Eigen::MatrixXd orig = Eigen::MatrixXd::Zero(m, total);
        for (int i = 0; i < m; ++i) {
            Eigen::VectorXd row = (i < m1) ? Eigen::VectorXd(prob.a_le.row(i))
                                           : Eigen::VectorXd(prob.a_eq.row(i - m1));
            orig.block(i, 0, 1, n) = row_sign[i] * row.transpose();
            orig.block(i, n, 1, n) = -row_sign[i] * row.transpose();
            if (i < m1) orig(i, 2 * n + i) = row_sign[i];
            orig(i, ncols + i) = 1.0;
        }
        for (int i = 0; i < m; ++i) {
            bmat.col(i) = orig.col(t.basis[i]);
            fb[i] = f2[t.basis[i]];
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(bmat.transpose());
        if (!lu.isInvertible())
            throw SingularBasis("simplex: singular final basis (pivots=" + std::to_string(t.pivots) + ")");
        Eigen::VectorXd lambda = lu.solve(fb);
        res.dual_le.resize(m1);
        res.dual_eq.resize(m2);
        for (int i = 0; i < m; ++i) {
            double u = -row_sign[i] * lambda[i];
            if (i < m1) res.dual_le[i] = u; else res.dual_eq[i - m1] = u;
        }
    } else {
        res.dual_le.resize(0);
        res.dual_eq.resize(0);
    }
    return res;
}

double dual_residual(const LpProblem& prob, const LpResult& res) {
    if (res.status != LpStatus::Optimal) return std::numeric_limits<double>::infinity();
    Eigen::VectorXd grad = -prob.objective;
    if (prob.a_le.rows() > 0) grad += prob.a_le.transpose() * res.dual_le;
    if (prob.a_eq.rows() > 0) grad += prob.a_eq.transpose() * res.dual_eq;
    double r = grad.cwiseAbs().maxCoeff();
    for (int i = 0; i < prob.a_le.rows(); ++i) {
        double slack = prob.b_le[i] - prob.a_le.row(i).dot(res.x);
        r = std::max(r, std::abs(res.dual_le[i] * slack));
        r = std::max(r, -res.dual_le[i]);  // dual feasibility
    }
    return r;
}

} // namespace comax
