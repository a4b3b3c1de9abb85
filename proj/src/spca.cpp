#include "comax/apps/spca.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <memory>
#include <sstream>

#include "comax/arrangement/arrangement.hpp"
#include "comax/errors.hpp"
#include "comax/framework/generators.hpp"
#include "comax/numerics/flow.hpp"
#include "comax/numerics/secular.hpp"
#include "comax/numerics/simplex.hpp"
#include "comax/numerics/sym_eig.hpp"

namespace comax {

namespace {

Eigen::MatrixXd restrict_sigma(const Eigen::MatrixXd& a, const std::vector<int>& support) {
    Eigen::MatrixXd as(a.rows(), support.size());
    for (size_t k = 0; k < support.size(); ++k) as.col(k) = a.col(support[k]);
    return as.transpose() * as;
}

Eigen::VectorXd embed(const Eigen::VectorXd& local, const std::vector<int>& support, int n) {
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    for (size_t k = 0; k < support.size(); ++k) x[support[k]] = local[k];
    return x;
}

void require_support(const SpcaInstance& inst, const std::vector<int>& support, int cap) {
    if (support.empty()) throw InvalidInput("fixed-support oracle: empty support");
    if (static_cast<int>(support.size()) > cap)
        throw InfeasibleSupport("fixed-support oracle: support larger than budget");
    for (int i : support)
        if (i < 0 || i >= inst.a.cols())
            throw InvalidInput("fixed-support oracle: index out of range");
}

} // namespace

void SpcaInstance::validate() const {
    const int n = static_cast<int>(a.cols());
    if (a.rows() < 1 || n < 1) throw InvalidInput("SpcaInstance: empty factor");
    if (s < 1 || s > n) throw InvalidInput("SpcaInstance: sparsity budget out of range");
    if (d < 1) throw InvalidInput("SpcaInstance: component count must be positive");
    for (int b : s_vec)
        if (b < 1) throw InvalidInput("SpcaInstance: component budgets must be positive");
    if (a_lin.size() != 0 && a_lin.size() != n)
        throw InvalidInput("SpcaInstance: linear term length mismatch");
}

SpcaInstance SpcaInstance::from_sigma(const Eigen::MatrixXd& sigma, double rank_tol) {
    if (sigma.rows() != sigma.cols()) throw InvalidInput("from_sigma: matrix not square");
    auto e = sym_eig(sigma);
    int rank = 0;
    const double cut = rank_tol * std::max(1.0, std::abs(e.values[0]));
    for (int i = 0; i < e.values.size(); ++i)
        if (e.values[i] > cut) ++rank;
    if (rank == 0) throw InvalidInput("from_sigma: matrix is numerically zero");
    SpcaInstance inst;
    inst.a.resize(rank, sigma.cols());
    for (int i = 0; i < rank; ++i)
        inst.a.row(i) = std::sqrt(e.values[i]) * e.vectors.col(i).transpose();
    return inst;
}

Eigen::MatrixXd lift_factor(const Eigen::MatrixXd& a) {
    const int r = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    const int rho = r * (r + 1) / 2;
    const double rt2 = std::sqrt(2.0);
    Eigen::MatrixXd lifted(rho, n);
    for (int i = 0; i < n; ++i) {
        int k = 0;
        for (int p = 0; p < r; ++p)
            for (int q = p; q < r; ++q)
                lifted(k++, i) = (p == q ? 1.0 : rt2) * a(p, i) * a(q, i);
    }
    return lifted;
}

Solution spca_single_oracle(const SpcaInstance& inst, const std::vector<int>& support,
                            const Tolerances& tol) {
    require_support(inst, support, inst.s);
    auto e = sym_eig(restrict_sigma(inst.a, support), tol);
    Eigen::VectorXd v = e.vectors.col(0);
    for (int i = 0; i < v.size(); ++i) {
        if (v[i] == 0.0) continue;
        if (v[i] < 0.0) v = -v;
        break;
    }
    return {embed(v, support, static_cast<int>(inst.a.cols())), e.values[0]};
}

NnOracleResult nn_spca_oracle(const SpcaInstance& inst, const std::vector<int>& support,
                              const Tolerances& tol) {
    require_support(inst, support, inst.s);
    const int n = static_cast<int>(inst.a.cols());
    const int k = static_cast<int>(support.size());
    NnOracleResult out;
    const int fb = *std::min_element(support.begin(), support.end());
    out.fallback.x = Eigen::VectorXd::Zero(n);
    out.fallback.x[fb] = 1.0;
    out.fallback.value = inst.a.col(fb).squaredNorm();
    if (k == 1) {
        out.attained = out.fallback;
        return out;
    }
    auto e = sym_eig(restrict_sigma(inst.a, support), tol);
    const double cut = tol.group_rel * std::max(1.0, std::abs(e.values[0]));
    int g0 = 0;
    while (g0 < k) {
        int g1 = g0 + 1;
        while (g1 < k && e.values[g0] - e.values[g1] <= cut) ++g1;
        const int m = g1 - g0;
        Eigen::MatrixXd basis = e.vectors.middleCols(g0, m);
        // Widest box inside the eigenspace slice of the simplex: maximize the
        // smallest coordinate of x = basis z subject to sum(x) = 1.
        LpProblem lp;
        lp.objective = Eigen::VectorXd::Zero(m + 1);
        lp.objective[m] = 1.0;
        for (int i = 0; i < k; ++i) {
            Eigen::VectorXd row(m + 1);
            row.head(m) = -basis.row(i).transpose();
            row[m] = 1.0;
            lp.add_le(row, 0.0);  // t - x_i <= 0
        }
        Eigen::VectorXd ones(m + 1);
        ones.head(m) = basis.colwise().sum().transpose();
        ones[m] = 0.0;
        lp.add_eq(ones, 1.0);
        auto res = solve_lp(lp, tol);
        if (res.status == LpStatus::Optimal && res.value > 1e-9) {
            Eigen::VectorXd x = basis * res.x.head(m);
            x /= x.norm();
            if (x.minCoeff() < 0) x = -x;
            out.attained = Solution{embed(x, support, n), e.values[g0]};
            return out;
        }
        g0 = g1;
    }
    return out;
}

Solution tst_oracle(const SpcaInstance& inst, const std::vector<int>& support,
                    const Tolerances& tol) {
    require_support(inst, support, inst.s);
    const int n = static_cast<int>(inst.a.cols());
    const int k = static_cast<int>(support.size());
    Eigen::MatrixXd sig = restrict_sigma(inst.a, support);
    Eigen::VectorXd lin = Eigen::VectorXd::Zero(k);
    if (inst.a_lin.size() == n)
        for (int i = 0; i < k; ++i) lin[i] = inst.a_lin[support[i]];
    auto e = sym_eig(sig, tol);
    Eigen::VectorXd b = e.vectors.transpose() * lin;
    Eigen::VectorXd y(k);
    double mu;
    try {
        mu = secular_root(e.values, b, tol);
        for (int i = 0; i < k; ++i) y[i] = (b[i] / 2.0) / (mu - e.values[i]);
    } catch (const HardCase&) {
        // Multiplier pinned at the top eigenvalue; the residual norm budget
        // goes into the top eigenspace.
        mu = e.values[0];
        const double cut = tol.group_rel * std::max(1.0, std::abs(e.values[0]));
        double rest = 0.0;
        for (int i = 0; i < k; ++i) {
            if (e.values[0] - e.values[i] <= cut) {
                y[i] = 0.0;
            } else {
                y[i] = (b[i] / 2.0) / (mu - e.values[i]);
                rest += y[i] * y[i];
            }
        }
        y[0] = std::sqrt(std::max(0.0, 1.0 - rest));
    }
    y /= y.norm();
    Eigen::VectorXd x = e.vectors * y;
    double value = x.dot(sig * x) + lin.dot(x);
    return {embed(x, support, n), value};
}

namespace {

SolveReport run_solve(ProblemSpec spec, int threads, const Tolerances& tol,
                      const Budget& budget) {
    return solve(spec, threads, tol, budget);
}

} // namespace

SolveReport spca_single_solve(const SpcaInstance& inst, int threads, const Tolerances& tol,
                              const Budget& budget) {
    inst.validate();
    ProblemSpec spec;
    spec.a = row_compress(inst.a);
    spec.regime = SignInvRegime{};
    spec.sparsity_cap = inst.s;
    spec.fixed_support_oracle = [&inst, tol](const SupportCandidate& c)
        -> std::optional<Solution> {
        if (c.indices.empty()) return std::nullopt;
        return spca_single_oracle(inst, c.indices, tol);
    };
    return run_solve(std::move(spec), threads, tol, budget);
}

SolveReport nn_spca_solve(const SpcaInstance& inst, int threads, const Tolerances& tol,
                          const Budget& budget) {
    inst.validate();
    ProblemSpec spec;
    spec.a = row_compress(inst.a);
    spec.regime = NonnegRegime{};
    spec.sparsity_cap = inst.s;
    auto used_fallback = std::make_shared<std::atomic<bool>>(false);
    spec.fixed_support_oracle = [&inst, tol, used_fallback](const SupportCandidate& c)
        -> std::optional<Solution> {
        if (c.indices.empty()) return std::nullopt;
        auto res = nn_spca_oracle(inst, c.indices, tol);
        if (res.attained) return res.attained;
        used_fallback->store(true);
        return res.fallback;
    };
    SolveReport rep = run_solve(std::move(spec), threads, tol, budget);
    rep.fallback_used = used_fallback->load();
    return rep;
}

SolveReport tst_solve(const SpcaInstance& inst, int threads, const Tolerances& tol,
                      const Budget& budget) {
    inst.validate();
    const int n = static_cast<int>(inst.a.cols());
    Eigen::MatrixXd stacked(inst.a.rows() + 1, n);
    stacked.topRows(inst.a.rows()) = inst.a;
    if (inst.a_lin.size() == n)
        stacked.bottomRows(1) = inst.a_lin.transpose();
    else
        stacked.bottomRows(1).setZero();
    ProblemSpec spec;
    spec.a = row_compress(stacked);
    spec.regime = StandardRegime{};
    spec.sparsity_cap = inst.s;
    spec.fixed_support_oracle = [&inst, tol](const SupportCandidate& c)
        -> std::optional<Solution> {
        if (c.indices.empty()) return std::nullopt;
        return tst_oracle(inst, c.indices, tol);
    };
    return run_solve(std::move(spec), threads, tol, budget);
}

SolveReport spca_multi_solve(const SpcaInstance& inst, int threads, const Tolerances& tol,
                             const Budget& budget) {
    inst.validate();
    if (inst.d > inst.a.rows())
        throw InvalidInput("spca_multi_solve: component count above factor rank");
    const int n = static_cast<int>(inst.a.cols());
    ProblemSpec spec;
    spec.a = row_compress(lift_factor(inst.a));
    spec.regime = NonnegRegime{};
    spec.sparsity_cap = inst.s;
    spec.fixed_support_oracle = [&inst, tol, n](const SupportCandidate& c)
        -> std::optional<Solution> {
        Eigen::MatrixXd m = Eigen::MatrixXd::Zero(inst.a.rows(), inst.a.rows());
        Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
        for (int i : c.indices) {
            m += inst.a.col(i) * inst.a.col(i).transpose();
            x[i] = 1.0;
        }
        return Solution{x, c.indices.empty() ? 0.0 : ky_fan(m, inst.d, tol)};
    };
    return run_solve(std::move(spec), threads, tol, budget);
}

DisjointResult disjoint_spca_solve(const SpcaInstance& inst, const Tolerances& tol,
                                   const Budget& budget) {
    inst.validate();
    const int r = static_cast<int>(inst.a.rows());
    const int n = static_cast<int>(inst.a.cols());
    const int d = inst.d;
    if (static_cast<int>(inst.s_vec.size()) != d)
        throw InvalidInput("disjoint_spca_solve: one budget per component required");
    if (r > 2 || d > 2 || n > 6) {
        double est = std::pow(static_cast<double>(n) * (d + 1) * (d + 1),
                              d * (r * r + r + 2) / 2.0 - 1.0);
        std::ostringstream os;
        os << "disjoint_spca_solve: instance over budget (about " << est
           << " parameter cells); limits are r <= 2, d <= 2, n <= 6";
        throw BudgetExceeded(os.str());
    }

    const Eigen::MatrixXd lifted = lift_factor(inst.a);
    const int rho = static_cast<int>(lifted.rows());
    const int dim = d * rho + d;  // (c_1..c_d, gamma_1..gamma_d)

    // Column value v_ij = lifted_i . c_j - gamma_j for j < d, and 0 for the
    // null column d; gamma_j >= 0 is the cap penalty, active (positive) only
    // when column j is filled to its budget.
    auto value_coef = [&](int i, int j) {
        Eigen::VectorXd coef = Eigen::VectorXd::Zero(dim);
        if (j < d) {
            coef.segment(j * rho, rho) = lifted.col(i);
            coef[d * rho + j] = -1.0;
        }
        return coef;
    };
    std::vector<Hyperplane> planes;
    std::vector<std::array<int, 3>> pair_of;  // (row, col j, col l)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= d; ++j)
            for (int l = j + 1; l <= d; ++l) {
                pair_of.push_back({i, j, l});
                planes.push_back({value_coef(i, j) - value_coef(i, l), 0.0});
            }
    const int gamma_base = static_cast<int>(planes.size());
    for (int j = 0; j < d; ++j)
        planes.push_back({Eigen::VectorXd::Unit(dim, d * rho + j), 0.0});

    auto cells = enumerate_cells(planes, dim, -1, tol, budget);

    DisjointResult best;
    best.cell_count = static_cast<long>(cells.size());
    best.value = -1.0;
    std::vector<std::vector<int>> pair_idx(n, std::vector<int>((d + 1) * (d + 1), -1));
    for (size_t k = 0; k < pair_of.size(); ++k)
        pair_idx[pair_of[k][0]][pair_of[k][1] * (d + 1) + pair_of[k][2]] =
            static_cast<int>(k);

    for (const CellWitness& cell : cells) {
        bool ok = true;
        std::vector<bool> fill(d, false);
        for (int j = 0; j < d && ok; ++j) {
            int s = cell.signs[gamma_base + j];
            if (s < 0) ok = false;
            fill[j] = s > 0;
        }
        if (!ok) continue;
        // Allowed columns per row: those not beaten in the pairwise order.
        std::vector<std::vector<int>> allowed(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= d; ++j) {
                bool top = true;
                for (int l = 0; l <= d && top; ++l) {
                    if (l == j) continue;
                    int s = l > j ? cell.signs[pair_idx[i][j * (d + 1) + l]]
                                  : -cell.signs[pair_idx[i][l * (d + 1) + j]];
                    if (s < 0) top = false;
                }
                if (top) allowed[i].push_back(j);
            }
        }
        // One representative assignment via flow: rows supply 1, component
        // columns capped (exactly filled when the multiplier is active), the
        // null column absorbs the rest.
        FlowNetwork net;
        net.num_nodes = n + d + 2;  // rows, columns, sink
        net.supply.assign(net.num_nodes, 0);
        const int sink = n + d + 1;
        for (int i = 0; i < n; ++i) net.supply[i] = 1;
        net.supply[sink] = -n;
        for (int i = 0; i < n; ++i)
            for (int j : allowed[i]) net.arcs.push_back({i, n + j, 1, false});
        for (int j = 0; j < d; ++j)
            net.arcs.push_back({n + j, sink, inst.s_vec[j], fill[j]});
        net.arcs.push_back({n + d, sink, n, false});
        auto flow = max_flow_exact_fill(net);
        if (!flow) continue;
        DisjointAssignment za;
        za.z = Eigen::MatrixXi::Zero(n, d + 1);
        for (size_t k = 0; k < net.arcs.size(); ++k) {
            const FlowArc& arc = net.arcs[k];
            if (arc.from < n && flow->arc_flow[k] > 0) za.z(arc.from, arc.to - n) = 1;
        }
        double value = 0.0;
        for (int j = 0; j < d; ++j) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
            for (int i = 0; i < n; ++i)
                if (za.z(i, j)) m += inst.a.col(i) * inst.a.col(i).transpose();
            value += sym_eig(m, tol).values[0];
        }
        if (value > best.value) {
            best.value = value;
            best.assignment = za;
        }
    }
    if (best.value < 0) throw NoAttainedOptimum("disjoint_spca_solve: no feasible cell");
    return best;
}

} // namespace comax
