#include "comax/framework/solve.hpp"

#include <chrono>
#include <thread>

#include "comax/errors.hpp"
#include "comax/framework/generators.hpp"

namespace comax {

Eigen::MatrixXd row_compress(const Eigen::MatrixXd& a, double tol) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a.transpose());
    qr.setThreshold(tol);
    const int rank = static_cast<int>(qr.rank());
    if (rank == a.rows()) return a;
    if (rank == 0) return Eigen::MatrixXd::Zero(1, a.cols());
    // Orthonormal basis of the row space; b x ranges over the same value
    // vectors as a x does, up to the invertible change of cost basis.
    Eigen::MatrixXd basis = Eigen::MatrixXd(qr.householderQ()).leftCols(rank);
    return basis.transpose();
}

Eigen::VectorXd reduce_to_linear(const ProblemSpec& spec, const Eigen::VectorXd& x_hat) {
    if (!spec.subgradient)
        throw ObjectiveContractViolation("reduce_to_linear: no subgradient available");
    return spec.subgradient(spec.a * x_hat);
}

ProblemSpec quasiconvex_adapter(const ProblemSpec& spec) {
    if (!spec.quasi_convex)
        throw InvalidInput("quasiconvex_adapter: objective not flagged quasi-convex");
    if (!spec.image_compact)
        throw PreconditionUnmet("quasiconvex_adapter: compact image required");
    ProblemSpec out = spec;
    out.subgradient = nullptr;  // pipeline must not request subgradients
    return out;
}

SolveReport solve(const ProblemSpec& spec, int threads, const Tolerances& tol,
                  const Budget& budget) {
    if (!spec.fixed_support_oracle) throw InvalidInput("solve: missing fixed_support_oracle");
    auto t0 = std::chrono::steady_clock::now();

    GenerationResult gen = generate_supports(spec, tol, budget);
    const long nc = static_cast<long>(gen.candidates.size());
    std::vector<std::optional<Solution>> results(nc);

    auto worker = [&](long lo, long hi) {
        for (long k = lo; k < hi; ++k) results[k] = spec.fixed_support_oracle(gen.candidates[k]);
    };
    if (threads <= 1 || nc < 2) {
        worker(0, nc);
    } else {
        int t = std::min<long>(threads, nc);
        std::vector<std::thread> pool;
        long chunk = (nc + t - 1) / t;
        for (int i = 0; i < t; ++i)
            pool.emplace_back(worker, i * chunk, std::min(nc, (i + 1) * chunk));
        for (auto& th : pool) th.join();
    }

    SolveReport rep;
    rep.cell_count = gen.cell_count;
    rep.candidate_count = nc;
    rep.oracle_calls = nc;
    bool have = false;
    long best_k = -1;
    for (long k = 0; k < nc; ++k) {
        if (!results[k]) continue;
        const Solution& s = *results[k];
        bool take = false;
        if (!have) {
            take = true;
        } else if (s.value > rep.best.value) {
            take = true;
        } else if (s.value == rep.best.value) {
            // Lexicographically smallest support, then first differing x.
            if (gen.candidates[k].indices < gen.candidates[best_k].indices) {
                take = true;
            } else if (gen.candidates[k].indices == gen.candidates[best_k].indices) {
                for (int i = 0; i < s.x.size(); ++i) {
                    if (s.x[i] != rep.best.x[i]) {
                        take = s.x[i] < rep.best.x[i];
                        break;
                    }
                }
            }
        }
        if (take) {
            rep.best = s;
            rep.support = gen.candidates[k].indices;
            best_k = k;
            have = true;
        }
    }
    if (!have) throw NoAttainedOptimum("solve: no candidate subproblem attained its optimum");
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

} // namespace comax
