#include "comax/oracle/brute_force.hpp"

#include <algorithm>

#include "comax/errors.hpp"
#include "comax/numerics/sym_eig.hpp"

namespace comax {

Solution brute_force_solve(const ProblemSpec& spec, const Budget&) {
    const int n = static_cast<int>(spec.a.cols());
    if (n > 12) throw BudgetExceeded("brute_force_solve: n > 12");
    if (!spec.fixed_support_oracle)
        throw InvalidInput("brute_force_solve: fixed-support oracle required");
    const bool two_sided = std::holds_alternative<StandardRegime>(spec.regime);
    std::optional<Solution> best;
    std::vector<int> best_support;
    auto consider = [&](const SupportCandidate& cand) {
        auto sol = spec.fixed_support_oracle(cand);
        if (!sol) return;
        if (!best || sol->value > best->value ||
            (sol->value == best->value && cand.indices < best_support)) {
            best = sol;
            best_support = cand.indices;
        }
    };
    for (int mask = 0; mask < (1 << n); ++mask) {
        SupportCandidate cand;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) cand.indices.push_back(i);
        if (spec.sparsity_cap && static_cast<int>(cand.indices.size()) > *spec.sparsity_cap)
            continue;
        if (two_sided && !cand.indices.empty()) {
            const int k = static_cast<int>(cand.indices.size());
            for (int smask = 0; smask < (1 << k); ++smask) {
                SupportCandidate signed_cand = cand;
                signed_cand.signs.resize(k);
                for (int b = 0; b < k; ++b)
                    signed_cand.signs[b] = ((smask >> b) & 1) ? -1 : 1;
                consider(signed_cand);
            }
        } else {
            consider(cand);
        }
    }
    if (!best) throw NoAttainedOptimum("brute_force_solve: nothing attained");
    return *best;
}

DisjointResult disjoint_brute_force(const SpcaInstance& inst, const Budget&) {
    inst.validate();
    const int n = static_cast<int>(inst.a.cols());
    const int r = static_cast<int>(inst.a.rows());
    const int d = inst.d;
    if (n > 6) throw BudgetExceeded("disjoint_brute_force: n > 6");
    if (static_cast<int>(inst.s_vec.size()) != d)
        throw InvalidInput("disjoint_brute_force: one budget per component required");
    DisjointResult best;
    best.value = -1.0;
    long total = 1;
    for (int i = 0; i < n; ++i) total *= (d + 1);
    best.cell_count = total;
    std::vector<int> choice(n);
    for (long code = 0; code < total; ++code) {
        long c = code;
        std::vector<int> counts(d, 0);
        for (int i = 0; i < n; ++i) {
            choice[i] = static_cast<int>(c % (d + 1));
            c /= (d + 1);
            if (choice[i] < d) ++counts[choice[i]];
        }
        bool ok = true;
        for (int j = 0; j < d; ++j)
            if (counts[j] > inst.s_vec[j]) ok = false;
        if (!ok) continue;
        double value = 0.0;
        for (int j = 0; j < d; ++j) {
            Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
            for (int i = 0; i < n; ++i)
                if (choice[i] == j) m += inst.a.col(i) * inst.a.col(i).transpose();
            value += sym_eig(m).values[0];
        }
        if (value > best.value) {
            best.value = value;
            best.assignment.z = Eigen::MatrixXi::Zero(n, d + 1);
            for (int i = 0; i < n; ++i) best.assignment.z(i, choice[i]) = 1;
        }
    }
    return best;
}

} // namespace comax
