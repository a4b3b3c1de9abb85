#include "comax/framework/affine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "comax/arrangement/arrangement.hpp"
#include "comax/errors.hpp"

namespace comax {

std::vector<Solution> affine_restricted_candidates(const ProblemSpec& spec,
                                                   const Eigen::MatrixXd& m,
                                                   const Eigen::VectorXd& b,
                                                   const RepresentativeOracle& oracle,
                                                   const Tolerances& tol, const Budget& budget) {
    const int r = static_cast<int>(spec.a.rows());
    const int n = static_cast<int>(spec.a.cols());
    const int nrows = static_cast<int>(m.rows());
    if (nrows > 0 && m.cols() != n) throw InvalidInput("affine_restricted_candidates: shape mismatch");

    // Reduced value columns u_i = (a_i, -M e_i) over (c, gamma).
    const int q = r + nrows;
    Eigen::MatrixXd u(q, n);
    for (int i = 0; i < n; ++i) {
        u.block(0, i, r, 1) = spec.a.col(i);
        if (nrows > 0) u.block(r, i, nrows, 1) = -m.col(i);
    }

    std::vector<Hyperplane> planes;
    std::vector<std::pair<int, int>> pair_of;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_of.push_back({i, j});
            planes.push_back({u.col(i) - u.col(j), 0.0});
        }
    const int gamma_base = static_cast<int>(planes.size());
    for (int j = 0; j < nrows; ++j)
        planes.push_back({Eigen::VectorXd::Unit(q, r + j), 0.0});

    std::vector<Hyperplane> live;
    std::vector<int> live_idx(planes.size(), -1);
    for (size_t k = 0; k < planes.size(); ++k)
        if (planes[k].normal.norm() > tol.geom) {
            live_idx[k] = static_cast<int>(live.size());
            live.push_back(planes[k]);
        }
    std::vector<CellWitness> cells;
    if (live.empty()) {
        CellWitness c;
        c.witness = Eigen::VectorXd::Unit(std::max(q, 1), 0);
        c.dim = q;
        cells.push_back(c);
    } else {
        cells = enumerate_cells(live, q, -1, tol, budget);
    }

    std::vector<Solution> out;
    std::set<std::vector<double>> seen;
    for (const CellWitness& cell : cells) {
        auto sign_at = [&](int k) -> int { return live_idx[k] < 0 ? 0 : cell.signs[live_idx[k]]; };
        // gamma >= 0 only.
        bool ok = true;
        std::vector<int> equality_rows;
        for (int j = 0; j < nrows && ok; ++j) {
            int s = sign_at(gamma_base + j);
            if (s < 0) ok = false;
            if (s > 0) equality_rows.push_back(j);
        }
        if (!ok) continue;

        // Group tied values, order groups descending at the witness.
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t k = 0; k < pair_of.size(); ++k)
            if (sign_at(static_cast<int>(k)) == 0)
                parent[find(pair_of[k].first)] = find(pair_of[k].second);
        Eigen::VectorXd vals = u.transpose() * cell.witness;
        std::vector<std::vector<int>> groups(n);
        for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
        std::vector<std::pair<double, std::vector<int>>> keyed;
        for (int g = 0; g < n; ++g)
            if (!groups[g].empty()) keyed.push_back({vals[groups[g][0]], groups[g]});
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& x, const auto& y) { return x.first > y.first; });

        const int ng = static_cast<int>(keyed.size());
        for (int p = 0; p <= 2 * ng; ++p) {  // lambda placements as usual
            AffinePattern pat;
            pat.equality_rows = equality_rows;
            for (int g = 0; g < p / 2; ++g)
                for (int i : keyed[g].second) pat.ones.push_back(i);
            if (p % 2 == 1) pat.ties = keyed[p / 2].second;
            int zfirst = (p % 2 == 1) ? p / 2 + 1 : p / 2;
            for (int g = zfirst; g < ng; ++g)
                for (int i : keyed[g].second) pat.zeros.push_back(i);
            std::sort(pat.ones.begin(), pat.ones.end());
            std::sort(pat.ties.begin(), pat.ties.end());
            std::sort(pat.zeros.begin(), pat.zeros.end());

            auto res = oracle(pat);
            if (!res) continue;
            const auto& [mn, mx] = *res;
            if (mn.x.sum() > mx.x.sum() + tol.primal)
                throw OracleContractViolation("affine_restricted_candidates: min above max");
            for (const Solution* s : {&mn, &mx}) {
                std::vector<double> key(s->x.data(), s->x.data() + s->x.size());
                if (seen.insert(key).second) out.push_back(*s);
            }
        }
    }
    return out;
}

} // namespace comax
