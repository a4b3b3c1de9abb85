#include "comax/framework/value_cells.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "comax/arrangement/arrangement.hpp"
#include "comax/errors.hpp"

namespace comax {

std::vector<OrderedPartition> value_partitions(const Eigen::MatrixXd& a, bool absolute,
                                               int max_codim, const Tolerances& tol,
                                               const Budget& budget) {
    const int r = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (r < 1 || n < 1) throw InvalidInput("value_partitions: empty factor");

    std::vector<Hyperplane> planes;
    std::vector<std::pair<int, int>> diff_pair, sum_pair;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            diff_pair.push_back({i, j});
            planes.push_back({a.col(i) - a.col(j), 0.0});
        }
    const int sum_base = static_cast<int>(planes.size());
    if (absolute) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                sum_pair.push_back({i, j});
                planes.push_back({a.col(i) + a.col(j), 0.0});
            }
        for (int i = 0; i < n; ++i) planes.push_back({a.col(i), 0.0});
    }
    const int sign_base = static_cast<int>(planes.size()) - (absolute ? n : 0);

    // Zero normals denote permanently tied columns; enumerate_cells rejects
    // them, so lift them out and treat their signs as always-zero.
    std::vector<Hyperplane> live;
    std::vector<int> live_idx(planes.size(), -1);
    for (size_t k = 0; k < planes.size(); ++k) {
        if (planes[k].normal.norm() > tol.geom) {
            live_idx[k] = static_cast<int>(live.size());
            live.push_back(planes[k]);
        }
    }

    std::vector<CellWitness> cells;
    if (live.empty()) {
        CellWitness c;
        c.witness = Eigen::VectorXd::Unit(r, 0);
        c.dim = r;
        cells.push_back(c);
    } else {
        cells = enumerate_cells(live, r, max_codim, tol, budget);
    }

    std::vector<OrderedPartition> out;
    out.reserve(cells.size());
    for (const CellWitness& cell : cells) {
        // The origin cell means cost zero: every point solves the linear
        // counterpart, so it contributes no support beyond the other cells.
        if (!live.empty() && cell.witness.norm() <= tol.geom) continue;
        auto sign_at = [&](size_t k) -> int {
            return live_idx[k] < 0 ? 0 : cell.signs[live_idx[k]];
        };
        // Union-find over tied columns.
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (size_t k = 0; k < diff_pair.size(); ++k)
            if (sign_at(k) == 0) parent[find(diff_pair[k].first)] = find(diff_pair[k].second);
        if (absolute)
            for (size_t k = 0; k < sum_pair.size(); ++k)
                if (sign_at(sum_base + k) == 0)
                    parent[find(sum_pair[k].first)] = find(sum_pair[k].second);

        OrderedPartition op;
        op.witness = cell.witness;
        op.codim = r - cell.dim;
        op.column_sign.resize(n);
        Eigen::VectorXd vals = a.transpose() * cell.witness;
        for (int i = 0; i < n; ++i) {
            int s;
            if (absolute) {
                s = sign_at(sign_base + i);
            } else {
                s = vals[i] > tol.geom ? 1 : (vals[i] < -tol.geom ? -1 : 0);
            }
            op.column_sign[i] = static_cast<std::int8_t>(s);
        }

        std::vector<std::vector<int>> groups(n);
        for (int i = 0; i < n; ++i) groups[find(i)].push_back(i);
        std::vector<std::pair<double, std::vector<int>>> keyed;
        for (int g = 0; g < n; ++g) {
            if (groups[g].empty()) continue;
            double v = vals[groups[g][0]];
            keyed.push_back({absolute ? std::abs(v) : v, groups[g]});
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& x, const auto& y) { return x.first > y.first; });
        for (auto& [v, g] : keyed) op.groups.push_back(std::move(g));
        out.push_back(std::move(op));
    }
    return out;
}

} // namespace comax
