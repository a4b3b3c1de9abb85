#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <vector>

namespace comax {

// order[k] = index occupying rank k; the associated cone is
// { x : x_{order[0]} >= x_{order[1]} >= ... }.
struct Permutation {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }

    bool valid() const {
        std::vector<int> seen(order.size(), 0);
        for (int i : order) {
            if (i < 0 || i >= size() || seen[i]) return false;
            seen[i] = 1;
        }
        return true;
    }

    static Permutation identity(int n) {
        Permutation p;
        p.order.resize(n);
        std::iota(p.order.begin(), p.order.end(), 0);
        return p;
    }
};

inline bool in_cone(const Eigen::VectorXd& x, const Permutation& pi, double tol = 0.0) {
    for (int k = 0; k + 1 < pi.size(); ++k)
        if (x[pi.order[k]] < x[pi.order[k + 1]] - tol) return false;
    return true;
}

// Descending sort order of v with lower index first on ties.
inline Permutation sort_permutation(const Eigen::VectorXd& v) {
    Permutation p = Permutation::identity(static_cast<int>(v.size()));
    std::stable_sort(p.order.begin(), p.order.end(),
                     [&](int a, int b) { return v[a] > v[b]; });
    return p;
}

} // namespace comax
