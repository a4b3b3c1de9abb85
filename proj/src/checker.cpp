#include "comax/comonotone/checker.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "comax/arrangement/arrangement.hpp"
#include "comax/errors.hpp"

namespace comax {

namespace {

struct PairPlanes {
    std::vector<Hyperplane> planes;
    // point-pair plane lookup: sign of v'(x_k - x_l) = orient * cell sign
    std::vector<std::vector<int>> pt_idx;     // k < l
    std::vector<std::vector<int>> tie_idx;    // i < j: plane v_i = v_j
};

PairPlanes build_planes(const FinitePointSet& set) {
    const int n = set.dim;
    const int p = static_cast<int>(set.points.size());
    PairPlanes pp;
    pp.pt_idx.assign(p, std::vector<int>(p, -1));
    pp.tie_idx.assign(n, std::vector<int>(n, -1));
    for (int k = 0; k < p; ++k)
        for (int l = k + 1; l < p; ++l) {
            pp.pt_idx[k][l] = static_cast<int>(pp.planes.size());
            pp.planes.push_back({set.points[k] - set.points[l], 0.0});
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
            d[i] = 1;
            d[j] = -1;
            pp.tie_idx[i][j] = static_cast<int>(pp.planes.size());
            pp.planes.push_back({d, 0.0});
        }
    return pp;
}

// Maximizer set of v'x read combinatorially from a cell's sign vector.
std::vector<int> cell_maximizers(const PairPlanes& pp, const std::vector<std::int8_t>& signs,
                                 int p) {
    std::vector<int> out;
    for (int k = 0; k < p; ++k) {
        bool maximal = true;
        for (int l = 0; l < p && maximal; ++l) {
            if (l == k) continue;
            int s = (k < l) ? signs[pp.pt_idx[k][l]] : -signs[pp.pt_idx[l][k]];
            if (s < 0) maximal = false;
        }
        if (maximal) out.push_back(k);
    }
    return out;
}

struct PairCheck {
    bool ok = true;
    int i = -1, j = -1;
    const char* reason = "";
};

PairCheck check_cell(const FinitePointSet& set, const PairPlanes& pp,
                     const std::vector<std::int8_t>& signs) {
    const int n = set.dim;
    std::vector<int> maxi = cell_maximizers(pp, signs, static_cast<int>(set.points.size()));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int s = signs[pp.tie_idx[i][j]];
            if (s != 0) {
                // transmission: some maximizer orders (i, j) like v does
                bool ok = false;
                for (int k : maxi)
                    if (s * (set.points[k][i] - set.points[k][j]) >= 0) { ok = true; break; }
                if (!ok) return {false, i, j, "pair transmission"};
            } else {
                bool up = false, down = false;
                for (int k : maxi) {
                    up = up || set.points[k][i] >= set.points[k][j];
                    down = down || set.points[k][i] <= set.points[k][j];
                }
                if (!up || !down) return {false, i, j, "tie condition"};
            }
        }
    }
    return {};
}

// Violation test at an explicit v (exact argmax); condition selectable.
PairCheck check_vector(const FinitePointSet& set, const Eigen::VectorXd& v, bool tie_pass) {
    const int n = set.dim;
    std::vector<int> maxi = argmax_linear_indices(set, v);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!tie_pass && v[i] != v[j]) {
                double s = v[i] > v[j] ? 1.0 : -1.0;
                bool ok = false;
                for (int k : maxi)
                    if (s * (set.points[k][i] - set.points[k][j]) >= 0) { ok = true; break; }
                if (!ok) return {false, i, j, "pair transmission"};
            } else if (tie_pass && v[i] == v[j]) {
                bool up = false, down = false;
                for (int k : maxi) {
                    up = up || set.points[k][i] >= set.points[k][j];
                    down = down || set.points[k][i] <= set.points[k][j];
                }
                if (!up || !down) return {false, i, j, "tie condition"};
            }
        }
    }
    return {};
}

} // namespace

ComonotoneVerdict check_standard_comonotone(const FinitePointSet& set, const Tolerances& tol) {
    const int n = set.dim;
    if (n > 5) throw BudgetExceeded("check_standard_comonotone: dimension > 5");
    if (set.points.size() > 64) throw BudgetExceeded("check_standard_comonotone: more than 64 points");

    PairPlanes pp = build_planes(set);
    std::vector<CellWitness> cells = enumerate_cells(pp.planes, n, -1, tol);

    ComonotoneVerdict verdict;
    verdict.yes = true;
    for (const CellWitness& c : cells) {
        PairCheck pc = check_cell(set, pp, c.signs);
        if (!pc.ok) {
            verdict.yes = false;
            verdict.witness_v = c.witness;
            verdict.i = pc.i;
            verdict.j = pc.j;
            verdict.reason = pc.reason;
            break;
        }
    }
    if (verdict.yes) return verdict;

    // Canonicalize the witness: smallest integer vector (max-norm, then
    // 1-norm, then lexicographic) violating pair transmission; failing that,
    // the tie condition; failing that, keep the float cell witness.
    for (bool tie_pass : {false, true}) {
        for (int b = 1; b <= 6; ++b) {
            std::vector<Eigen::VectorXd> box;
            std::vector<int> digits(n, -b);
            for (;;) {
                int maxabs = 0;
                for (int d : digits) maxabs = std::max(maxabs, std::abs(d));
                if (maxabs == b) {
                    Eigen::VectorXd v(n);
                    for (int i = 0; i < n; ++i) v[i] = digits[i];
                    box.push_back(v);
                }
                int k = n - 1;
                while (k >= 0 && digits[k] == b) digits[k--] = -b;
                if (k < 0) break;
                ++digits[k];
            }
            std::stable_sort(box.begin(), box.end(),
                             [](const Eigen::VectorXd& a, const Eigen::VectorXd& c) {
                                 double l1a = a.cwiseAbs().sum(), l1c = c.cwiseAbs().sum();
                                 if (l1a != l1c) return l1a < l1c;
                                 return std::lexicographical_compare(a.data(), a.data() + a.size(),
                                                                     c.data(), c.data() + c.size());
                             });
            for (const Eigen::VectorXd& v : box) {
                PairCheck pc = check_vector(set, v, tie_pass);
                if (!pc.ok) {
                    verdict.witness_v = v;
                    verdict.i = pc.i;
                    verdict.j = pc.j;
                    verdict.reason = pc.reason;
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

ComonotoneVerdict check_comonotone_2d(const FinitePointSet& set) {
    if (set.dim != 2) throw InvalidInput("check_comonotone_2d: dimension must be 2");
    ComonotoneVerdict verdict;
    verdict.yes = true;
    for (double s : {1.0, -1.0}) {
        Eigen::VectorXd v = Eigen::VectorXd::Constant(2, s);
        // Near-maximizers within a relative band count as tied so that
        // decimal inputs (whose exact binary values break intended ties)
        // behave like their decimal idealizations.
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& p : set.points) best = std::max(best, v.dot(p));
        const double band = 1e-9 * (1.0 + std::abs(best));
        bool c01 = false, c10 = false;  // Z(0,1): x0 >= x1; Z(1,0): x1 >= x0
        for (const auto& p : set.points) {
            if (v.dot(p) < best - band) continue;
            c01 = c01 || p[0] >= p[1];
            c10 = c10 || p[1] >= p[0];
        }
        if (!c01 || !c10) {
            verdict.yes = false;
            verdict.witness_v = v;
            verdict.i = 0;
            verdict.j = 1;
            verdict.reason = "ordering cone misses every maximizer";
            return verdict;
        }
    }
    return verdict;
}

bool check_surjective_psi_implies_standard(const FinitePointSet& set,
                                           const PermutationMapping& psi) {
    const int n = set.dim;
    if (n > 4) throw BudgetExceeded("check_surjective_psi_implies_standard: n > 4");
    Permutation pi = Permutation::identity(n);
    std::set<std::vector<int>> image;
    long total = 0;
    std::sort(pi.order.begin(), pi.order.end());
    do {
        Permutation out = psi.eval(pi);
        if (!out.valid()) throw InvalidInput("psi produced an invalid permutation");
        image.insert(out.order);
        ++total;
    } while (std::next_permutation(pi.order.begin(), pi.order.end()));
    bool surjective = static_cast<long>(image.size()) == total;
    if (!surjective) return true;  // implication holds vacuously
    return check_standard_comonotone(set).yes;
}

} // namespace comax
