#include "comax/numerics/sym_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "comax/errors.hpp"

namespace comax {

EigResult sym_eig(const Eigen::MatrixXd& m, const Tolerances& tol) {
    const int n = static_cast<int>(m.rows());
    if (n == 0 || m.cols() != n) throw InvalidInput("sym_eig: matrix must be square and nonempty");
    if (n > 64) throw InvalidInput("sym_eig: order exceeds 64");
    double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    if (asym > 1e-9 * scale) throw InvalidInput("sym_eig: matrix is not symmetric");

    Eigen::MatrixXd a = 0.5 * (m + m.transpose());
    Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

    const double target = tol.eig * scale;
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
        if (std::sqrt(2.0 * off) <= target) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) <= 1e-300) continue;
                Eigen::JacobiRotation<double> rot;
                rot.makeJacobi(a, p, q);
                a.applyOnTheLeft(p, q, rot.adjoint());
                a.applyOnTheRight(p, q, rot);
                v.applyOnTheRight(p, q, rot);
                a(p, q) = a(q, p) = 0.0;
            }
        }
    }

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int i, int j) { return a(i, i) > a(j, j); });

    EigResult r;
    r.values.resize(n);
    r.vectors.resize(n, n);
    for (int k = 0; k < n; ++k) {
        r.values[k] = a(idx[k], idx[k]);
        Eigen::VectorXd col = v.col(idx[k]);
        int imax = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(col[i]) > std::abs(col[imax])) imax = i;
        if (col[imax] < 0) col = -col;
        r.vectors.col(k) = col;
    }
    return r;
}

double ky_fan(const Eigen::MatrixXd& m, int d, const Tolerances& tol) {
    if (d < 1 || d > m.rows()) throw InvalidInput("ky_fan: d out of range");
    EigResult e = sym_eig(m, tol);
    return e.values.head(d).sum();
}

} // namespace comax
