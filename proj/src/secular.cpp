#include "comax/numerics/secular.hpp"

#include <cmath>

#include "comax/errors.hpp"

namespace comax {

namespace {

double phi(const Eigen::VectorXd& lam, const Eigen::VectorXd& b, double mu) {
    double s = 0.0;
    for (int i = 0; i < lam.size(); ++i) {
        double d = mu - lam[i];
        double h = b[i] / 2.0;
        s += (h * h) / (d * d);
    }
    return s;
}

double dphi(const Eigen::VectorXd& lam, const Eigen::VectorXd& b, double mu) {
    double s = 0.0;
    for (int i = 0; i < lam.size(); ++i) {
        double d = mu - lam[i];
        double h = b[i] / 2.0;
        s += -2.0 * (h * h) / (d * d * d);
    }
    return s;
}

} // namespace

double secular_root(const Eigen::VectorXd& lam, const Eigen::VectorXd& b,
                    const Tolerances& tol) {
    const int n = static_cast<int>(lam.size());
    if (n == 0 || b.size() != n) throw InvalidInput("secular_root: size mismatch");
    for (int i = 0; i + 1 < n; ++i)
        if (lam[i] < lam[i + 1]) throw InvalidInput("secular_root: eigenvalues must be descending");

    const double top = lam[0];
    const double group_cut = top - tol.group_rel * std::max(1.0, std::abs(top));
    double top_mass = 0.0, rest_limit = 0.0;
    for (int i = 0; i < n; ++i) {
        double h = b[i] / 2.0;
        if (lam[i] >= group_cut) {
            top_mass += h * h;
        } else {
            double d = top - lam[i];
            rest_limit += (h * h) / (d * d);
        }
    }
    if (top_mass == 0.0 && rest_limit <= 1.0)
        throw HardCase("secular_root: no root above the top eigenvalue");

    double lo = top;
    double hi = top + b.norm() / 2.0 + 1.0;
    while (phi(lam, b, hi) >= 1.0) hi = top + 2.0 * (hi - top);

    // phi is strictly decreasing on (top, inf); Newton with bisection guard.
    double mu = 0.5 * (lo + hi);
    for (int it = 0; it < 200; ++it) {
        double f = phi(lam, b, mu) - 1.0;
        if (std::abs(f) <= tol.secular) return mu;
        if (f > 0) lo = mu; else hi = mu;
        double step = f / dphi(lam, b, mu);
        double next = mu - step;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        mu = next;
    }
    return mu;
}

} // namespace comax
