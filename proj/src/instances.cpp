#include "comax/oracle/instances.hpp"

#include <cmath>

#include "comax/errors.hpp"

namespace comax {

double Rng::gaussian() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform(), u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
}

double snap_grid(double x) {
    return std::round(x * 1e12) / 1e12;
}

Eigen::MatrixXd adversarial_tie_instance(int r, int n) {
    if (r < 1 || n < 1) throw InvalidInput("adversarial_tie_instance: bad shape");
    // Base integer columns b_0, b_1, ...; emit b_k, b_k, -b_k cycling.
    auto base = [&](int k) {
        Eigen::VectorXd v = Eigen::VectorXd::Zero(r);
        for (int i = 0; i < r; ++i) v[i] = ((k + i) % (r + 1)) + ((i == k % r) ? 1 : 0);
        if (r == 1) v[0] = k + 1;
        return v;
    };
    Eigen::MatrixXd a(r, n);
    for (int j = 0; j < n; ++j) {
        int k = j / 3;
        int phase = j % 3;
        Eigen::VectorXd col = base(k);
        if (phase == 2) col = -col;
        a.col(j) = col;
    }
    return a;
}

Eigen::MatrixXd gen_factor(InstanceKind kind, int r, int n, std::uint64_t seed) {
    if (r < 1 || n < 1) throw InvalidInput("gen_factor: bad shape");
    if (kind == InstanceKind::AdversarialTies) return adversarial_tie_instance(r, n);
    Rng rng(seed * 0x51ed2701u + 17u * static_cast<std::uint64_t>(r) + n);
    Eigen::MatrixXd a(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) {
            double v = (kind == InstanceKind::Gaussian)
                           ? rng.gaussian()
                           : (rng.next_u64() % 2 ? 1.0 : -1.0);
            a(i, j) = snap_grid(v);
        }
    return a;
}

InstanceKind parse_instance_kind(const std::string& name) {
    if (name == "gaussian") return InstanceKind::Gaussian;
    if (name == "rademacher") return InstanceKind::Rademacher;
    if (name == "adversarial-ties") return InstanceKind::AdversarialTies;
    throw InvalidInput("unknown instance kind: " + name);
}

} // namespace comax
