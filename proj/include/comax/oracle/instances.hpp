#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

namespace comax {

// splitmix64: portable across platforms and standard-library versions,
// unlike std::mt19937 distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    double uniform() {  // [0, 1)
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double gaussian();  // Box-Muller, pair-cached

    int uniform_int(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

// Values snapped to a 1e-12 grid so instance bytes reproduce exactly.
double snap_grid(double x);

enum class InstanceKind { Gaussian, Rademacher, AdversarialTies };

// r x n factor matrix, deterministic in (kind, seed).
Eigen::MatrixXd gen_factor(InstanceKind kind, int r, int n, std::uint64_t seed);

// Duplicated and negated small-integer columns so that tie hyperplanes pass
// exactly through rational witnesses. r = 1, n = 4 gives [1, 1, -1, 2].
Eigen::MatrixXd adversarial_tie_instance(int r, int n);

InstanceKind parse_instance_kind(const std::string& name);

} // namespace comax
