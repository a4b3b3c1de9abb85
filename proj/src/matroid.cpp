#include "comax/comonotone/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "comax/errors.hpp"
#include "comax/oracle/instances.hpp"

namespace comax {

MatroidOracle MatroidOracle::uniform(int s, int n, MatroidKind kind) {
    MatroidOracle m;
    m.n = n;
    m.kind = kind;
    m.independent = [s](const std::vector<int>& sub) {
        return static_cast<int>(sub.size()) <= s;
    };
    return m;
}

MatroidOracle MatroidOracle::partition(std::vector<int> blocks, std::vector<int> caps,
                                       MatroidKind kind) {
    MatroidOracle m;
    m.n = static_cast<int>(blocks.size());
    m.kind = kind;
    m.independent = [blocks = std::move(blocks), caps = std::move(caps)](const std::vector<int>& sub) {
        std::vector<int> count(caps.size(), 0);
        for (int i : sub)
            if (++count[blocks[i]] > caps[blocks[i]]) return false;
        return true;
    };
    return m;
}

MatroidOracle MatroidOracle::graphic(int num_vertices, std::vector<std::pair<int, int>> edges,
                                     MatroidKind kind) {
    MatroidOracle m;
    m.n = static_cast<int>(edges.size());
    m.kind = kind;
    m.independent = [num_vertices, edges = std::move(edges)](const std::vector<int>& sub) {
        std::vector<int> parent(num_vertices);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (int e : sub) {
            int a = find(edges[e].first), b = find(edges[e].second);
            if (a == b) return false;  // cycle
            parent[a] = b;
        }
        return true;
    };
    return m;
}

namespace {

std::vector<int> random_subset(Rng& rng, int n) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (rng.next_u64() % 2) s.push_back(i);
    return s;
}

std::vector<int> random_independent(const MatroidOracle& m, Rng& rng) {
    std::vector<int> perm(m.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = m.n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    std::vector<int> s;
    int target = rng.uniform_int(0, m.n);
    for (int i : perm) {
        if (static_cast<int>(s.size()) >= target) break;
        std::vector<int> cand = s;
        cand.insert(std::lower_bound(cand.begin(), cand.end(), i), i);
        if (m.independent(cand)) s = cand;
    }
    return s;
}

} // namespace

void validate_matroid(const MatroidOracle& m, std::uint64_t seed, int samples) {
    if (!m.independent({})) throw MatroidAxiomViolation("empty set must be independent");
    Rng rng(seed);
    for (int t = 0; t < samples; ++t) {
        // Hereditary: walk a random chain downward from a random subset.
        std::vector<int> s = random_subset(rng, m.n);
        if (m.independent(s)) {
            std::vector<int> chain = s;
            while (!chain.empty()) {
                chain.erase(chain.begin() + rng.uniform_int(0, static_cast<int>(chain.size()) - 1));
                if (!m.independent(chain))
                    throw MatroidAxiomViolation("hereditary axiom failed");
            }
        }
        // Exchange: two random independent sets of different size.
        std::vector<int> a = random_independent(m, rng);
        std::vector<int> b = random_independent(m, rng);
        if (a.size() > b.size()) std::swap(a, b);
        if (a.size() < b.size()) {
            bool found = false;
            for (int x : b) {
                if (std::binary_search(a.begin(), a.end(), x)) continue;
                std::vector<int> cand = a;
                cand.insert(std::lower_bound(cand.begin(), cand.end(), x), x);
                if (m.independent(cand)) { found = true; break; }
            }
            if (!found) throw MatroidAxiomViolation("exchange axiom failed");
        }
    }
}

PermutationMapping matroid_psi(const MatroidOracle& m) {
    PermutationMapping psi;
    psi.eval = [m](const Permutation& pi) {
        if (pi.size() != m.n || !pi.valid())
            throw InvalidInput("matroid_psi: invalid permutation");
        std::vector<int> selected_set;
        std::vector<char> picked(m.n, 0);
        for (int k = 0; k < m.n; ++k) {
            int i = pi.order[k];
            std::vector<int> cand = selected_set;
            cand.insert(std::lower_bound(cand.begin(), cand.end(), i), i);
            if (m.independent(cand)) {
                selected_set = std::move(cand);
                picked[i] = 1;
            }
        }
        Permutation sigma;
        for (int k = 0; k < m.n; ++k)
            if (picked[pi.order[k]]) sigma.order.push_back(pi.order[k]);
        for (int k = 0; k < m.n; ++k)
            if (!picked[pi.order[k]]) sigma.order.push_back(pi.order[k]);
        return sigma;
    };
    return psi;
}

std::pair<std::vector<int>, double> matroid_argmax(const MatroidOracle& m,
                                                   const Eigen::VectorXd& v) {
    if (static_cast<int>(v.size()) != m.n) throw InvalidInput("matroid_argmax: size mismatch");
    Permutation pi = sort_permutation(v);
    std::vector<int> sel;
    double value = 0.0;
    for (int k = 0; k < m.n; ++k) {
        int i = pi.order[k];
        if (m.kind == MatroidKind::IndependentSets && v[i] <= 0) break;
        std::vector<int> cand = sel;
        cand.insert(std::lower_bound(cand.begin(), cand.end(), i), i);
        if (m.independent(cand)) {
            sel = std::move(cand);
            value += v[i];
        }
    }
    return {sel, value};
}

} // namespace comax
