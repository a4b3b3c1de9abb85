#include "comax/framework/generators.hpp"

#include <algorithm>
#include <map>

#include "comax/arrangement/arrangement.hpp"
#include "comax/framework/value_cells.hpp"
#include "comax/errors.hpp"

namespace comax {

namespace {

// Deduplicates by (support, sign pattern), keeping first provenance;
// map iteration order doubles as the deterministic output order.
struct CandidateSink {
    std::map<std::pair<std::vector<int>, std::vector<std::int8_t>>, SupportCandidate> seen;
    std::optional<int> cap;

    void add(std::vector<int> idx, std::vector<std::int8_t> signs, long cell, int t1, int t2) {
        if (cap && static_cast<int>(idx.size()) > *cap) return;
        std::vector<size_t> perm(idx.size());
        for (size_t k = 0; k < perm.size(); ++k) perm[k] = k;
        std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return idx[a] < idx[b]; });
        std::vector<int> si(idx.size());
        std::vector<std::int8_t> ss(signs.empty() ? 0 : idx.size());
        for (size_t k = 0; k < perm.size(); ++k) {
            si[k] = idx[perm[k]];
            if (!signs.empty()) ss[k] = signs[perm[k]];
        }
        auto key = std::make_pair(si, ss);
        if (seen.count(key)) return;
        SupportCandidate c;
        c.indices = std::move(si);
        c.signs = std::move(ss);
        c.cell_id = cell;
        c.t1 = t1;
        c.t2 = t2;
        seen.emplace(std::move(key), std::move(c));
    }

    GenerationResult finish(long cells) {
        GenerationResult g;
        g.cell_count = cells;
        for (auto& [k, c] : seen) g.candidates.push_back(std::move(c));
        return g;
    }
};

// Threshold-placement positions over K descending value groups:
// even p = 2k is the open gap below group k-1 / above group k,
// odd p = 2k+1 is pinned at group k. Helpers count strict sides.
struct Slots {
    std::vector<long> cum;  // cum[g] = total size of groups 0..g-1
    int num_groups;
    explicit Slots(const std::vector<std::vector<int>>& groups) {
        num_groups = static_cast<int>(groups.size());
        cum.assign(num_groups + 1, 0);
        for (int g = 0; g < num_groups; ++g)
            cum[g + 1] = cum[g] + static_cast<long>(groups[g].size());
    }
    long above(int p) const { return cum[p / 2]; }
    long below(int p) const {
        return (p % 2 == 1) ? cum[num_groups] - cum[p / 2 + 1] : cum[num_groups] - cum[p / 2];
    }
    int max_pos() const { return 2 * num_groups; }
};

void collect_above(const OrderedPartition& part, int p, std::vector<int>& idx,
                   std::vector<std::int8_t>& signs, std::int8_t s) {
    for (int g = 0; g < p / 2; ++g)
        for (int i : part.groups[g]) {
            idx.push_back(i);
            signs.push_back(s);
        }
}

void collect_below(const OrderedPartition& part, int p, std::vector<int>& idx,
                   std::vector<std::int8_t>& signs, std::int8_t s) {
    int first = (p % 2 == 1) ? p / 2 + 1 : p / 2;
    for (int g = first; g < static_cast<int>(part.groups.size()); ++g)
        for (int i : part.groups[g]) {
            idx.push_back(i);
            signs.push_back(s);
        }
}

} // namespace

GenerationResult generate_supports_general(const ProblemSpec& spec, const Tolerances& tol,
                                           const Budget& budget) {
    const auto* regime = std::get_if<GeneralRegime>(&spec.regime);
    if (!regime) throw InvalidInput("generate_supports_general: wrong regime");
    const int n = static_cast<int>(spec.a.cols());
    auto parts = value_partitions(spec.a, false, 1, tol, budget);
    CandidateSink sink;
    sink.cap = spec.sparsity_cap;
    long cell_id = 0;
    for (const OrderedPartition& part : parts) {
        Permutation pi;
        for (const auto& g : part.groups)
            for (int i : g) pi.order.push_back(i);  // ties: lower index first
        Permutation sigma = regime->psi.eval(pi);
        if (!sigma.valid() || sigma.size() != n)
            throw InvalidInput("generate_supports_general: psi returned invalid permutation");
        // Zero block occupies positions [t1, t2) of sigma.
        for (int t1 = 0; t1 <= n; ++t1)
            for (int t2 = t1; t2 <= n; ++t2) {
                std::vector<int> idx;
                for (int k = 0; k < t1; ++k) idx.push_back(sigma.order[k]);
                for (int k = t2; k < n; ++k) idx.push_back(sigma.order[k]);
                sink.add(std::move(idx), {}, cell_id, t1, t2);
            }
        ++cell_id;
    }
    return sink.finish(static_cast<long>(parts.size()));
}

GenerationResult generate_supports_standard(const ProblemSpec& spec, const Tolerances& tol,
                                            const Budget& budget) {
    if (!std::holds_alternative<StandardRegime>(spec.regime))
        throw InvalidInput("generate_supports_standard: wrong regime");
    auto parts = value_partitions(spec.a, false, -1, tol, budget);
    CandidateSink sink;
    sink.cap = spec.sparsity_cap;
    long cell_id = 0;
    for (const OrderedPartition& part : parts) {
        Slots slots(part.groups);
        for (int pu = 0; pu <= slots.max_pos(); ++pu) {        // upper threshold
            for (int pl = pu; pl <= slots.max_pos(); ++pl) {   // lower threshold
                long base = slots.above(pu) + slots.below(pl);
                if (sink.cap && base > *sink.cap) continue;
                std::vector<int> idx;
                std::vector<std::int8_t> signs;
                collect_above(part, pu, idx, signs, 1);
                collect_below(part, pl, idx, signs, -1);
                if (pu == pl && pu % 2 == 1) {
                    // Merged thresholds pinned at one group: descending-by-
                    // index block, contiguous zero run swept over it.
                    const std::vector<int>& g = part.groups[pu / 2];
                    const int gs = static_cast<int>(g.size());
                    for (int t1 = 0; t1 <= gs; ++t1) {
                        for (int t2 = t1; t2 <= gs; ++t2) {
                            std::vector<int> idx2 = idx;
                            std::vector<std::int8_t> signs2 = signs;
                            for (int k = 0; k < t1; ++k) {
                                idx2.push_back(g[k]);
                                signs2.push_back(1);
                            }
                            for (int k = t2; k < gs; ++k) {
                                idx2.push_back(g[k]);
                                signs2.push_back(-1);
                            }
                            sink.add(std::move(idx2), std::move(signs2), cell_id, t1, t2);
                        }
                    }
                } else {
                    const std::vector<int>* tie_up =
                        (pu % 2 == 1) ? &part.groups[pu / 2] : nullptr;
                    const std::vector<int>* tie_lo =
                        (pl % 2 == 1 && pl != pu) ? &part.groups[pl / 2] : nullptr;
                    const int su = tie_up ? static_cast<int>(tie_up->size()) : 0;
                    const int sl = tie_lo ? static_cast<int>(tie_lo->size()) : 0;
                    for (int t1 = 0; t1 <= su; ++t1) {
                        for (int t2 = 0; t2 <= sl; ++t2) {
                            std::vector<int> idx2 = idx;
                            std::vector<std::int8_t> signs2 = signs;
                            for (int k = 0; k < t1; ++k) {  // nonneg prefix
                                idx2.push_back((*tie_up)[k]);
                                signs2.push_back(1);
                            }
                            for (int k = sl - t2; k < sl; ++k) {  // nonpos suffix
                                idx2.push_back((*tie_lo)[k]);
                                signs2.push_back(-1);
                            }
                            sink.add(std::move(idx2), std::move(signs2), cell_id, t1, t2);
                        }
                    }
                }
            }
        }
        ++cell_id;
    }
    return sink.finish(static_cast<long>(parts.size()));
}

namespace {

GenerationResult threshold_sweep(const ProblemSpec& spec, bool absolute,
                                 const Tolerances& tol, const Budget& budget) {
    auto parts = value_partitions(spec.a, absolute, -1, tol, budget);
    CandidateSink sink;
    sink.cap = spec.sparsity_cap;
    long cell_id = 0;
    for (const OrderedPartition& part : parts) {
        std::vector<std::vector<int>> groups = part.groups;
        if (absolute) {
            // Sign-0 columns sit at value zero (zero columns, or the cell
            // lies on their sign plane); no positive threshold admits them
            // and no sign pattern is defined for them.
            std::vector<std::vector<int>> kept;
            for (auto& g : groups) {
                std::vector<int> f;
                for (int i : g)
                    if (part.column_sign[i] != 0) f.push_back(i);
                if (!f.empty()) kept.push_back(std::move(f));
            }
            groups = std::move(kept);
        }
        Slots slots(groups);
        for (int p = 0; p <= slots.max_pos(); ++p) {
            if (sink.cap && slots.above(p) > *sink.cap) continue;
            std::vector<int> idx;
            std::vector<std::int8_t> signs;
            auto sign_of = [&](int i) {
                return absolute ? part.column_sign[i] : std::int8_t(1);
            };
            for (int g = 0; g < p / 2; ++g)
                for (int i : groups[g]) {
                    idx.push_back(i);
                    signs.push_back(sign_of(i));
                }
            if (p % 2 == 1) {
                const std::vector<int>& g = groups[p / 2];
                for (int t = 0; t <= static_cast<int>(g.size()); ++t) {
                    std::vector<int> idx2 = idx;
                    std::vector<std::int8_t> signs2 = signs;
                    for (int k = 0; k < t; ++k) {
                        idx2.push_back(g[k]);
                        signs2.push_back(sign_of(g[k]));
                    }
                    if (!(absolute && idx2.empty()))
                        sink.add(std::move(idx2), absolute ? std::move(signs2)
                                                           : std::vector<std::int8_t>{},
                                 cell_id, t, t);
                }
            } else {
                if (!(absolute && idx.empty()))
                    sink.add(std::move(idx), absolute ? std::move(signs)
                                                      : std::vector<std::int8_t>{},
                             cell_id, 0, 0);
            }
        }
        ++cell_id;
    }
    return sink.finish(static_cast<long>(parts.size()));
}

} // namespace

GenerationResult generate_supports_nonneg(const ProblemSpec& spec, const Tolerances& tol,
                                          const Budget& budget) {
    if (!std::holds_alternative<NonnegRegime>(spec.regime))
        throw InvalidInput("generate_supports_nonneg: wrong regime");
    const int r = static_cast<int>(spec.a.rows());
    const int n = static_cast<int>(spec.a.cols());
    if (r < 1 || n < 1) throw InvalidInput("generate_supports_nonneg: empty factor");

    // Threshold-augmented arrangement over (c, lambda): one plane per column
    // instead of one per pair, so high ranks stay tractable. Each cell fixes
    // which column values sit above, at, or below the threshold; the support
    // is the above-set plus an index prefix of the tied set (the feasible set
    // is symmetric in tied coordinates, so one representative per size).
    std::vector<Hyperplane> planes;
    planes.reserve(n);
    for (int i = 0; i < n; ++i) {
        Eigen::VectorXd nrm(r + 1);
        nrm.head(r) = spec.a.col(i);
        nrm[r] = -1.0;
        planes.push_back({nrm, 0.0});
    }
    auto cells = enumerate_cells(planes, r + 1, -1, tol, budget);

    CandidateSink sink;
    sink.cap = spec.sparsity_cap;
    long cell_id = 0;
    for (const CellWitness& cell : cells) {
        // The all-zero cell carries cost zero: nothing to rank.
        if (cell.witness.norm() <= tol.geom) continue;
        std::vector<int> above, tied;
        for (int i = 0; i < n; ++i) {
            if (cell.signs[i] > 0) above.push_back(i);
            else if (cell.signs[i] == 0) tied.push_back(i);
        }
        for (int k = 0; k <= static_cast<int>(tied.size()); ++k) {
            std::vector<int> idx = above;
            idx.insert(idx.end(), tied.begin(), tied.begin() + k);
            sink.add(std::move(idx), {}, cell_id, k, k);
        }
        ++cell_id;
    }
    return sink.finish(static_cast<long>(cells.size()));
}

GenerationResult generate_supports_signinv(const ProblemSpec& spec, const Tolerances& tol,
                                           const Budget& budget) {
    if (!std::holds_alternative<SignInvRegime>(spec.regime))
        throw InvalidInput("generate_supports_signinv: wrong regime");
    return threshold_sweep(spec, true, tol, budget);
}

GenerationResult generate_supports(const ProblemSpec& spec, const Tolerances& tol,
                                   const Budget& budget) {
    return std::visit(
        [&](const auto& regime) -> GenerationResult {
            using T = std::decay_t<decltype(regime)>;
            if constexpr (std::is_same_v<T, GeneralRegime>)
                return generate_supports_general(spec, tol, budget);
            else if constexpr (std::is_same_v<T, StandardRegime>)
                return generate_supports_standard(spec, tol, budget);
            else if constexpr (std::is_same_v<T, NonnegRegime>)
                return generate_supports_nonneg(spec, tol, budget);
            else
                return generate_supports_signinv(spec, tol, budget);
        },
        spec.regime);
}

} // namespace comax
