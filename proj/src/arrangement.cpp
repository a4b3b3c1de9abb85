#include "comax/arrangement/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "comax/errors.hpp"

namespace comax {

namespace {

struct CentralCell {
    std::vector<std::int8_t> signs;
    Eigen::VectorXd w;
};

int sign_of(double v, double tol) { return v > tol ? 1 : (v < -tol ? -1 : 0); }

// Orthonormal basis of the orthogonal complement of a unit vector.
Eigen::MatrixXd complement_basis(const Eigen::VectorXd& u) {
    const int d = static_cast<int>(u.size());
    Eigen::MatrixXd m(d, 1);
    m.col(0) = u;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
    Eigen::MatrixXd q = qr.householderQ();
    // First column of q is +-u; the rest span the complement.
    return q.rightCols(d - 1);
}

std::vector<CentralCell> central_cells_raw(const Eigen::MatrixXd& rows, double tol,
                                           long& cell_budget);

// rows: unit, pairwise non-parallel, full rank d >= 1.
std::vector<CentralCell> central_essential(const Eigen::MatrixXd& rows, double tol,
                                           long& cell_budget) {
    const int k = static_cast<int>(rows.rows());
    const int d = static_cast<int>(rows.cols());
    std::vector<CentralCell> out;
    auto spend = [&](long n) {
        if ((cell_budget -= n) < 0) throw BudgetExceeded("enumerate_cells: cell budget exhausted");
    };

    if (d == 1) {
        for (double s : {1.0, -1.0}) {
            CentralCell c;
            c.w = Eigen::VectorXd::Constant(1, s);
            c.signs.resize(k);
            for (int i = 0; i < k; ++i) c.signs[i] = static_cast<std::int8_t>(sign_of(rows(i, 0) * s, tol));
            out.push_back(std::move(c));
        }
        spend(2);
        return out;
    }

    if (d == 2) {
        std::vector<double> bounds;
        for (int i = 0; i < k; ++i) {
            double theta = std::atan2(rows(i, 1), rows(i, 0));
            for (double off : {M_PI / 2, -M_PI / 2}) {
                double a = std::fmod(theta + off + 4 * M_PI, 2 * M_PI);
                bounds.push_back(a);
            }
        }
        std::sort(bounds.begin(), bounds.end());
        bounds.erase(std::unique(bounds.begin(), bounds.end(),
                                 [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                     bounds.end());
        if (!bounds.empty() && bounds.back() - bounds.front() > 2 * M_PI - 1e-12)
            bounds.pop_back();
        const int nb = static_cast<int>(bounds.size());
        spend(nb);
        for (int s = 0; s < nb; ++s) {
            double a0 = bounds[s];
            double a1 = (s + 1 < nb) ? bounds[s + 1] : bounds[0] + 2 * M_PI;
            double mid = 0.5 * (a0 + a1);
            CentralCell c;
            c.w = Eigen::Vector2d(std::cos(mid), std::sin(mid));
            c.signs.resize(k);
            for (int i = 0; i < k; ++i)
                c.signs[i] = static_cast<std::int8_t>(sign_of(rows.row(i).dot(c.w), tol));
            out.push_back(std::move(c));
        }
        return out;
    }

    // d >= 3: every full cell of an essential central arrangement is a pointed
    // cone, hence has an extreme ray lying on d-1 independent planes. Scan
    // candidate rays and recurse on the quotient around each.
    std::set<std::vector<std::int8_t>> seen;
    std::vector<int> comb(d - 1);
    for (int i = 0; i < d - 1; ++i) comb[i] = i;
    auto advance = [&]() {
        int i = d - 2;
        while (i >= 0 && comb[i] == k - (d - 1) + i) --i;
        if (i < 0) return false;
        ++comb[i];
        for (int j = i + 1; j < d - 1; ++j) comb[j] = comb[j - 1] + 1;
        return true;
    };
    if (k < d - 1) throw InvalidInput("central_essential: rank inconsistency");
    do {
        Eigen::MatrixXd sub(d - 1, d);
        for (int i = 0; i < d - 1; ++i) sub.row(i) = rows.row(comb[i]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(sub);
        lu.setThreshold(tol);
        if (lu.rank() != d - 1) continue;
        Eigen::VectorXd u = lu.kernel().col(0).normalized();
        std::vector<int> on, off;
        Eigen::VectorXd dots = rows * u;
        for (int i = 0; i < k; ++i)
            (std::abs(dots[i]) <= tol ? on : off).push_back(i);
        Eigen::MatrixXd q = complement_basis(u);
        Eigen::MatrixXd proj(static_cast<int>(on.size()), d - 1);
        for (size_t i = 0; i < on.size(); ++i) proj.row(static_cast<int>(i)) = rows.row(on[i]) * q;
        double eps_num = 1.0;
        for (int i : off) eps_num = std::min(eps_num, std::abs(dots[i]));
        double eps = 0.5 * eps_num;

        std::vector<CentralCell> sub_cells = central_cells_raw(proj, tol, cell_budget);
        for (double s : {1.0, -1.0}) {
            for (const CentralCell& sc : sub_cells) {
                CentralCell c;
                c.signs.resize(k);
                for (int i : off) c.signs[i] = static_cast<std::int8_t>(dots[i] * s > 0 ? 1 : -1);
                bool interior = true;
                for (size_t i = 0; i < on.size(); ++i) {
                    if (sc.signs[i] == 0) interior = false;
                    c.signs[on[i]] = sc.signs[i];
                }
                if (!interior) continue;  // ray on a sub-boundary; covered elsewhere
                if (!seen.insert(c.signs).second) continue;
                Eigen::VectorXd dir = sc.w.size() > 0 ? Eigen::VectorXd(q * sc.w) : Eigen::VectorXd::Zero(d);
                c.w = (s * u + eps * dir).normalized();
                spend(1);
                out.push_back(std::move(c));
            }
        }
    } while (advance());
    return out;
}

// Arbitrary rows: dedupe zero/parallel rows, reduce to the essential rank,
// then enumerate. Output signs align with the input rows.
std::vector<CentralCell> central_cells_raw(const Eigen::MatrixXd& rows, double tol,
                                           long& cell_budget) {
    const int m = static_cast<int>(rows.rows());
    const int d = static_cast<int>(rows.cols());
    std::vector<int> cls(m, -1);       // -1 = zero row
    std::vector<double> orient(m, 0);  // sign vs class representative
    std::vector<int> reps;
    for (int i = 0; i < m; ++i) {
        double nrm = rows.row(i).norm();
        if (nrm <= tol) continue;
        Eigen::VectorXd u = rows.row(i).transpose() / nrm;
        bool matched = false;
        for (size_t c = 0; c < reps.size(); ++c) {
            double dot = u.dot(rows.row(reps[c]).transpose().normalized());
            if (std::abs(std::abs(dot) - 1.0) <= 1e-9) {
                cls[i] = static_cast<int>(c);
                orient[i] = dot > 0 ? 1.0 : -1.0;
                matched = true;
                break;
            }
        }
        if (!matched) {
            cls[i] = static_cast<int>(reps.size());
            orient[i] = 1.0;
            reps.push_back(i);
        }
    }

    std::vector<CentralCell> out;
    if (reps.empty()) {
        CentralCell c;
        c.signs.assign(m, 0);
        c.w = d > 0 ? Eigen::VectorXd::Unit(d, 0) : Eigen::VectorXd();
        if (--cell_budget < 0) throw BudgetExceeded("enumerate_cells: cell budget exhausted");
        out.push_back(std::move(c));
        return out;
    }

    Eigen::MatrixXd r(static_cast<int>(reps.size()), d);
    for (size_t c = 0; c < reps.size(); ++c)
        r.row(static_cast<int>(c)) = rows.row(reps[c]).normalized();

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(r.transpose());
    qr.setThreshold(tol);
    const int rank = static_cast<int>(qr.rank());
    Eigen::MatrixXd basis = Eigen::MatrixXd(qr.householderQ()).leftCols(rank);
    Eigen::MatrixXd red = r * basis;
    for (int i = 0; i < red.rows(); ++i) red.row(i).normalize();

    std::vector<CentralCell> cells = central_essential(red, tol, cell_budget);
    for (CentralCell& cc : cells) {
        CentralCell c;
        c.w = basis * cc.w;
        c.signs.resize(m);
        for (int i = 0; i < m; ++i) {
            if (cls[i] < 0) c.signs[i] = 0;
            else c.signs[i] = static_cast<std::int8_t>(orient[i] > 0 ? cc.signs[cls[i]] : -cc.signs[cls[i]]);
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Full-dimensional cells of an affine arrangement; rows normalized so that
// the normal part is unit length. Central inputs skip the homogenization.
std::vector<CellWitness> affine_full_cells(const std::vector<Hyperplane>& planes,
                                           int dim, double tol, long& cell_budget) {
    const int m = static_cast<int>(planes.size());
    std::vector<CellWitness> out;
    bool central = true;
    for (const Hyperplane& h : planes) central = central && std::abs(h.offset) <= tol;

    if (central) {
        Eigen::MatrixXd rows(m, dim);
        for (int i = 0; i < m; ++i) rows.row(i) = planes[i].normal.transpose();
        for (CentralCell& c : central_cells_raw(rows, tol, cell_budget)) {
            CellWitness cw;
            cw.signs = std::move(c.signs);
            cw.witness = std::move(c.w);
            cw.dim = dim;
            out.push_back(std::move(cw));
        }
        return out;
    }

    Eigen::MatrixXd rows(m + 1, dim + 1);
    for (int i = 0; i < m; ++i) {
        rows.block(i, 0, 1, dim) = planes[i].normal.transpose();
        rows(i, dim) = -planes[i].offset;
    }
    rows.row(m).setZero();
    rows(m, dim) = 1.0;
    for (CentralCell& c : central_cells_raw(rows, tol, cell_budget)) {
        if (c.signs[m] != 1) continue;
        CellWitness cw;
        cw.signs.assign(c.signs.begin(), c.signs.begin() + m);
        cw.witness = c.w.head(dim) / c.w[dim];
        cw.dim = dim;
        out.push_back(std::move(cw));
    }
    return out;
}

struct NormalizedPlane {
    Eigen::VectorXd normal;  // unit
    double offset;
};

struct Flat {
    Eigen::VectorXd origin;
    Eigen::MatrixXd basis;      // dim x fd, orthonormal
    std::vector<int> closure;   // sorted class indices containing the flat
};

} // namespace

std::vector<CellWitness> enumerate_cells(const std::vector<Hyperplane>& planes,
                                         int dim, int max_codim,
                                         const Tolerances& tol, const Budget& budget) {
    if (dim < 1) throw InvalidInput("enumerate_cells: dimension must be positive");
    if (dim > budget.max_dim) throw BudgetExceeded("enumerate_cells: dimension over budget");
    if (static_cast<int>(planes.size()) > budget.max_planes)
        throw BudgetExceeded("enumerate_cells: plane count over budget");
    const double eps = tol.geom;
    long cell_budget = budget.max_cells;

    const int m = static_cast<int>(planes.size());
    std::vector<NormalizedPlane> norm(m);
    for (int i = 0; i < m; ++i) {
        if (planes[i].normal.size() != dim)
            throw InvalidInput("enumerate_cells: normal dimension mismatch");
        double nrm = planes[i].normal.norm();
        if (nrm <= eps) throw InvalidInput("enumerate_cells: zero normal");
        norm[i] = {planes[i].normal / nrm, planes[i].offset / nrm};
    }

    // Merge coincident planes into classes.
    std::vector<int> cls(m);
    std::vector<int> class_rep;
    std::vector<double> orient(m);
    for (int i = 0; i < m; ++i) {
        int found = -1;
        double sgn = 1.0;
        for (size_t c = 0; c < class_rep.size(); ++c) {
            const NormalizedPlane& p = norm[class_rep[c]];
            for (double s : {1.0, -1.0}) {
                if ((norm[i].normal - s * p.normal).cwiseAbs().maxCoeff() <= eps &&
                    std::abs(norm[i].offset - s * p.offset) <= eps) {
                    found = static_cast<int>(c);
                    sgn = s;
                    break;
                }
            }
            if (found >= 0) break;
        }
        if (found < 0) {
            found = static_cast<int>(class_rep.size());
            class_rep.push_back(i);
            sgn = 1.0;
        }
        cls[i] = found;
        orient[i] = sgn;
    }
    const int nc = static_cast<int>(class_rep.size());

    auto expand_signs = [&](const std::vector<std::int8_t>& class_signs) {
        std::vector<std::int8_t> raw(m);
        for (int i = 0; i < m; ++i)
            raw[i] = static_cast<std::int8_t>(orient[i] > 0 ? class_signs[cls[i]]
                                                            : -class_signs[cls[i]]);
        return raw;
    };

    std::vector<CellWitness> out;

    // Codim 0: the full-dimensional cells.
    {
        std::vector<Hyperplane> cp(nc);
        for (int c = 0; c < nc; ++c)
            cp[c] = {norm[class_rep[c]].normal, norm[class_rep[c]].offset};
        for (CellWitness& cw : affine_full_cells(cp, dim, eps, cell_budget)) {
            CellWitness g;
            g.signs = expand_signs(cw.signs);
            g.witness = std::move(cw.witness);
            g.dim = dim;
            out.push_back(std::move(g));
        }
    }

    const int deepest = (max_codim < 0) ? dim : std::min(max_codim, dim);

    // Flats by increasing codimension; a flat is keyed by its closure (the
    // set of classes containing it), which identifies it uniquely.
    std::vector<Flat> level;
    std::set<std::vector<int>> seen_flats;
    auto closure_of = [&](const Eigen::VectorXd& p0, const Eigen::MatrixXd& basis) {
        std::vector<int> cl;
        for (int c = 0; c < nc; ++c) {
            const NormalizedPlane& p = norm[class_rep[c]];
            bool tangent = basis.cols() == 0 ||
                           (basis.transpose() * p.normal).cwiseAbs().maxCoeff() <= eps;
            if (tangent && std::abs(p.normal.dot(p0) - p.offset) <= eps) cl.push_back(c);
        }
        return cl;
    };

    for (int c = 0; c < nc && deepest >= 1; ++c) {
        const NormalizedPlane& p = norm[class_rep[c]];
        Flat f;
        f.origin = p.normal * p.offset;
        f.basis = complement_basis(p.normal);
        f.closure = closure_of(f.origin, f.basis);
        if (seen_flats.insert(f.closure).second) level.push_back(std::move(f));
    }

    for (int codim = 1; codim <= deepest; ++codim) {
        std::vector<Flat> next;
        for (const Flat& f : level) {
            const int fd = dim - codim;
            // Induced arrangement on the flat.
            std::vector<Hyperplane> induced;
            std::vector<int> induced_class;
            std::vector<std::pair<int, std::int8_t>> constant;  // class -> sign
            for (int c = 0; c < nc; ++c) {
                if (std::binary_search(f.closure.begin(), f.closure.end(), c)) continue;
                const NormalizedPlane& p = norm[class_rep[c]];
                Eigen::VectorXd nn = f.basis.transpose() * p.normal;
                double bb = p.offset - p.normal.dot(f.origin);
                if (nn.norm() <= eps) {
                    constant.push_back({c, static_cast<std::int8_t>(sign_of(-bb, eps))});
                } else {
                    induced.push_back({nn, bb});
                    induced_class.push_back(c);
                }
            }

            std::vector<std::vector<std::int8_t>> cell_class_signs;
            std::vector<Eigen::VectorXd> cell_witness;
            if (fd == 0) {
                cell_class_signs.push_back({});
                cell_witness.push_back(Eigen::VectorXd());
                if (--cell_budget < 0) throw BudgetExceeded("enumerate_cells: cell budget exhausted");
            }
            std::vector<CellWitness> sub;
            if (fd > 0) sub = affine_full_cells(induced, fd, eps, cell_budget);

            auto emit = [&](const std::vector<std::int8_t>& isigns, const Eigen::VectorXd& local) {
                std::vector<std::int8_t> class_signs(nc, 0);
                for (int c : f.closure) class_signs[c] = 0;
                for (auto& [c, s] : constant) class_signs[c] = s;
                for (size_t k = 0; k < induced_class.size(); ++k)
                    class_signs[induced_class[k]] = isigns.empty() ? 0 : isigns[k];
                CellWitness g;
                g.signs = expand_signs(class_signs);
                g.witness = local.size() > 0 ? Eigen::VectorXd(f.origin + f.basis * local)
                                             : f.origin;
                g.dim = fd;
                out.push_back(std::move(g));
            };
            if (fd == 0) {
                emit({}, Eigen::VectorXd());
            } else {
                for (CellWitness& cw : sub) emit(cw.signs, cw.witness);
            }

            // Children flats for the next level.
            if (codim < deepest && fd >= 1) {
                for (size_t k = 0; k < induced.size(); ++k) {
                    const Eigen::VectorXd nn = induced[k].normal.normalized();
                    double bb = induced[k].offset / induced[k].normal.norm();
                    Eigen::VectorXd y0 = nn * bb;
                    Flat child;
                    child.origin = f.origin + f.basis * y0;
                    child.basis = fd > 1 ? Eigen::MatrixXd(f.basis * complement_basis(nn))
                                         : Eigen::MatrixXd(dim, 0);
                    child.closure = closure_of(child.origin, child.basis);
                    if (seen_flats.insert(child.closure).second) next.push_back(std::move(child));
                }
            }
        }
        level = std::move(next);
    }

    std::sort(out.begin(), out.end(), [](const CellWitness& a, const CellWitness& b) {
        return a.signs < b.signs;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const CellWitness& a, const CellWitness& b) {
                              return a.signs == b.signs;
                          }),
              out.end());
    return out;
}

FlatRestriction restrict_to_flat(const std::vector<Hyperplane>& planes, int dim,
                                 const std::vector<int>& active, const Tolerances& tol) {
    const double eps = tol.geom;
    const int m = static_cast<int>(planes.size());
    if (active.empty()) throw InvalidInput("restrict_to_flat: empty active set");
    for (int i : active)
        if (i < 0 || i >= m) throw InvalidInput("restrict_to_flat: active index out of range");

    Eigen::MatrixXd n(static_cast<int>(active.size()), dim);
    Eigen::VectorXd b(static_cast<int>(active.size()));
    for (size_t k = 0; k < active.size(); ++k) {
        double nrm = planes[active[k]].normal.norm();
        if (nrm <= eps) throw InvalidInput("restrict_to_flat: zero normal");
        n.row(static_cast<int>(k)) = planes[active[k]].normal.transpose() / nrm;
        b[static_cast<int>(k)] = planes[active[k]].offset / nrm;
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(n);
    qr.setThreshold(eps);
    if (static_cast<int>(qr.rank()) != n.rows())
        throw DependentActiveSet("restrict_to_flat: active normals are dependent");

    FlatRestriction fr;
    fr.origin = n.colPivHouseholderQr().solve(b);
    // Null space of n spans the flat directions.
    Eigen::FullPivLU<Eigen::MatrixXd> lu(n);
    lu.setThreshold(eps);
    if (lu.dimensionOfKernel() == 0) {
        fr.basis = Eigen::MatrixXd(dim, 0);
    } else {
        Eigen::MatrixXd ker = lu.kernel();
        Eigen::HouseholderQR<Eigen::MatrixXd> kq(ker);
        fr.basis = Eigen::MatrixXd(kq.householderQ()).leftCols(ker.cols());
    }

    fr.plane_map.assign(m, -1);
    fr.constant_sign.assign(m, 0);
    for (int i = 0; i < m; ++i) {
        double nrm = planes[i].normal.norm();
        Eigen::VectorXd u = planes[i].normal / nrm;
        double off = planes[i].offset / nrm;
        Eigen::VectorXd nn = fr.basis.transpose() * u;
        double resid = u.dot(fr.origin) - off;
        if (nn.norm() <= eps) {
            if (std::abs(resid) <= eps) {
                fr.plane_map[i] = -2;  // contains the flat
            } else {
                fr.plane_map[i] = -3;  // disjoint
                fr.constant_sign[i] = static_cast<std::int8_t>(resid > 0 ? 1 : -1);
            }
            continue;
        }
        // Deduplicate coincident induced planes.
        Hyperplane cand{nn / nn.norm(), -resid / nn.norm()};
        int hit = -1;
        for (size_t k = 0; k < fr.induced.size(); ++k) {
            for (double s : {1.0, -1.0}) {
                if ((fr.induced[k].normal - s * cand.normal).cwiseAbs().maxCoeff() <= eps &&
                    std::abs(fr.induced[k].offset - s * cand.offset) <= eps) {
                    hit = static_cast<int>(k);
                    break;
                }
            }
            if (hit >= 0) break;
        }
        if (hit < 0) {
            hit = static_cast<int>(fr.induced.size());
            fr.induced.push_back(cand);
        }
        fr.plane_map[i] = hit;
    }
    return fr;
}

} // namespace comax
