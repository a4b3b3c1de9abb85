#include "comax/comonotone/point_set.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <sstream>

#include "comax/errors.hpp"

namespace comax {

using Rational = boost::multiprecision::cpp_rational;

FinitePointSet FinitePointSet::from_points(std::vector<Eigen::VectorXd> pts) {
    if (pts.empty()) throw InvalidInput("FinitePointSet: empty");
    FinitePointSet s;
    s.dim = static_cast<int>(pts[0].size());
    for (const Eigen::VectorXd& p : pts) {
        if (static_cast<int>(p.size()) != s.dim)
            throw InvalidInput("FinitePointSet: mixed dimensions");
        bool dup = false;
        for (const Eigen::VectorXd& q : s.points)
            if (p == q) { dup = true; break; }
        if (!dup) s.points.push_back(p);
    }
    return s;
}

FinitePointSet FinitePointSet::from_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("FinitePointSet: cannot open " + path);
    std::vector<Eigen::VectorXd> pts;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string line = raw.substr(0, raw.find('#'));
        for (char& c : line)
            if (c == ',' || c == '\t') c = ' ';
        std::istringstream ss(line);
        std::vector<double> row;
        double v;
        while (ss >> v) row.push_back(v);
        if (row.empty()) continue;
        pts.push_back(Eigen::Map<Eigen::VectorXd>(row.data(), static_cast<long>(row.size())));
    }
    return from_points(std::move(pts));
}

std::vector<int> argmax_linear_indices(const FinitePointSet& set, const Eigen::VectorXd& v) {
    if (static_cast<int>(v.size()) != set.dim)
        throw InvalidInput("argmax_linear: dimension mismatch");
    std::vector<Rational> vals(set.points.size());
    for (size_t k = 0; k < set.points.size(); ++k) {
        Rational s = 0;
        for (int i = 0; i < set.dim; ++i)
            s += Rational(v[i]) * Rational(set.points[k][i]);
        vals[k] = s;
    }
    Rational best = vals[0];
    for (const Rational& r : vals) best = std::max(best, r);
    std::vector<int> out;
    for (size_t k = 0; k < vals.size(); ++k)
        if (vals[k] == best) out.push_back(static_cast<int>(k));
    return out;
}

std::vector<Eigen::VectorXd> argmax_linear(const FinitePointSet& set, const Eigen::VectorXd& v) {
    std::vector<Eigen::VectorXd> out;
    for (int k : argmax_linear_indices(set, v)) out.push_back(set.points[k]);
    return out;
}

} // namespace comax
